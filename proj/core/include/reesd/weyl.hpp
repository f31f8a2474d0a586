#pragma once

#include <array>

#include "reesd/poly.hpp"

namespace reesd {

// Operators live in D[T1,T2,T3], D the rational Weyl algebra in x1, x2.
// Exponent layout: (x1, x2, D1, D2, T1, T2, T3), D_i the partial derivative;
// T's are central. Normal order: x before D.
inline constexpr int kWeylVars = 7;
inline constexpr int WX1 = 0, WX2 = 1, WD1 = 2, WD2 = 3, WT1 = 4, WT2 = 5, WT3 = 6;

struct WeylTerm {
  ExpVec mono;  // 7 exponents
  Rational coef;
};

// Weight data for the V-filtration style grading: x_i carries u_i, D_i
// carries -u_i, T's carry 0.
struct WeightSpec {
  std::array<long, 2> u = {1, 1};

  long weight_of(const ExpVec& m) const {
    return u[0] * (static_cast<long>(m[WX1]) - m[WD1]) +
           u[1] * (static_cast<long>(m[WX2]) - m[WD2]);
  }
};

class WeylOp {
 public:
  WeylOp() = default;
  explicit WeylOp(std::vector<WeylTerm> terms);  // normalizes

  static WeylOp zero() { return WeylOp(); }
  static WeylOp constant(const Rational& c);
  static WeylOp monomial(const ExpVec& e, const Rational& c = 1);
  static WeylOp generator(int var);  // one of WX1..WT3

  const std::vector<WeylTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  WeylOp operator-() const;
  WeylOp operator+(const WeylOp& o) const;
  WeylOp operator-(const WeylOp& o) const;
  WeylOp scaled(const Rational& c) const;
  bool operator==(const WeylOp& o) const { return cmp_terms(o) == 0; }
  bool operator!=(const WeylOp& o) const { return cmp_terms(o) != 0; }

  // True when every term has zero T-degree (element of D).
  bool t_free() const;
  // True when every term has zero x- and T-degree.
  bool pure_derivative() const;
  long total_degree() const;

  bool is_weight_homogeneous(const WeightSpec& w) const;

  std::string str() const;

 private:
  int cmp_terms(const WeylOp& o) const;
  std::vector<WeylTerm> terms_;  // sorted descending, canonical order
};

// Product in the Weyl algebra (noncommutative; T's central).
WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);

// Algebra automorphism x_i -> D_i, D_i -> -x_i, T -> T.
WeylOp fourier(const WeylOp& a);

// Standard transposition: anti-automorphism fixing x and T, D_i -> -D_i.
WeylOp transpose_std(const WeylOp& a);

// Terms of maximal weight.
WeylOp initial_form(const WeylOp& a, const WeightSpec& w);

// Left action on a polynomial (x_i, T_i multiply; D_i differentiates).
// The polynomial's ring must contain every variable the operator touches.
CommPoly weyl_act(const WeylOp& a, const CommPoly& f);

// Embeds a polynomial in x1,x2,T1..T3 as a multiplication operator.
WeylOp weyl_from_poly(const CommPoly& p);

// Extracts a T-free operator as a polynomial in D1,D2 -> given ring's
// x1,x2 slots (used to move Fourier images back to the base ring).
CommPoly derivative_part_to_poly(const WeylOp& a, const RingCtx& target);

struct WeylVector {
  std::vector<WeylOp> comps;

  bool is_zero() const;
  long ncomps() const { return static_cast<long>(comps.size()); }
};

// Terms compared: optional component-first ranking, optional weight
// refinement, then total-degree reverse-lex over (T1,T2,T3,D1,D2,x1,x2)
// (restricting to (D1,D2,x1,x2) on T-free data), then component ranking.
struct WeylOrder {
  bool position_first = false;
  bool use_weight = false;
  WeightSpec weights;
  std::vector<int> comp_rank;  // smaller rank compares greater; empty = identity

  static WeylOrder term_order();                       // degree-compatible, TOP
  static WeylOrder weighted(WeightSpec w);             // weight-refined
  static WeylOrder component_elim(int ncomps, int target);  // target component last
};

int weyl_term_cmp(const WeylOrder& ord, const ExpVec& a, int ca, const ExpVec& b, int cb);

}  // namespace reesd
