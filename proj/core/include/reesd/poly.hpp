#pragma once

#include <optional>
#include <vector>

#include "reesd/ring.hpp"

namespace reesd {

struct Term {
  ExpVec mono;
  Rational coef;
};

// Sparse polynomial over Q. Canonical form: nonzero coefficients only, terms
// sorted descending under the ring's degrevlex; equality and printing rely
// on that.
class CommPoly {
 public:
  CommPoly() = default;
  explicit CommPoly(RingCtx ctx) : ctx_(std::move(ctx)) {}
  CommPoly(RingCtx ctx, std::vector<Term> terms);  // normalizes

  static CommPoly zero(RingCtx ctx) { return CommPoly(std::move(ctx)); }
  static CommPoly constant(RingCtx ctx, const Rational& c);
  static CommPoly monomial(RingCtx ctx, const ExpVec& e, const Rational& c = 1);
  static CommPoly variable(const RingCtx& ctx, std::string_view name);

  const RingCtx& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long num_terms() const { return static_cast<long>(terms_.size()); }

  // Leading data under the canonical degrevlex.
  const Term& leading_term() const;

  CommPoly operator-() const;
  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly scaled(const Rational& c) const;
  CommPoly shifted(const ExpVec& m) const;  // multiply by a monomial
  bool operator==(const CommPoly& o) const;
  bool operator!=(const CommPoly& o) const { return !(*this == o); }

  // Exact division; nullopt when the remainder is nonzero.
  std::optional<CommPoly> divided_by(const CommPoly& d) const;

  CommPoly derivative(int var) const;
  long degree() const;  // total degree, -1 for zero
  bool is_homogeneous() const;

  // (p, q) when bihomogeneous; nullopt when mixed. Throws on zero.
  std::optional<std::pair<long, long>> bidegree() const;

  // gcd of all coefficients with the sign of the leading one; 1 for zero.
  Rational content() const;
  CommPoly primitive_part() const;  // integer coefficients, positive lead
  CommPoly monic() const;

  // Rebuilds the polynomial in `target`, matching variables by name.
  // Throws when a used variable is absent from the target.
  CommPoly mapped_to(const RingCtx& target) const;

  std::string str() const;

  // Total order for canonical sorting of polynomial lists: zero first, then
  // termwise (monomial under degrevlex, then coefficient).
  static int compare(const CommPoly& a, const CommPoly& b);

 private:
  RingCtx ctx_;
  std::vector<Term> terms_;
};

// Element of a free module R^k with optional per-component degree shifts.
struct CommVector {
  std::vector<CommPoly> comps;

  bool is_zero() const;
  long ncomps() const { return static_cast<long>(comps.size()); }
};

// Euclidean gcd of homogeneous bivariate polynomials (monic result);
// used by input validation.
CommPoly homogeneous_gcd(const CommPoly& a, const CommPoly& b);

}  // namespace reesd
