#pragma once

#include "reesd/rees.hpp"
#include "reesd/weyl_groebner.hpp"

namespace reesd {

// Univariate polynomial in s over Q, coefficients by ascending degree.
struct UniPoly {
  std::vector<Rational> c;

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Rational eval(const Rational& s) const;
  UniPoly monic() const;
  std::string str(const std::string& var = "s") const;
};

UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd_monic(UniPoly a, UniPoly b);
UniPoly uni_lcm_monic(const UniPoly& a, const UniPoly& b);
// Quotient when the division is exact.
std::optional<UniPoly> uni_div_exact(const UniPoly& a, const UniPoly& b);

// Integer roots with multiplicity (ascending) plus the root-free remainder.
std::pair<std::vector<std::pair<long, int>>, UniPoly> integer_roots(const UniPoly& b);

// "(s)(s + 1)^2(s - 3)" style; non-integer leftovers append "[...]".
std::string factored_bfunction(const UniPoly& b);

// Graded pieces of the two symmetric equations acting on T-degree p data:
// matrices over D indexed by T-monomials, their stacked rows generating
// N <= D^m, and the Fourier-dual rows over R.
struct RestrictionSystem {
  long p = 0;
  long d = 0;
  long mu = 0;
  int m = 0;                             // T-monomials of degree p-2
  int n = 0;                             // T-monomials of degree p-1
  std::vector<ExpVec> src, dest;         // T-exponent triples, lex desc (T1>T2>T3)
  std::vector<std::vector<WeylOp>> L1m, L2m;  // n x m, pure derivative entries
  std::vector<WeylVector> rows;          // 2n generators of N
  std::vector<CommVector> dual_rows;     // Fourier images, entries in base_ring
  WeylOp L1, L2;                         // the operators themselves
  // coeff[i][k]: T_k-coefficient of L_{i+1} (x_j -> D_j image of phi entry).
  std::array<std::array<WeylOp, 3>, 2> coeff;
};

// T-exponent triples of total degree k, lexicographically descending.
std::vector<ExpVec> t_monomials(long k);

RestrictionSystem restriction_matrices(const HilbertBurchData& hb, long p);

// Generators of J_i = {P : P e_i in N + sum_{j != i} D e_j}... precisely the
// i-th coordinates of N ∩ D e_i, via position-elimination.
std::vector<WeylOp> component_ideal(const RestrictionSystem& sys, int i);

// Minimal monic b(s), s = -(u1 x1 D1 + u2 x2 D2), with b(s) in the weight
// initial ideal of D*gens. Throws on the degree cap.
UniPoly ideal_bfunction(const std::vector<WeylOp>& gens, const WeightSpec& w, long cap);

struct BFunctionResult {
  long p = 0;
  UniPoly b;                            // lcm over components
  std::vector<UniPoly> per_component;
  std::vector<std::pair<long, int>> roots;  // integer roots, multiplicity
  bool all_roots_integer = true;
};

BFunctionResult module_bfunction(const RestrictionSystem& sys, long cap);

// Bernstein dimension = 2 on every nonzero component of D^m / N.
bool holonomicity_check(const RestrictionSystem& sys);

// q-support predicted by the roots: q = root + d - 2, restricted to [0, d-2].
std::vector<long> theorem_b_support(const BFunctionResult& bf, long d);

struct TheoremBReport {
  long p = 0;
  bool support_match = false;   // roots <-> nonzero K_{p,q}
  bool product_match = false;   // b = prod (s + d - 2 - q), all simple
  std::vector<long> expected_q, got_q;
};

TheoremBReport verify_theorem_b(const BigradedTable& table, const BFunctionResult& bf);

}  // namespace reesd
