#pragma once

#include <string>
#include <vector>

#include "reesd/poly.hpp"

namespace reesd {

// Reduced Groebner basis of an ideal or submodule of R^ncomps. Generators are
// monic, fully tail-reduced, sorted ascending by leading term; `leads` caches
// (leading monomial, component) under `order`.
struct GroebnerBasis {
  RingCtx ctx;
  int ncomps = 1;
  ModuleOrder order;
  bool reduced = false;
  std::vector<CommVector> gens;
  std::vector<std::pair<ExpVec, int>> leads;

  std::vector<CommPoly> ideal_gens() const;  // requires ncomps == 1
};

GroebnerBasis groebner_basis(const std::vector<CommPoly>& gens, const RingCtx& ctx,
                             MonomialOrder ord = MonomialOrder::degrevlex());

GroebnerBasis groebner_module(const std::vector<CommVector>& gens, const RingCtx& ctx,
                              int ncomps, ModuleOrder ord);

CommPoly normal_form(const CommPoly& f, const GroebnerBasis& gb);
CommVector normal_form(const CommVector& v, const GroebnerBasis& gb);

bool in_span(const CommPoly& f, const GroebnerBasis& gb);

// Re-checks the Buchberger criterion on a finished basis.
bool certify_groebner(const GroebnerBasis& gb);

// Minimal homogeneous generating set of the syzygies of `row` (entries
// homogeneous of equal degree). Columns have primitive integer entries with
// canonical sign, sorted by ascending degree then canonical entry order.
std::vector<CommVector> syzygy_module(const std::vector<CommPoly>& row, const RingCtx& ctx);

// Generators (a reduced GB) of the contraction of (gens) to the subring
// without the `block` variables, returned in that smaller ring.
std::vector<CommPoly> eliminate(const std::vector<CommPoly>& gens, const RingCtx& ctx,
                                const std::vector<std::string>& block);

// I : J^infinity, returned as a reduced GB in the original ring.
std::vector<CommPoly> saturate(const std::vector<CommPoly>& ideal, const RingCtx& ctx,
                               const std::vector<CommPoly>& by);

// dim_Q (R / ideal)_{p,q}; gb must be an ideal basis.
long bigraded_dim(const GroebnerBasis& gb, long p, long q);

// Monomials of bidegree (p,q) not divisible by any leading monomial.
std::vector<ExpVec> standard_monomials(const GroebnerBasis& gb, long p, long q);

// dim_Q (⊕_c R(-shift_c) / module)_k under total degree.
long module_graded_dim(const GroebnerBasis& gb, const std::vector<long>& shifts, long k);

// Krull dimension of R^ncomps / (leading-term module); -1 for the zero
// quotient.
int monomial_quotient_krull_dim(const GroebnerBasis& gb);

}  // namespace reesd
