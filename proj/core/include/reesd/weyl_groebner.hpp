#pragma once

#include "reesd/weyl.hpp"

namespace reesd {

struct WeylBasis {
  int ncomps = 1;
  WeylOrder order;
  bool reduced = false;
  std::vector<WeylVector> gens;  // monic, tail-reduced, sorted ascending by lead
  std::vector<std::pair<ExpVec, int>> leads;
};

// Left Groebner basis of the submodule of D[T]^ncomps generated by `gens`.
// Weight-refined orders require weight-homogeneous generators (each vector's
// terms share one weight); other inputs are rejected.
WeylBasis weyl_module_gb(const std::vector<WeylVector>& gens, int ncomps, WeylOrder ord);

WeylBasis weyl_ideal_gb(const std::vector<WeylOp>& gens, WeylOrder ord);

WeylVector weyl_normal_form(const WeylVector& v, const WeylBasis& gb);
WeylOp weyl_normal_form(const WeylOp& f, const WeylBasis& gb);

// Post-hoc left Buchberger criterion check.
bool weyl_certify(const WeylBasis& gb);

}  // namespace reesd
