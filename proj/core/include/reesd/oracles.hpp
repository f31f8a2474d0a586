#pragma once

#include <map>

#include "reesd/bfunction.hpp"
#include "reesd/linalg.hpp"

namespace reesd {

// Solutions in local cohomology: dimension of
//   { w in U_{p-2} (x) H^2_m(R)_{q-d} : g1 w = 0 and g2 w = 0 },
// with multiplication truncated to strictly negative exponents. Equals
// dim K_{p,q}.
long local_cohomology_solution_dim(const HilbertBurchData& hb, long p, long q);

// Polynomial solutions of the restriction matrices: dimension of the space of
// vectors h in R^m, entries homogeneous of degree d-2-q, with
// sum_g [L_i]_{delta,gamma} . h_gamma = 0 for every row delta and i = 1, 2.
// Equals dim K_{p,q}.
long polynomial_solution_dim(const RestrictionSystem& sys, long q);

// Graded dimensions of the Fourier-dual module L = R^m / (rows of F).
// dim L_k = dim K_{p, d-2-k}; finite length is verified.
struct DualityReport {
  long p = 0;
  std::vector<long> dims;  // dim L_k for k = 0..end
  long end = -1;           // last nonzero degree; -1 for the zero module
};

DualityReport dual_module_graded_dims(const RestrictionSystem& sys);

// Truncated de Rham kernel of the level-p quotient Q_p of D[T] by the left
// multiples of L1, L2: elements w of (operator) degree <= N with
// d1 . w = 0 and d2 . w = 0 exactly. The kernel dimension is monotone in N
// and reaches dim K_{p,*} once N passes every kernel element's degree.
struct DeRhamResult {
  long p = 0;
  long N = 0;           // truncation degree used
  bool stabilized = false;  // dim at N equals dim at N-1
  long dim = 0;
  // Kernel split along the weight grading (x-degree minus derivative degree);
  // weight w collects dim K_{p,-w}.
  std::map<long, long> dim_by_weight;
};

DeRhamResult derham_h0_truncated(const RestrictionSystem& sys, long N);

// Schedule: N = d + p, then doubling, clamped to `budget`.
DeRhamResult derham_h0(const RestrictionSystem& sys, long budget);

}  // namespace reesd
