#pragma once

#include <cstdint>
#include <map>

#include "reesd/groebner.hpp"

namespace reesd {

// Base ring R = Q[x1,x2], x-bidegree (0,1).
RingCtx base_ring();
// S = R[T1,T2,T3], T-bidegree (1,0); houses symmetric/Rees equations.
RingCtx sym_ring();

// Input contract for the pipeline: three nonzero forms of one degree d >= 1,
// height two (coprime), minimally generating. Throws std::invalid_argument
// with a specific reason otherwise.
void validate_input(const std::vector<CommPoly>& f);

struct HilbertBurchData {
  std::vector<CommPoly> f;           // three forms of degree d in base_ring
  long d = 0;
  long mu = 0;                       // column degrees (mu, d - mu), 0 < mu <= d - mu
  std::vector<CommVector> phi;       // two syzygy columns, three entries each
  CommPoly g1, g2;                   // [T1 T2 T3] * phi, monic, bidegrees (1,mu), (1,d-mu)
};

// Syzygy matrix and symmetric-algebra equations of a validated input.
HilbertBurchData hilbert_burch(const std::vector<CommPoly>& f);

std::pair<CommPoly, CommPoly> symmetric_equations(const HilbertBurchData& hb);

enum class ReesRoute { Elimination, Saturation };

// Reduced degrevlex basis of the Rees ideal in S, via Rees-tag elimination
// or torsion saturation (g1,g2) : (x1,x2)^inf.
GroebnerBasis rees_ideal(const HilbertBurchData& hb, ReesRoute route);

struct BigradedTable {
  long pmax = 0;
  long d = 0;
  // dim_Q K_{p,q} for p in [2, pmax], q in [0, d-2].
  std::map<std::pair<long, long>, long> k_dim;
  // Bidegrees of a minimal generating set of the Rees ideal, with
  // multiplicity, sorted.
  std::vector<std::pair<long, long>> min_gens;

  long k(long p, long q) const {
    auto it = k_dim.find({p, q});
    return it == k_dim.end() ? 0 : it->second;
  }
};

// K = REQ/(g1,g2) dimensions plus Nakayama minimal-generator counts.
BigradedTable k_table(const HilbertBurchData& hb, const GroebnerBasis& req, long pmax);

struct RandomIdealResult {
  std::vector<CommPoly> f;
  int rejections = 0;
};

// Deterministic random height-two ideal: 3x2 matrix of dense forms of degrees
// (mu, d-mu) with coefficients uniform in [-bound,bound]\{0} (splitmix64-v1
// stream, column-major, ascending y-exponent), signed row minors as f.
RandomIdealResult random_hb_ideal(long mu, long d, std::uint64_t seed, long bound);

}  // namespace reesd
