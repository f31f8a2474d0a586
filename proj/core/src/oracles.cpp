#include "reesd/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "reesd/weyl_groebner.hpp"

namespace reesd {

long local_cohomology_solution_dim(const HilbertBurchData& hb, long p, long q) {
  if (p < 2) return 0;
  const long a_total = hb.d - q;  // inverse monomials x1^{-a1} x2^{-a2}, |a| = d - q
  if (a_total < 2) return 0;
  const std::vector<ExpVec> gammas = t_monomials(p - 2);
  const std::vector<ExpVec> deltas = t_monomials(p - 1);

  // Domain basis: (gamma, a1) with a1 in [1, a_total - 1].
  const long a_count = a_total - 1;
  const long domain = static_cast<long>(gammas.size()) * a_count;

  std::map<std::tuple<int, int, long>, int> col_of;  // (i, delta index, c1) -> column
  auto column = [&](int i, int di, long c1) {
    auto [it, fresh] = col_of.try_emplace({i, di, c1}, static_cast<int>(col_of.size()));
    (void)fresh;
    return it->second;
  };

  std::map<ExpVec, int, bool (*)(const ExpVec&, const ExpVec&)> delta_index(
      [](const ExpVec& a, const ExpVec& b) {
        for (int j = 0; j < 3; ++j)
          if (a[j] != b[j]) return a[j] < b[j];
        return false;
      });
  for (std::size_t r = 0; r < deltas.size(); ++r)
    delta_index.emplace(deltas[r], static_cast<int>(r));

  std::vector<SparseRow> rows;
  for (std::size_t gi = 0; gi < gammas.size(); ++gi)
    for (long a1 = 1; a1 < a_total; ++a1) {
      const long a2 = a_total - a1;
      std::map<int, Rational> acc;
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 3; ++k) {
          const CommPoly& phik = hb.phi[static_cast<std::size_t>(i)]
                                     .comps[static_cast<std::size_t>(k)];
          if (phik.is_zero()) continue;
          ExpVec delta = gammas[gi];
          delta.set(k, delta[k] + 1);
          const int di = delta_index.at(delta);
          for (const auto& t : phik.terms()) {
            // x^b * x^{-a}: survives when both resulting exponents stay <= -1.
            const long c1 = a1 - t.mono[0];
            const long c2 = a2 - t.mono[1];
            if (c1 < 1 || c2 < 1) continue;
            acc[column(i, di, c1)] += t.coef;
          }
        }
      SparseRow row;
      for (const auto& [c, v] : acc)
        if (!is_zero(v)) row.push_back({c, v});
      rows.push_back(std::move(row));
    }

  SparseMatrix m;
  m.ncols = static_cast<int>(col_of.size());
  for (auto& r : rows) m.add_row(std::move(r));
  return domain - rank_of(m);
}

long polynomial_solution_dim(const RestrictionSystem& sys, long q) {
  const long k = sys.d - 2 - q;
  if (k < 0) return 0;

  // Domain basis: (gamma index, x1-exponent e1) with e1 in [0, k].
  const long domain = sys.m * (k + 1);
  const RingCtx base = base_ring();

  std::map<std::tuple<int, int, long>, int> col_of;  // (i, row index, e1') -> column
  auto column = [&](int i, int r, long e1) {
    auto [it, fresh] = col_of.try_emplace({i, r, e1}, static_cast<int>(col_of.size()));
    (void)fresh;
    return it->second;
  };

  std::vector<SparseRow> rows;
  for (int g = 0; g < sys.m; ++g)
    for (long e1 = 0; e1 <= k; ++e1) {
      ExpVec e(2);
      e.set(0, static_cast<int>(e1));
      e.set(1, static_cast<int>(k - e1));
      const CommPoly mono = CommPoly::monomial(base, e);
      std::map<int, Rational> acc;
      for (int i = 0; i < 2; ++i) {
        const auto& mat = (i == 0 ? sys.L1m : sys.L2m);
        for (int r = 0; r < sys.n; ++r) {
          const WeylOp& entry = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(g)];
          if (entry.is_zero()) continue;
          const CommPoly img = weyl_act(entry, mono);
          for (const auto& t : img.terms()) acc[column(i, r, t.mono[0])] += t.coef;
        }
      }
      SparseRow row;
      for (const auto& [c, v] : acc)
        if (!is_zero(v)) row.push_back({c, v});
      rows.push_back(std::move(row));
    }

  SparseMatrix m;
  m.ncols = static_cast<int>(col_of.size());
  for (auto& r : rows) m.add_row(std::move(r));
  return domain - rank_of(m);
}

DualityReport dual_module_graded_dims(const RestrictionSystem& sys) {
  DualityReport rep;
  rep.p = sys.p;
  const RingCtx base = base_ring();
  const GroebnerBasis gb = groebner_module(sys.dual_rows, base, sys.m,
                                           ModuleOrder::top(MonomialOrder::degrevlex()));
  if (monomial_quotient_krull_dim(gb) > 0)
    throw std::runtime_error("dual module has infinite length");

  const std::vector<long> shifts(static_cast<std::size_t>(sys.m), 0);
  const long cap = 4 * (sys.d + sys.p) + 16;  // defensive; dims vanish before this
  for (long k = 0; k <= cap; ++k) {
    const long dim = module_graded_dim(gb, shifts, k);
    if (dim == 0) {
      rep.end = k - 1;
      return rep;
    }
    rep.dims.push_back(dim);
  }
  throw std::logic_error("finite-length module with unbounded graded dimensions");
}

// ---------------------------------------------------------------------------
// De Rham kernel of Q_p.

namespace {

// Left presentation of Q_p: for each T-monomial delta of degree p-1 and each
// L_i, the vector over the degree-p T-monomials picking up the T-coefficients
// of T^delta * L_i.
std::vector<WeylVector> derham_presentation(const RestrictionSystem& sys,
                                            const std::vector<ExpVec>& comps) {
  auto comp_index = [&](const ExpVec& e) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (comps[c] == e) return static_cast<int>(c);
    throw std::logic_error("missing T-monomial in de Rham presentation");
  };
  std::vector<WeylVector> rows;
  for (int i = 0; i < 2; ++i)
    for (const ExpVec& delta : sys.dest) {
      WeylVector row;
      row.comps.assign(comps.size(), WeylOp::zero());
      for (int k = 0; k < 3; ++k) {
        const WeylOp& a = sys.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        if (a.is_zero()) continue;
        ExpVec eps = delta;
        eps.set(k, delta[k] + 1);
        row.comps[static_cast<std::size_t>(comp_index(eps))] = a;
      }
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace

DeRhamResult derham_h0_truncated(const RestrictionSystem& sys, long N) {
  if (N < 0) throw std::invalid_argument("negative de Rham truncation degree");
  DeRhamResult res;
  res.p = sys.p;
  res.N = N;

  const std::vector<ExpVec> comps = t_monomials(sys.p);
  const int P = static_cast<int>(comps.size());
  const WeylBasis gb = weyl_module_gb(derham_presentation(sys, comps), P,
                                      WeylOrder::term_order());

  // Standard monomials x^a D^b e_c of degree <= N, grouped by weight |a|-|b|.
  auto is_standard = [&](const ExpVec& mono, int c) {
    for (const auto& [lm, comp] : gb.leads)
      if (comp == c && lm.divides(mono)) return false;
    return true;
  };
  std::map<long, std::vector<std::pair<ExpVec, int>>> basis_by_weight;
  for (long deg = 0; deg <= N; ++deg)
    for (long a1 = 0; a1 <= deg; ++a1)
      for (long a2 = 0; a1 + a2 <= deg; ++a2)
        for (long b1 = 0; a1 + a2 + b1 <= deg; ++b1) {
          const long b2 = deg - a1 - a2 - b1;
          ExpVec mono(kWeylVars);
          mono.set(WX1, static_cast<int>(a1));
          mono.set(WX2, static_cast<int>(a2));
          mono.set(WD1, static_cast<int>(b1));
          mono.set(WD2, static_cast<int>(b2));
          for (int c = 0; c < P; ++c)
            if (is_standard(mono, c))
              basis_by_weight[a1 + a2 - b1 - b2].push_back({mono, c});
        }

  const WeylOp d1 = WeylOp::generator(WD1), d2 = WeylOp::generator(WD2);
  for (const auto& [weight, basis] : basis_by_weight) {
    // Image coordinates: (which derivative, monomial, component).
    std::map<std::tuple<int, std::size_t, int>, int> col_of;
    std::unordered_map<ExpVec, std::size_t, ExpVecHash> mono_id;
    auto column = [&](int which, const ExpVec& m, int c) {
      auto [mit, mfresh] = mono_id.try_emplace(m, mono_id.size());
      (void)mfresh;
      auto [it, fresh] = col_of.try_emplace({which, mit->second, c},
                                            static_cast<int>(col_of.size()));
      (void)fresh;
      return it->second;
    };

    std::vector<SparseRow> rows;
    for (const auto& [mono, c] : basis) {
      WeylVector v;
      v.comps.assign(static_cast<std::size_t>(P), WeylOp::zero());
      std::map<int, Rational> acc;
      for (int which = 0; which < 2; ++which) {
        v.comps[static_cast<std::size_t>(c)] =
            weyl_mul(which == 0 ? d1 : d2, WeylOp::monomial(mono));
        const WeylVector nf = weyl_normal_form(v, gb);
        for (int cc = 0; cc < P; ++cc)
          for (const auto& t : nf.comps[static_cast<std::size_t>(cc)].terms())
            acc[column(which, t.mono, cc)] += t.coef;
      }
      SparseRow row;
      for (const auto& [col, val] : acc)
        if (!is_zero(val)) row.push_back({col, val});
      rows.push_back(std::move(row));
    }

    SparseMatrix m;
    m.ncols = static_cast<int>(col_of.size());
    for (auto& r : rows) m.add_row(std::move(r));
    const long dim = static_cast<long>(basis.size()) - rank_of(m);
    if (dim > 0) res.dim_by_weight[weight] = dim;
    res.dim += dim;
  }
  return res;
}

DeRhamResult derham_h0(const RestrictionSystem& sys, long budget) {
  if (budget < 1) throw std::invalid_argument("de Rham budget must be positive");
  long N = std::min(sys.d + sys.p, budget);
  for (;;) {
    const DeRhamResult prev = derham_h0_truncated(sys, N - 1);
    DeRhamResult cur = derham_h0_truncated(sys, N);
    cur.stabilized = cur.dim == prev.dim;
    if (cur.stabilized || N >= budget) return cur;
    N = std::min(2 * N, budget);
  }
}

}  // namespace reesd
