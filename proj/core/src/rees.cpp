#include "reesd/rees.hpp"

#include <algorithm>

#include "reesd/linalg.hpp"

namespace reesd {

RingCtx base_ring() {
  static const RingCtx ctx = make_ring({"x1", "x2"}, {{0, 1}, {0, 1}});
  return ctx;
}

RingCtx sym_ring() {
  static const RingCtx ctx = make_ring({"x1", "x2", "T1", "T2", "T3"},
                                       {{0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, 0}});
  return ctx;
}

void validate_input(const std::vector<CommPoly>& f) {
  if (f.size() != 3) throw std::invalid_argument("need exactly three forms");
  for (const auto& p : f) {
    require_same_ring(p.ctx(), base_ring());
    if (p.is_zero()) throw std::invalid_argument("zero generator");
    if (!p.is_homogeneous()) throw std::invalid_argument("not homogeneous");
  }
  long d = f[0].degree();
  if (f[1].degree() != d || f[2].degree() != d)
    throw std::invalid_argument("not equigenerated");
  if (d < 1) throw std::invalid_argument("constant generators");
  CommPoly g = homogeneous_gcd(homogeneous_gcd(f[0], f[1]), f[2]);
  if (g.degree() != 0) throw std::invalid_argument("height < 2: common factor " + g.str());
  // Equal degree: minimal generation by three <=> Q-linear independence.
  auto monos = enumerate_monomials(base_ring(), 0, d);
  SparseMatrix m;
  m.ncols = static_cast<int>(monos.size());
  for (const auto& p : f) {
    SparseRow r;
    for (const auto& t : p.terms()) {
      auto it = std::find(monos.begin(), monos.end(), t.mono);
      r.emplace_back(static_cast<int>(it - monos.begin()), t.coef);
    }
    m.add_row(std::move(r));
  }
  if (rank_of(std::move(m)) != 3)
    throw std::invalid_argument("not minimally generated by three");
}

namespace {

CommPoly tee_contract(const CommVector& col) {
  // [T1 T2 T3] * column.
  RingCtx S = sym_ring();
  CommPoly g = CommPoly::zero(S);
  for (int i = 0; i < 3; ++i) {
    CommPoly Ti = CommPoly::variable(S, "T" + std::to_string(i + 1));
    g = g + Ti * col.comps[static_cast<std::size_t>(i)].mapped_to(S);
  }
  return g;
}

long column_degree(const CommVector& col) {
  long deg = -1;
  for (const auto& p : col.comps)
    if (!p.is_zero()) deg = std::max(deg, p.degree());
  return deg;
}

// Known-reduced generators packed without re-running completion.
GroebnerBasis pack_reduced_ideal(std::vector<CommPoly> gens, const RingCtx& ctx) {
  GroebnerBasis gb;
  gb.ctx = ctx;
  gb.ncomps = 1;
  gb.order = ModuleOrder::top(MonomialOrder::degrevlex());
  gb.reduced = true;
  std::sort(gens.begin(), gens.end(), [&](const CommPoly& a, const CommPoly& b) {
    return mono_cmp(gb.order.base, a.leading_term().mono, b.leading_term().mono) < 0;
  });
  for (auto& g : gens) {
    CommPoly m = g.monic();
    gb.leads.emplace_back(m.leading_term().mono, 0);
    gb.gens.push_back(CommVector{{std::move(m)}});
  }
  return gb;
}

}  // namespace

HilbertBurchData hilbert_burch(const std::vector<CommPoly>& f) {
  validate_input(f);
  HilbertBurchData hb;
  hb.f = f;
  hb.d = f[0].degree();

  auto cols = syzygy_module(f, base_ring());
  if (cols.size() != 2)
    throw std::invalid_argument("input violates the height-two contract: syzygy rank " +
                                std::to_string(cols.size()));
  long c1 = column_degree(cols[0]), c2 = column_degree(cols[1]);
  if (c1 < 1 || c2 < 1 || c1 + c2 != hb.d)
    throw std::invalid_argument("input violates the height-two contract: column degrees " +
                                std::to_string(c1) + "," + std::to_string(c2));

  // Scale each column so [T]*column is monic, then fix the deterministic
  // column order (degree, then canonical entry order).
  for (auto& col : cols) {
    CommPoly g = tee_contract(col);
    Rational lead = g.leading_term().coef;
    for (auto& p : col.comps) p = p.scaled(Rational(1) / lead);
  }
  std::sort(cols.begin(), cols.end(), [](const CommVector& a, const CommVector& b) {
    long da = column_degree(a), db = column_degree(b);
    if (da != db) return da < db;
    for (std::size_t c = 0; c < a.comps.size(); ++c) {
      int cmp = CommPoly::compare(a.comps[c], b.comps[c]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });

  hb.mu = column_degree(cols[0]);
  hb.phi = cols;
  hb.g1 = tee_contract(cols[0]);
  hb.g2 = tee_contract(cols[1]);

  // Defensive: the columns must actually be syzygies.
  for (const auto& col : cols) {
    CommPoly acc = CommPoly::zero(base_ring());
    for (int i = 0; i < 3; ++i) acc = acc + f[static_cast<std::size_t>(i)] * col.comps[static_cast<std::size_t>(i)];
    if (!acc.is_zero()) throw std::logic_error("syzygy verification failed");
  }
  return hb;
}

std::pair<CommPoly, CommPoly> symmetric_equations(const HilbertBurchData& hb) {
  return {hb.g1, hb.g2};
}

GroebnerBasis rees_ideal(const HilbertBurchData& hb, ReesRoute route) {
  RingCtx S = sym_ring();
  if (route == ReesRoute::Elimination) {
    // Q[t, x, T], generators T_i - t f_i; contract away the Rees tag t.
    RingCtx big = make_ring({"t", "x1", "x2", "T1", "T2", "T3"});
    CommPoly t = CommPoly::variable(big, "t");
    std::vector<CommPoly> gens;
    for (int i = 0; i < 3; ++i) {
      CommPoly Ti = CommPoly::variable(big, "T" + std::to_string(i + 1));
      gens.push_back(Ti - t * hb.f[static_cast<std::size_t>(i)].mapped_to(big));
    }
    auto out = eliminate(gens, big, {"t"});
    std::vector<CommPoly> mapped;
    for (const auto& g : out) mapped.push_back(g.mapped_to(S));
    return pack_reduced_ideal(std::move(mapped), S);
  }
  // Torsion of the symmetric algebra: (g1, g2) : (x1, x2)^inf.
  auto sat = saturate({hb.g1, hb.g2}, S,
                      {CommPoly::variable(S, "x1"), CommPoly::variable(S, "x2")});
  return pack_reduced_ideal(std::move(sat), S);
}

namespace {

// Rank of the span of {monomial multiples of gens} in the (p,q) slice of S.
// nonconstant_only restricts to multiples by nonconstant monomials (the
// (x,T)*I slice for Nakayama counting).
long slice_rank(const std::vector<CommPoly>& gens, long p, long q, bool nonconstant_only) {
  RingCtx S = sym_ring();
  auto monos = enumerate_monomials(S, p, q);
  if (monos.empty()) return 0;
  std::map<ExpVec, int, bool (*)(const ExpVec&, const ExpVec&)> col_index(
      [](const ExpVec& a, const ExpVec& b) { return mono_cmp(MonomialOrder::degrevlex(), a, b) < 0; });
  for (int i = 0; i < static_cast<int>(monos.size()); ++i)
    col_index.emplace(monos[static_cast<std::size_t>(i)], i);

  SparseMatrix m;
  m.ncols = static_cast<int>(monos.size());
  for (const auto& g : gens) {
    auto bd = g.bidegree();
    if (!bd) throw std::logic_error("inhomogeneous generator in slice computation");
    long mp = p - bd->first, mq = q - bd->second;
    if (mp < 0 || mq < 0) continue;
    for (const auto& mult : enumerate_monomials(S, mp, mq)) {
      if (nonconstant_only && mult.is_constant()) continue;
      SparseRow r;
      for (const auto& t : g.terms()) r.emplace_back(col_index.at(t.mono.plus(mult)), t.coef);
      m.add_row(std::move(r));
    }
  }
  return rank_of(std::move(m));
}

}  // namespace

BigradedTable k_table(const HilbertBurchData& hb, const GroebnerBasis& req, long pmax) {
  if (pmax < 2) throw std::invalid_argument("pmax must be at least 2");
  BigradedTable table;
  table.pmax = pmax;
  table.d = hb.d;

  RingCtx S = sym_ring();
  auto sym_gb = groebner_basis({hb.g1, hb.g2}, S);
  for (long p = 2; p <= pmax; ++p)
    for (long q = 0; q <= hb.d - 2; ++q)
      table.k_dim[{p, q}] = bigraded_dim(sym_gb, p, q) - bigraded_dim(req, p, q);

  auto req_gens = req.ideal_gens();
  for (long p = 0; p <= pmax; ++p) {
    for (long q = 0; q <= hb.d; ++q) {
      long full = slice_rank(req_gens, p, q, false);
      if (full == 0) continue;
      long cut = slice_rank(req_gens, p, q, true);
      for (long i = 0; i < full - cut; ++i) table.min_gens.emplace_back(p, q);
    }
  }
  std::sort(table.min_gens.begin(), table.min_gens.end());
  return table;
}

RandomIdealResult random_hb_ideal(long mu, long d, std::uint64_t seed, long bound) {
  if (mu < 1 || d < 2 || mu > d - mu)
    throw std::invalid_argument("need 0 < mu <= d - mu");
  RingCtx R = base_ring();
  SplitMix64 rng(seed);

  auto random_form = [&](long deg) {
    std::vector<Term> ts;
    for (long i = 0; i <= deg; ++i) {
      ExpVec e(2);
      e.set(0, static_cast<int>(deg - i));
      e.set(1, static_cast<int>(i));
      ts.push_back({e, Rational(rng.nonzero_in_band(bound))});
    }
    return CommPoly(R, std::move(ts));
  };

  RandomIdealResult out;
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Column-major draw of the 3x2 matrix.
    std::vector<CommPoly> col1, col2;
    for (int r = 0; r < 3; ++r) col1.push_back(random_form(mu));
    for (int r = 0; r < 3; ++r) col2.push_back(random_form(d - mu));
    auto det2 = [&](int r1, int r2) {
      return col1[static_cast<std::size_t>(r1)] * col2[static_cast<std::size_t>(r2)] -
             col1[static_cast<std::size_t>(r2)] * col2[static_cast<std::size_t>(r1)];
    };
    std::vector<CommPoly> f = {det2(1, 2), -det2(0, 2), det2(0, 1)};
    try {
      validate_input(f);
    } catch (const std::invalid_argument&) {
      ++out.rejections;
      continue;
    }
    out.f = std::move(f);
    return out;
  }
  throw std::runtime_error("could not generate a valid ideal after 64 draws");
}

}  // namespace reesd
