#include "reesd/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reesd {

namespace {

struct MTerm {
  ExpVec m;
  int comp;
  Rational c;
};

// Terms sorted strictly descending under the active module order.
using GPoly = std::vector<MTerm>;

struct Engine {
  RingCtx ctx;
  int ncomps;
  ModuleOrder ord;
  std::vector<GPoly> basis;

  bool term_gt(const MTerm& a, const MTerm& b) const {
    return modterm_cmp(ord, a.m, a.comp, b.m, b.comp) > 0;
  }

  GPoly from_vec(const CommVector& v) const {
    GPoly p;
    for (int c = 0; c < static_cast<int>(v.comps.size()); ++c)
      for (const auto& t : v.comps[static_cast<std::size_t>(c)].terms())
        p.push_back({t.mono, c, t.coef});
    std::sort(p.begin(), p.end(), [&](const MTerm& a, const MTerm& b) { return term_gt(a, b); });
    return p;
  }

  CommVector to_vec(const GPoly& p) const {
    std::vector<std::vector<Term>> per(static_cast<std::size_t>(ncomps));
    for (const auto& t : p) per[static_cast<std::size_t>(t.comp)].push_back({t.m, t.c});
    CommVector v;
    for (auto& ts : per) v.comps.emplace_back(ctx, std::move(ts));
    return v;
  }

  // f + c * x^shift * g; assumes both sorted, returns sorted.
  GPoly axpy(const GPoly& f, std::size_t f_from, const Rational& c, const ExpVec& shift,
             const GPoly& g) const {
    GPoly out;
    out.reserve(f.size() - f_from + g.size());
    std::size_t i = f_from, j = 0;
    while (i < f.size() || j < g.size()) {
      MTerm gt;
      if (j < g.size()) gt = {g[j].m.plus(shift), g[j].comp, c * g[j].c};
      if (j == g.size() || (i < f.size() && term_gt(f[i], gt))) {
        out.push_back(f[i++]);
      } else if (i == f.size() || term_gt(gt, f[i])) {
        out.push_back(std::move(gt));
        ++j;
      } else {
        Rational v = f[i].c + gt.c;
        if (!is_zero(v)) out.push_back({f[i].m, f[i].comp, std::move(v)});
        ++i, ++j;
      }
    }
    return out;
  }

  static void make_primitive(GPoly& p) {
    if (p.empty()) return;
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& t : p) {
      BigInt l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
      den_lcm = l;
    }
    for (auto& t : p) {
      t.c *= den_lcm;
      BigInt g;
      mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
      num_gcd = g;
    }
    if (sgn(p.front().c) < 0) num_gcd = -num_gcd;
    for (auto& t : p) {
      t.c /= num_gcd;
      t.c.canonicalize();
    }
  }

  const GPoly* find_reducer(const MTerm& t) const {
    for (const auto& g : basis) {
      if (g.empty()) continue;
      if (g.front().comp == t.comp && g.front().m.divides(t.m)) return &g;
    }
    return nullptr;
  }

  // Full normal form (every term irreducible).
  GPoly reduce_full(GPoly f) const {
    GPoly out;
    std::size_t from = 0;
    while (from < f.size()) {
      const MTerm& t = f[from];
      const GPoly* g = find_reducer(t);
      if (!g) {
        out.push_back(t);
        ++from;
        continue;
      }
      Rational q = -t.c / g->front().c;
      f = axpy(f, from, q, t.m.minus(g->front().m), *g);
      from = 0;
    }
    return out;
  }

  struct Pair {
    ExpVec lcm;
    int comp;
    int i, j;  // i < j
  };

  void run_buchberger(std::vector<GPoly> inputs) {
    auto pair_less = [&](const Pair& a, const Pair& b) {
      int c = modterm_cmp(ord, a.lcm, a.comp, b.lcm, b.comp);
      if (c != 0) return c < 0;  // smaller lcm first (normal selection)
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<int, int>> alive;

    auto push_pair = [&](int i, int j) {
      const GPoly &gi = basis[static_cast<std::size_t>(i)], &gj = basis[static_cast<std::size_t>(j)];
      if (gi.front().comp != gj.front().comp) return;
      // Product criterion (ideals only): coprime leads reduce to zero.
      if (ncomps == 1 && gi.front().m.coprime_with(gj.front().m)) return;
      Pair p{ExpVec::lcm(gi.front().m, gj.front().m), gi.front().comp, i, j};
      queue.insert(p);
      alive.insert({i, j});
    };

    auto insert_element = [&](GPoly h) {
      make_primitive(h);
      int t = static_cast<int>(basis.size());
      basis.push_back(std::move(h));
      const GPoly& gt = basis.back();
      // Prune old pairs strictly dominated by the new lead (Gebauer-Moeller).
      for (auto it = queue.begin(); it != queue.end();) {
        const Pair& p = *it;
        bool prune = false;
        if (p.comp == gt.front().comp && gt.front().m.divides(p.lcm)) {
          const ExpVec& li = basis[static_cast<std::size_t>(p.i)].front().m;
          const ExpVec& lj = basis[static_cast<std::size_t>(p.j)].front().m;
          prune = ExpVec::lcm(li, gt.front().m) != p.lcm &&
                  ExpVec::lcm(lj, gt.front().m) != p.lcm;
        }
        if (prune) {
          alive.erase({p.i, p.j});
          it = queue.erase(it);
        } else {
          ++it;
        }
      }
      for (int k = 0; k < t; ++k) push_pair(k, t);
    };

    for (auto& in : inputs) {
      GPoly h = reduce_full(std::move(in));
      if (!h.empty()) insert_element(std::move(h));
    }

    while (!queue.empty()) {
      Pair p = *queue.begin();
      queue.erase(queue.begin());
      alive.erase({p.i, p.j});
      // Chain criterion: a third lead dividing the lcm whose pairs with both
      // ends were already handled makes this pair redundant.
      bool skip = false;
      for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        const GPoly& gk = basis[static_cast<std::size_t>(k)];
        if (gk.front().comp != p.comp || !gk.front().m.divides(p.lcm)) continue;
        auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
        if (!alive.count(key(p.i, k)) && !alive.count(key(p.j, k))) skip = true;
      }
      if (skip) continue;

      const GPoly &gi = basis[static_cast<std::size_t>(p.i)], &gj = basis[static_cast<std::size_t>(p.j)];
      // Cross-multiplied S-element keeps coefficients integral.
      GPoly s = axpy(GPoly{}, 0, gj.front().c, p.lcm.minus(gi.front().m), gi);
      s = axpy(s, 0, -gi.front().c, p.lcm.minus(gj.front().m), gj);
      GPoly h = reduce_full(std::move(s));
      if (!h.empty()) insert_element(std::move(h));
    }

    finalize();
  }

  // Minimalize, tail-reduce, sort ascending by lead.
  void finalize() {
    std::vector<GPoly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        const MTerm &li = basis[i].front(), &lj = basis[j].front();
        if (li.comp != lj.comp || !lj.m.divides(li.m)) continue;
        // Equal leads: keep the earlier element.
        redundant = !(li.m == lj.m) || j < i;
      }
      if (!redundant) kept.push_back(basis[i]);
    }
    std::sort(kept.begin(), kept.end(), [&](const GPoly& a, const GPoly& b) {
      return modterm_cmp(ord, a.front().m, a.front().comp, b.front().m, b.front().comp) < 0;
    });
    for (std::size_t i = 0; i < kept.size(); ++i) {
      Engine sub{ctx, ncomps, ord, {}};
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) sub.basis.push_back(kept[j]);
      kept[i] = sub.reduce_full(std::move(kept[i]));
      make_primitive(kept[i]);
    }
    basis = std::move(kept);
  }
};

Engine engine_for(const GroebnerBasis& gb) {
  Engine e{gb.ctx, gb.ncomps, gb.order, {}};
  for (const auto& v : gb.gens) e.basis.push_back(e.from_vec(v));
  return e;
}

GroebnerBasis pack(Engine& e, bool reduced) {
  GroebnerBasis gb;
  gb.ctx = e.ctx;
  gb.ncomps = e.ncomps;
  gb.order = e.ord;
  gb.reduced = reduced;
  for (const auto& p : e.basis) {
    // Monic generators.
    GPoly q = p;
    Rational lead = q.front().c;
    for (auto& t : q) t.c /= lead;
    gb.gens.push_back(e.to_vec(q));
    gb.leads.emplace_back(q.front().m, q.front().comp);
  }
  return gb;
}

std::vector<ExpVec> monomials_of_degree(int nvars, long deg) {
  std::vector<ExpVec> out;
  if (deg < 0) return out;
  ExpVec cur(nvars);
  auto rec = [&](auto&& self, int i, long rem) -> void {
    if (i == nvars - 1) {
      cur.set(i, static_cast<int>(rem));
      out.push_back(cur);
      cur.set(i, 0);
      return;
    }
    for (long e = 0; e <= rem; ++e) {
      cur.set(i, static_cast<int>(e));
      self(self, i + 1, rem - e);
    }
    cur.set(i, 0);
  };
  rec(rec, 0, deg);
  return out;
}

}  // namespace

std::vector<CommPoly> GroebnerBasis::ideal_gens() const {
  if (ncomps != 1) throw std::logic_error("not an ideal basis");
  std::vector<CommPoly> out;
  for (const auto& v : gens) out.push_back(v.comps.front());
  return out;
}

GroebnerBasis groebner_basis(const std::vector<CommPoly>& gens, const RingCtx& ctx,
                             MonomialOrder ord) {
  std::vector<CommVector> vs;
  for (const auto& g : gens) {
    require_same_ring(g.ctx(), ctx);
    vs.push_back(CommVector{{g}});
  }
  return groebner_module(vs, ctx, 1, ModuleOrder::top(std::move(ord)));
}

GroebnerBasis groebner_module(const std::vector<CommVector>& gens, const RingCtx& ctx,
                              int ncomps, ModuleOrder ord) {
  Engine e{ctx, ncomps, std::move(ord), {}};
  std::vector<GPoly> inputs;
  for (const auto& v : gens) {
    if (static_cast<int>(v.comps.size()) > ncomps)
      throw std::invalid_argument("vector has more components than the module");
    CommVector padded = v;
    while (static_cast<int>(padded.comps.size()) < ncomps)
      padded.comps.push_back(CommPoly::zero(ctx));
    for (const auto& p : padded.comps) require_same_ring(p.ctx(), ctx);
    GPoly g = e.from_vec(padded);
    if (!g.empty()) inputs.push_back(std::move(g));
  }
  e.run_buchberger(std::move(inputs));
  return pack(e, true);
}

CommPoly normal_form(const CommPoly& f, const GroebnerBasis& gb) {
  CommVector v{{f}};
  return normal_form(v, gb).comps.front();
}

CommVector normal_form(const CommVector& v, const GroebnerBasis& gb) {
  Engine e = engine_for(gb);
  CommVector padded = v;
  while (static_cast<int>(padded.comps.size()) < gb.ncomps)
    padded.comps.push_back(CommPoly::zero(gb.ctx));
  return e.to_vec(e.reduce_full(e.from_vec(padded)));
}

bool in_span(const CommPoly& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

bool certify_groebner(const GroebnerBasis& gb) {
  Engine e = engine_for(gb);
  for (std::size_t i = 0; i < e.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < e.basis.size(); ++j) {
      const auto &gi = e.basis[i], &gj = e.basis[j];
      if (gi.front().comp != gj.front().comp) continue;
      ExpVec lcm = ExpVec::lcm(gi.front().m, gj.front().m);
      GPoly s = e.axpy(GPoly{}, 0, gj.front().c, lcm.minus(gi.front().m), gi);
      s = e.axpy(s, 0, -gi.front().c, lcm.minus(gj.front().m), gj);
      if (!e.reduce_full(std::move(s)).empty()) return false;
    }
  }
  return true;
}

std::vector<CommVector> syzygy_module(const std::vector<CommPoly>& row, const RingCtx& ctx) {
  const int k = static_cast<int>(row.size());
  if (k == 0) throw std::invalid_argument("empty row");
  long d = -1;
  for (const auto& f : row) {
    require_same_ring(f.ctx(), ctx);
    if (f.is_zero() || !f.is_homogeneous())
      throw std::invalid_argument("syzygy row must be nonzero homogeneous");
    if (d < 0) d = f.degree();
    if (f.degree() != d) throw std::invalid_argument("syzygy row must be equigenerated");
  }
  // Graph module: value component 0 dominates the coefficient components.
  std::vector<CommVector> graph;
  for (int i = 0; i < k; ++i) {
    CommVector v;
    v.comps.push_back(row[static_cast<std::size_t>(i)]);
    for (int c = 0; c < k; ++c)
      v.comps.push_back(c == i ? CommPoly::constant(ctx, 1) : CommPoly::zero(ctx));
    graph.push_back(std::move(v));
  }
  auto gb = groebner_module(graph, ctx, k + 1, ModuleOrder::pot(MonomialOrder::degrevlex()));

  std::vector<CommVector> candidates;
  for (const auto& g : gb.gens) {
    if (!g.comps.front().is_zero()) continue;
    CommVector s;
    for (int c = 1; c <= k; ++c) s.comps.push_back(g.comps[static_cast<std::size_t>(c)]);
    candidates.push_back(std::move(s));
  }

  auto col_degree = [](const CommVector& v) {
    long deg = -1;
    for (const auto& p : v.comps)
      if (!p.is_zero()) deg = std::max(deg, p.degree());
    return deg;
  };
  auto canonical = [&](CommVector v) {
    // Joint primitive scaling with sign from the first nonzero entry.
    BigInt den_lcm = 1, num_gcd = 0;
    for (const auto& p : v.comps)
      for (const auto& t : p.terms()) {
        BigInt l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
        den_lcm = l;
      }
    for (auto& p : v.comps) p = p.scaled(den_lcm);
    for (const auto& p : v.comps)
      for (const auto& t : p.terms()) {
        BigInt g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
        num_gcd = g;
      }
    for (const auto& p : v.comps) {
      if (p.is_zero()) continue;
      if (sgn(p.leading_term().coef) < 0) num_gcd = -num_gcd;
      break;
    }
    Rational scale(1, 1);
    scale /= Rational(num_gcd);
    for (auto& p : v.comps) p = p.scaled(scale);
    return v;
  };
  auto col_less = [&](const CommVector& a, const CommVector& b) {
    long da = col_degree(a), db = col_degree(b);
    if (da != db) return da < db;
    for (std::size_t c = 0; c < a.comps.size(); ++c) {
      int cmp = CommPoly::compare(a.comps[c], b.comps[c]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  };

  for (auto& c : candidates) c = canonical(std::move(c));
  std::sort(candidates.begin(), candidates.end(), col_less);

  // Graded greedy minimalization.
  std::vector<CommVector> kept;
  for (const auto& c : candidates) {
    if (!kept.empty()) {
      auto kgb = groebner_module(kept, ctx, k, ModuleOrder::top(MonomialOrder::degrevlex()));
      if (normal_form(c, kgb).is_zero()) continue;
    }
    kept.push_back(c);
  }
  return kept;
}

std::vector<CommPoly> eliminate(const std::vector<CommPoly>& gens, const RingCtx& ctx,
                                const std::vector<std::string>& block) {
  for (const auto& b : block)
    if (ctx->index_of(b) < 0) throw std::invalid_argument("unknown block variable: " + b);
  // Reorder so the eliminated block comes first.
  std::vector<std::string> vars(block);
  std::vector<std::pair<int, int>> bideg;
  for (const auto& b : block)
    bideg.push_back(ctx->bideg[static_cast<std::size_t>(ctx->index_of(b))]);
  for (int i = 0; i < ctx->nvars(); ++i) {
    const auto& v = ctx->vars[static_cast<std::size_t>(i)];
    if (std::find(block.begin(), block.end(), v) != block.end()) continue;
    vars.push_back(v);
    bideg.push_back(ctx->bideg[static_cast<std::size_t>(i)]);
  }
  RingCtx permuted = make_ring(vars, bideg);
  std::vector<CommPoly> moved;
  for (const auto& g : gens) moved.push_back(g.mapped_to(permuted));
  auto gb = groebner_basis(moved, permuted,
                           MonomialOrder::block_elim(static_cast<int>(block.size())));
  RingCtx small = ring_without(ctx, block);
  std::vector<CommPoly> out;
  for (const auto& g : gb.ideal_gens()) {
    bool uses_block = false;
    for (const auto& t : g.terms())
      for (std::size_t b = 0; b < block.size() && !uses_block; ++b)
        if (t.mono[static_cast<int>(b)] != 0) uses_block = true;
    if (!uses_block) out.push_back(g.mapped_to(small));
  }
  return out;
}

namespace {

std::string fresh_name(const RingCtx& ctx, std::string stem) {
  while (ctx->index_of(stem) >= 0) stem += "_";
  return stem;
}

RingCtx extended_ring(const RingCtx& ctx, const std::string& extra) {
  auto vars = ctx->vars;
  auto bideg = ctx->bideg;
  vars.push_back(extra);
  bideg.emplace_back(0, 0);
  return make_ring(vars, bideg);
}

bool all_homogeneous(const std::vector<CommPoly>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const CommPoly& g) { return g.is_homogeneous(); });
}

// I : v^inf for a single variable of a homogeneous ideal: compute a degrevlex
// basis with v cheapest, then divide each element by its v-power.
std::vector<CommPoly> saturate_by_variable(const std::vector<CommPoly>& gens,
                                           const RingCtx& ctx, int var) {
  std::vector<std::string> vars;
  std::vector<std::pair<int, int>> bideg;
  for (int i = 0; i < ctx->nvars(); ++i) {
    if (i == var) continue;
    vars.push_back(ctx->vars[static_cast<std::size_t>(i)]);
    bideg.push_back(ctx->bideg[static_cast<std::size_t>(i)]);
  }
  vars.push_back(ctx->vars[static_cast<std::size_t>(var)]);
  bideg.push_back(ctx->bideg[static_cast<std::size_t>(var)]);
  RingCtx moved = make_ring(vars, bideg);
  std::vector<CommPoly> mapped;
  for (const auto& g : gens) mapped.push_back(g.mapped_to(moved));
  auto gb = groebner_basis(mapped, moved);
  const int last = moved->nvars() - 1;
  std::vector<CommPoly> out;
  for (const auto& g : gb.ideal_gens()) {
    int low = 0x7fffffff;
    for (const auto& t : g.terms()) low = std::min<int>(low, t.mono[last]);
    ExpVec strip(moved->nvars());
    strip.set(last, low);
    std::vector<Term> ts;
    for (const auto& t : g.terms()) ts.push_back({t.mono.minus(strip), t.coef});
    out.push_back(CommPoly(moved, std::move(ts)).mapped_to(ctx));
  }
  return out;
}

// I : h^inf via the auxiliary equation 1 - z h.
std::vector<CommPoly> saturate_by_poly(const std::vector<CommPoly>& gens, const RingCtx& ctx,
                                       const CommPoly& h) {
  std::string z = fresh_name(ctx, "zsat");
  RingCtx big = extended_ring(ctx, z);
  std::vector<CommPoly> work;
  for (const auto& g : gens) work.push_back(g.mapped_to(big));
  CommPoly zh = CommPoly::variable(big, z) * h.mapped_to(big);
  work.push_back(CommPoly::constant(big, 1) - zh);
  auto out_small = eliminate(work, big, {z});
  std::vector<CommPoly> out;
  for (const auto& g : out_small) out.push_back(g.mapped_to(ctx));
  return out;
}

std::vector<CommPoly> intersect_ideals(const std::vector<CommPoly>& a,
                                       const std::vector<CommPoly>& b, const RingCtx& ctx) {
  if (a.empty() || b.empty()) return {};
  std::string w = fresh_name(ctx, "wsec");
  RingCtx big = extended_ring(ctx, w);
  CommPoly wv = CommPoly::variable(big, w);
  CommPoly one_minus = CommPoly::constant(big, 1) - wv;
  std::vector<CommPoly> work;
  for (const auto& f : a) work.push_back(wv * f.mapped_to(big));
  for (const auto& f : b) work.push_back(one_minus * f.mapped_to(big));
  auto out_small = eliminate(work, big, {w});
  std::vector<CommPoly> out;
  for (const auto& g : out_small) out.push_back(g.mapped_to(ctx));
  return out;
}

}  // namespace

std::vector<CommPoly> saturate(const std::vector<CommPoly>& ideal, const RingCtx& ctx,
                               const std::vector<CommPoly>& by) {
  if (by.empty()) throw std::invalid_argument("empty saturating ideal");
  std::vector<CommPoly> nonzero;
  for (const auto& g : ideal)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  const bool homog = all_homogeneous(nonzero);

  std::vector<CommPoly> acc;
  bool first = true;
  for (const auto& h : by) {
    if (h.is_zero()) throw std::invalid_argument("saturation by zero");
    std::vector<CommPoly> part;
    int var = -1;
    if (h.num_terms() == 1 && h.terms().front().mono.total_degree() == 1) {
      for (int i = 0; i < ctx->nvars(); ++i)
        if (h.terms().front().mono[i] == 1) var = i;
    }
    if (var >= 0 && homog)
      part = saturate_by_variable(nonzero, ctx, var);
    else
      part = saturate_by_poly(nonzero, ctx, h);
    acc = first ? part : intersect_ideals(acc, part, ctx);
    first = false;
  }
  return groebner_basis(acc, ctx).ideal_gens();
}

long bigraded_dim(const GroebnerBasis& gb, long p, long q) {
  return static_cast<long>(standard_monomials(gb, p, q).size());
}

std::vector<ExpVec> standard_monomials(const GroebnerBasis& gb, long p, long q) {
  if (gb.ncomps != 1) throw std::logic_error("bigraded dimension needs an ideal basis");
  std::vector<ExpVec> out;
  for (const auto& m : enumerate_monomials(gb.ctx, p, q)) {
    bool divisible = false;
    for (const auto& [lm, comp] : gb.leads)
      if (lm.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

long module_graded_dim(const GroebnerBasis& gb, const std::vector<long>& shifts, long k) {
  if (static_cast<int>(shifts.size()) != gb.ncomps)
    throw std::invalid_argument("shift count mismatch");
  long dim = 0;
  for (int c = 0; c < gb.ncomps; ++c) {
    for (const auto& m : monomials_of_degree(gb.ctx->nvars(),
                                             k - shifts[static_cast<std::size_t>(c)])) {
      bool divisible = false;
      for (const auto& [lm, comp] : gb.leads)
        if (comp == c && lm.divides(m)) {
          divisible = true;
          break;
        }
      if (!divisible) ++dim;
    }
  }
  return dim;
}

int monomial_quotient_krull_dim(const GroebnerBasis& gb) {
  const int n = gb.ctx->nvars();
  int best = -1;
  for (int c = 0; c < gb.ncomps; ++c) {
    std::vector<ExpVec> lts;
    bool comp_zero = false;
    for (const auto& [lm, comp] : gb.leads) {
      if (comp != c) continue;
      if (lm.is_constant()) comp_zero = true;
      lts.push_back(lm);
    }
    if (comp_zero) continue;
    // Largest variable subset touching no leading support entirely.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool ok = true;
      for (const auto& lm : lts) {
        bool inside = true;
        for (int i = 0; i < n && inside; ++i)
          if (lm[i] > 0 && !(mask & (1u << i))) inside = false;
        if (inside) {
          ok = false;
          break;
        }
      }
      if (ok) best = std::max(best, __builtin_popcount(mask));
    }
  }
  return best;
}

}  // namespace reesd
