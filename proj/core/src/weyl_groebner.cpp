#include "reesd/weyl_groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reesd {

namespace {

struct WTerm {
  ExpVec m;
  int comp;
  Rational c;
};

// Terms sorted strictly descending under the active order.
using GOp = std::vector<WTerm>;

struct Engine {
  int ncomps;
  WeylOrder ord;
  std::vector<GOp> basis;

  bool term_gt(const WTerm& a, const WTerm& b) const {
    return weyl_term_cmp(ord, a.m, a.comp, b.m, b.comp) > 0;
  }

  GOp from_vec(const WeylVector& v) const {
    GOp p;
    for (int c = 0; c < static_cast<int>(v.comps.size()); ++c)
      for (const auto& t : v.comps[static_cast<std::size_t>(c)].terms())
        p.push_back({t.mono, c, t.coef});
    std::sort(p.begin(), p.end(), [&](const WTerm& a, const WTerm& b) { return term_gt(a, b); });
    return p;
  }

  WeylVector to_vec(const GOp& p) const {
    std::vector<std::vector<WeylTerm>> per(static_cast<std::size_t>(ncomps));
    for (const auto& t : p) per[static_cast<std::size_t>(t.comp)].push_back({t.m, t.c});
    WeylVector v;
    for (auto& ts : per) v.comps.emplace_back(std::move(ts));
    return v;
  }

  // c * (monomial `mono`) * g, left multiplication in the Weyl algebra.
  GOp left_mul_mono(const Rational& c, const ExpVec& mono, const GOp& g) const {
    std::vector<WTerm> out;
    WeylOp multiplier = WeylOp::monomial(mono, c);
    for (const auto& t : g) {
      WeylOp prod = weyl_mul(multiplier, WeylOp::monomial(t.m, t.c));
      for (const auto& pt : prod.terms()) out.push_back({pt.mono, t.comp, pt.coef});
    }
    std::sort(out.begin(), out.end(), [&](const WTerm& a, const WTerm& b) { return term_gt(a, b); });
    GOp merged;
    for (auto& t : out) {
      if (!merged.empty() && merged.back().m == t.m && merged.back().comp == t.comp) {
        merged.back().c += t.c;
        if (is_zero(merged.back().c)) merged.pop_back();
      } else {
        merged.push_back(std::move(t));
      }
    }
    return merged;
  }

  GOp add(const GOp& f, std::size_t f_from, const GOp& g) const {
    GOp out;
    out.reserve(f.size() - f_from + g.size());
    std::size_t i = f_from, j = 0;
    while (i < f.size() || j < g.size()) {
      if (j == g.size() || (i < f.size() && term_gt(f[i], g[j]))) {
        out.push_back(f[i++]);
      } else if (i == f.size() || term_gt(g[j], f[i])) {
        out.push_back(g[j++]);
      } else {
        Rational v = f[i].c + g[j].c;
        if (!is_zero(v)) out.push_back({f[i].m, f[i].comp, std::move(v)});
        ++i, ++j;
      }
    }
    return out;
  }

  static void make_primitive(GOp& p) {
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

  const GOp* find_reducer(const WTerm& t) const {
    for (const auto& g : basis) {
      if (g.empty()) continue;
      if (g.front().comp == t.comp && g.front().m.divides(t.m)) return &g;
    }
    return nullptr;
  }

  GOp reduce_full(GOp f) const {
    GOp out;
    std::size_t from = 0;
    while (from < f.size()) {
      const WTerm& t = f[from];
      const GOp* g = find_reducer(t);
      if (!g) {
        out.push_back(t);
        ++from;
        continue;
      }
      GOp prod = left_mul_mono(-t.c / g->front().c, t.m.minus(g->front().m), *g);
      GOp tail(f.begin() + static_cast<long>(from), f.end());
      f = add(tail, 0, prod);
      from = 0;
      if (!out.empty() && !f.empty() && !term_gt(out.back(), f.front()))
        throw std::logic_error("reduction order violation");
    }
    return out;
  }

  struct Pair {
    ExpVec lcm;
    int comp;
    int i, j;
  };

  void run_buchberger(std::vector<GOp> inputs) {
    auto pair_less = [&](const Pair& a, const Pair& b) {
      int c = weyl_term_cmp(ord, a.lcm, a.comp, b.lcm, b.comp);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::set<std::pair<int, int>> alive;

    auto push_pair = [&](int i, int j) {
      const GOp &gi = basis[static_cast<std::size_t>(i)], &gj = basis[static_cast<std::size_t>(j)];
      if (gi.front().comp != gj.front().comp) return;
      // No product criterion here: commutators break it.
      queue.insert({ExpVec::lcm(gi.front().m, gj.front().m), gi.front().comp, i, j});
      alive.insert({i, j});
    };

    auto insert_element = [&](GOp h) {
      make_primitive(h);
      int t = static_cast<int>(basis.size());
      basis.push_back(std::move(h));
      const GOp& gt = basis.back();
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
      GOp h = reduce_full(std::move(in));
      if (!h.empty()) insert_element(std::move(h));
    }

    while (!queue.empty()) {
      Pair p = *queue.begin();
      queue.erase(queue.begin());
      alive.erase({p.i, p.j});
      bool skip = false;
      for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        const GOp& gk = basis[static_cast<std::size_t>(k)];
        if (gk.front().comp != p.comp || !gk.front().m.divides(p.lcm)) continue;
        auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
        if (!alive.count(key(p.i, k)) && !alive.count(key(p.j, k))) skip = true;
      }
      if (skip) continue;

      const GOp &gi = basis[static_cast<std::size_t>(p.i)], &gj = basis[static_cast<std::size_t>(p.j)];
      GOp s = left_mul_mono(gj.front().c, p.lcm.minus(gi.front().m), gi);
      GOp s2 = left_mul_mono(-gi.front().c, p.lcm.minus(gj.front().m), gj);
      GOp h = reduce_full(add(s, 0, s2));
      if (!h.empty()) insert_element(std::move(h));
    }

    finalize();
  }

  void finalize() {
    std::vector<GOp> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        const WTerm &li = basis[i].front(), &lj = basis[j].front();
        if (li.comp != lj.comp || !lj.m.divides(li.m)) continue;
        redundant = !(li.m == lj.m) || j < i;
      }
      if (!redundant) kept.push_back(basis[i]);
    }
    std::sort(kept.begin(), kept.end(), [&](const GOp& a, const GOp& b) {
      return weyl_term_cmp(ord, a.front().m, a.front().comp, b.front().m, b.front().comp) < 0;
    });
    for (std::size_t i = 0; i < kept.size(); ++i) {
      Engine sub{ncomps, ord, {}};
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) sub.basis.push_back(kept[j]);
      kept[i] = sub.reduce_full(std::move(kept[i]));
      make_primitive(kept[i]);
    }
    basis = std::move(kept);
  }
};

Engine engine_for(const WeylBasis& gb) {
  Engine e{gb.ncomps, gb.order, {}};
  for (const auto& v : gb.gens) e.basis.push_back(e.from_vec(v));
  return e;
}

}  // namespace

WeylBasis weyl_module_gb(const std::vector<WeylVector>& gens, int ncomps, WeylOrder ord) {
  Engine e{ncomps, ord, {}};
  std::vector<GOp> inputs;
  for (const auto& v : gens) {
    if (static_cast<int>(v.comps.size()) > ncomps)
      throw std::invalid_argument("vector has more components than the module");
    if (ord.use_weight) {
      bool homog = true;
      bool seen = false;
      long ref = 0;
      for (const auto& op : v.comps)
        for (const auto& t : op.terms()) {
          long w = ord.weights.weight_of(t.mono);
          if (!seen) ref = w, seen = true;
          if (w != ref) homog = false;
        }
      if (!homog)
        throw std::invalid_argument(
            "weight-refined order requires weight-homogeneous generators");
    }
    WeylVector padded = v;
    while (static_cast<int>(padded.comps.size()) < ncomps)
      padded.comps.push_back(WeylOp::zero());
    GOp g = e.from_vec(padded);
    if (!g.empty()) inputs.push_back(std::move(g));
  }
  e.run_buchberger(std::move(inputs));

  WeylBasis gb;
  gb.ncomps = ncomps;
  gb.order = ord;
  gb.reduced = true;
  for (const auto& p : e.basis) {
    GOp q = p;
    Rational lead = q.front().c;
    for (auto& t : q) t.c /= lead;
    gb.gens.push_back(e.to_vec(q));
    gb.leads.emplace_back(q.front().m, q.front().comp);
  }
  return gb;
}

WeylBasis weyl_ideal_gb(const std::vector<WeylOp>& gens, WeylOrder ord) {
  std::vector<WeylVector> vs;
  for (const auto& g : gens) vs.push_back(WeylVector{{g}});
  return weyl_module_gb(vs, 1, std::move(ord));
}

WeylVector weyl_normal_form(const WeylVector& v, const WeylBasis& gb) {
  Engine e = engine_for(gb);
  WeylVector padded = v;
  while (static_cast<int>(padded.comps.size()) < gb.ncomps)
    padded.comps.push_back(WeylOp::zero());
  return e.to_vec(e.reduce_full(e.from_vec(padded)));
}

WeylOp weyl_normal_form(const WeylOp& f, const WeylBasis& gb) {
  WeylVector v{{f}};
  return weyl_normal_form(v, gb).comps.front();
}

bool weyl_certify(const WeylBasis& gb) {
  Engine e = engine_for(gb);
  for (std::size_t i = 0; i < e.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < e.basis.size(); ++j) {
      const auto &gi = e.basis[i], &gj = e.basis[j];
      if (gi.front().comp != gj.front().comp) continue;
      ExpVec lcm = ExpVec::lcm(gi.front().m, gj.front().m);
      auto s = e.left_mul_mono(gj.front().c, lcm.minus(gi.front().m), gi);
      auto s2 = e.left_mul_mono(-gi.front().c, lcm.minus(gj.front().m), gj);
      if (!e.reduce_full(e.add(s, 0, s2)).empty()) return false;
    }
  }
  return true;
}

}  // namespace reesd
