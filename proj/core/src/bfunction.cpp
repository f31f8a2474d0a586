#include "reesd/bfunction.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace reesd {

namespace {

void uni_trim(std::vector<Rational>& c) {
  while (!c.empty() && is_zero(c.back())) c.pop_back();
}

// Pure-x operator (Fourier image of a pure-derivative one) -> polynomial.
CommPoly x_part_to_poly(const WeylOp& a, const RingCtx& target) {
  const int ix1 = target->index_of("x1"), ix2 = target->index_of("x2");
  if (ix1 < 0 || ix2 < 0) throw std::invalid_argument("target ring lacks x1, x2");
  std::vector<Term> terms;
  for (const auto& t : a.terms()) {
    if (t.mono[WD1] || t.mono[WD2] || t.mono[WT1] || t.mono[WT2] || t.mono[WT3])
      throw std::invalid_argument("operator is not a pure multiplication operator");
    ExpVec e(target->nvars());
    e.set(ix1, t.mono[WX1]);
    e.set(ix2, t.mono[WX2]);
    terms.push_back({e, t.coef});
  }
  return CommPoly(target, std::move(terms));
}

}  // namespace

// ---------------------------------------------------------------------------
// Univariate polynomials over Q.

Rational UniPoly::eval(const Rational& s) const {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * s + c[i];
  return acc;
}

UniPoly UniPoly::monic() const {
  if (c.empty()) return *this;
  UniPoly r = *this;
  const Rational lead = r.c.back();
  for (auto& v : r.c) v /= lead;
  return r;
}

std::string UniPoly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (reesd::is_zero(c[i])) continue;
    Rational a = c[i];
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0) {
      out << to_string(a);
    } else {
      if (!is_one(a)) out << to_string(a) << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  if (first) return "0";
  return out.str();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  uni_trim(r);
  return {std::move(r)};
}

namespace {

// Remainder of a by b (b nonzero), in place on a copy.
UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  while (!a.c.empty() && a.c.size() >= b.c.size()) {
    const Rational q = a.c.back() / b.c.back();
    const std::size_t off = a.c.size() - b.c.size();
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[off + i] -= q * b.c[i];
    uni_trim(a.c);
  }
  return a;
}

}  // namespace

UniPoly uni_gcd_monic(UniPoly a, UniPoly b) {
  while (!b.c.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly uni_lcm_monic(const UniPoly& a, const UniPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  const UniPoly g = uni_gcd_monic(a, b);
  auto q = uni_div_exact(a, g);
  return uni_mul(*q, b).monic();
}

std::optional<UniPoly> uni_div_exact(const UniPoly& a, const UniPoly& b) {
  if (b.c.empty()) return std::nullopt;
  UniPoly rem = a;
  std::vector<Rational> q(a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0,
                          Rational(0));
  while (!rem.c.empty() && rem.c.size() >= b.c.size()) {
    const Rational f = rem.c.back() / b.c.back();
    const std::size_t off = rem.c.size() - b.c.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[off + i] -= f * b.c[i];
    uni_trim(rem.c);
  }
  if (!rem.c.empty()) return std::nullopt;
  uni_trim(q);
  return UniPoly{std::move(q)};
}

std::pair<std::vector<std::pair<long, int>>, UniPoly> integer_roots(const UniPoly& b) {
  std::vector<std::pair<long, int>> roots;
  UniPoly work = b;
  if (work.c.empty()) return {roots, work};

  int zero_mult = 0;
  while (work.degree() >= 1 && is_zero(work.c.front())) {
    work.c.erase(work.c.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.push_back({0, zero_mult});

  // Cauchy bound on root magnitude, clamped; b-function roots are small.
  Rational bound = 1;
  for (std::size_t i = 0; i + 1 < work.c.size(); ++i) {
    Rational m = 1 + abs(work.c[i] / work.c.back());
    if (m > bound) bound = m;
  }
  long limit = 4096;
  if (bound < Rational(limit)) {
    BigInt ceil_num = (bound.get_num() + bound.get_den() - 1) / bound.get_den();
    limit = ceil_num.get_si();
  }

  for (long r = -limit; r <= limit; ++r) {
    if (r == 0) continue;
    int mult = 0;
    while (work.degree() >= 1 && is_zero(work.eval(Rational(r)))) {
      // Synthetic division by (s - r).
      std::vector<Rational> q(work.c.size() - 1, Rational(0));
      Rational carry = work.c.back();
      for (std::size_t i = work.c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = work.c[i] + Rational(r) * carry;
      }
      work.c = std::move(q);
      ++mult;
    }
    if (mult) roots.push_back({r, mult});
  }
  std::sort(roots.begin(), roots.end());
  return {roots, work};
}

std::string factored_bfunction(const UniPoly& b) {
  if (b.is_zero()) return "0";
  auto [roots, rem] = integer_roots(b);
  std::ostringstream out;
  // Ascending k in (s + k): roots in descending order.
  for (std::size_t i = roots.size(); i-- > 0;) {
    const long k = -roots[i].first;
    const int mult = roots[i].second;
    if (k == 0)
      out << "(s)";
    else if (k > 0)
      out << "(s + " << k << ")";
    else
      out << "(s - " << -k << ")";
    if (mult > 1) out << "^" << mult;
  }
  if (rem.degree() >= 1) out << "[" << rem.monic().str() << "]";
  std::string s = out.str();
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// Restriction system.

std::vector<ExpVec> t_monomials(long k) {
  if (k < 0) return {};
  std::vector<ExpVec> out;
  for (long a1 = k; a1 >= 0; --a1)
    for (long a2 = k - a1; a2 >= 0; --a2) {
      ExpVec e(3);
      e.set(0, static_cast<int>(a1));
      e.set(1, static_cast<int>(a2));
      e.set(2, static_cast<int>(k - a1 - a2));
      out.push_back(e);
    }
  return out;
}

RestrictionSystem restriction_matrices(const HilbertBurchData& hb, long p) {
  if (p < 2) throw std::invalid_argument("restriction system needs p >= 2");
  RestrictionSystem sys;
  sys.p = p;
  sys.d = hb.d;
  sys.mu = hb.mu;
  sys.src = t_monomials(p - 2);
  sys.dest = t_monomials(p - 1);
  sys.m = static_cast<int>(sys.src.size());
  sys.n = static_cast<int>(sys.dest.size());

  // a[i][k]: the T_k-coefficient of g_{i+1} with x_j replaced by D_j.
  std::vector<std::array<WeylOp, 3>> a(2);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 3; ++k)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          fourier(weyl_from_poly(hb.phi[static_cast<std::size_t>(i)]
                                     .comps[static_cast<std::size_t>(k)]));

  for (int i = 0; i < 2; ++i) {
    WeylOp L;
    for (int k = 0; k < 3; ++k) {
      sys.coeff[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      ExpVec tk(kWeylVars);
      tk.set(WT1 + k, 1);
      L = L + weyl_mul(WeylOp::monomial(tk),
                       a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    }
    (i == 0 ? sys.L1 : sys.L2) = L;
  }

  auto build = [&](int i) {
    std::vector<std::vector<WeylOp>> mat(static_cast<std::size_t>(sys.n));
    for (int r = 0; r < sys.n; ++r) {
      auto& row = mat[static_cast<std::size_t>(r)];
      row.assign(static_cast<std::size_t>(sys.m), WeylOp::zero());
      for (int c = 0; c < sys.m; ++c)
        for (int k = 0; k < 3; ++k) {
          ExpVec shifted = sys.src[static_cast<std::size_t>(c)];
          if (shifted[k] + 1 > 0xffff) throw std::overflow_error("T exponent overflow");
          shifted.set(k, shifted[k] + 1);
          if (shifted == sys.dest[static_cast<std::size_t>(r)])
            row[static_cast<std::size_t>(c)] =
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
    }
    return mat;
  };
  sys.L1m = build(0);
  sys.L2m = build(1);

  const RingCtx base = base_ring();
  for (const auto* mat : {&sys.L1m, &sys.L2m})
    for (const auto& row : *mat) {
      WeylVector v;
      v.comps = row;
      sys.rows.push_back(v);
      CommVector dual;
      for (const auto& entry : row) dual.comps.push_back(x_part_to_poly(fourier(entry), base));
      sys.dual_rows.push_back(std::move(dual));
    }
  return sys;
}

std::vector<WeylOp> component_ideal(const RestrictionSystem& sys, int i) {
  if (i < 0 || i >= sys.m) throw std::out_of_range("component index out of range");
  const WeylBasis gb =
      weyl_module_gb(sys.rows, sys.m, WeylOrder::component_elim(sys.m, i));
  std::vector<WeylOp> gens;
  for (const auto& g : gb.gens) {
    bool only_i = true;
    for (int c = 0; c < sys.m && only_i; ++c)
      if (c != i && !g.comps[static_cast<std::size_t>(c)].is_zero()) only_i = false;
    if (only_i && !g.comps[static_cast<std::size_t>(i)].is_zero())
      gens.push_back(g.comps[static_cast<std::size_t>(i)]);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// b-functions.

UniPoly ideal_bfunction(const std::vector<WeylOp>& gens, const WeightSpec& w, long cap) {
  if (cap < 0) throw std::invalid_argument("negative b-function cap");
  const WeylBasis gb = weyl_ideal_gb(gens, WeylOrder::weighted(w));

  // s = -(u1 x1 D1 + u2 x2 D2).
  WeylOp s;
  for (int i = 0; i < 2; ++i) {
    ExpVec e(kWeylVars);
    e.set(WX1 + i, 1);
    e.set(WD1 + i, 1);
    s = s + WeylOp::monomial(e, Rational(-w.u[static_cast<std::size_t>(i)]));
  }

  // Minimal monic dependence among the normal forms of 1, s, s^2, ...
  std::unordered_map<ExpVec, int, ExpVecHash> col_of;
  auto column = [&](const ExpVec& m) {
    auto [it, fresh] = col_of.try_emplace(m, static_cast<int>(col_of.size()));
    (void)fresh;
    return it->second;
  };
  // pivot column -> (sparse row, b-coefficient augmentation)
  std::map<int, std::pair<std::map<int, Rational>, std::vector<Rational>>> echelon;

  WeylOp spow = WeylOp::constant(1);
  for (long k = 0; k <= cap; ++k) {
    if (k > 0) spow = weyl_mul(spow, s);
    const WeylOp nf = weyl_normal_form(spow, gb);

    std::map<int, Rational> row;
    for (const auto& t : nf.terms()) row[column(t.mono)] = t.coef;
    std::vector<Rational> aug(static_cast<std::size_t>(k) + 1, Rational(0));
    aug[static_cast<std::size_t>(k)] = 1;

    while (!row.empty()) {
      auto pivot = row.begin();
      auto hit = echelon.find(pivot->first);
      if (hit == echelon.end()) break;
      const Rational factor = pivot->second;
      for (const auto& [col, val] : hit->second.first) {
        auto it = row.find(col);
        Rational next = (it == row.end() ? Rational(0) : it->second) - factor * val;
        if (is_zero(next)) {
          if (it != row.end()) row.erase(it);
        } else {
          row[col] = next;
        }
      }
      const auto& haug = hit->second.second;
      for (std::size_t j = 0; j < haug.size(); ++j) aug[j] -= factor * haug[j];
    }

    if (row.empty()) {
      UniPoly b{std::move(aug)};
      uni_trim(b.c);
      return b.monic();
    }
    const int pivot_col = row.begin()->first;
    const Rational lead = row.begin()->second;
    for (auto& [col, val] : row) val /= lead;
    for (auto& v : aug) v /= lead;
    echelon.emplace(pivot_col, std::make_pair(std::move(row), std::move(aug)));
  }
  throw std::runtime_error("b-function degree cap exceeded");
}

BFunctionResult module_bfunction(const RestrictionSystem& sys, long cap) {
  BFunctionResult res;
  res.p = sys.p;
  res.b = UniPoly{{Rational(1)}};
  for (int i = 0; i < sys.m; ++i) {
    const UniPoly bi = ideal_bfunction(component_ideal(sys, i), WeightSpec{}, cap);
    res.b = uni_lcm_monic(res.b, bi);
    res.per_component.push_back(bi);
  }
  auto [roots, rem] = integer_roots(res.b);
  res.roots = std::move(roots);
  res.all_roots_integer = rem.degree() <= 0;
  return res;
}

bool holonomicity_check(const RestrictionSystem& sys) {
  const WeylBasis gb = weyl_module_gb(sys.rows, sys.m, WeylOrder::term_order());
  for (int c = 0; c < sys.m; ++c) {
    std::vector<ExpVec> lts;
    bool comp_zero = false;
    for (const auto& [lm, comp] : gb.leads) {
      if (comp != c) continue;
      if (lm.is_constant()) comp_zero = true;
      lts.push_back(lm);
    }
    if (comp_zero) continue;  // zero component of the quotient
    // Bernstein dimension over (x1, x2, D1, D2) must be exactly 2.
    int best = -1;
    for (unsigned mask = 0; mask < 16u; ++mask) {
      bool ok = true;
      for (const auto& lm : lts) {
        bool inside = lm[WT1] == 0 && lm[WT2] == 0 && lm[WT3] == 0;
        for (int i = 0; i < 4 && inside; ++i)
          if (lm[i] > 0 && !(mask & (1u << i))) inside = false;
        if (inside) {
          ok = false;
          break;
        }
      }
      if (ok) best = std::max<int>(best, __builtin_popcount(mask));
    }
    if (best != 2) return false;
  }
  return true;
}

std::vector<long> theorem_b_support(const BFunctionResult& bf, long d) {
  std::vector<long> qs;
  for (const auto& [root, mult] : bf.roots) qs.push_back(root + d - 2);
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

TheoremBReport verify_theorem_b(const BigradedTable& table, const BFunctionResult& bf) {
  TheoremBReport rep;
  rep.p = bf.p;
  const long d = table.d;
  for (long q = 0; q <= d - 2; ++q)
    if (table.k(bf.p, q) > 0) rep.expected_q.push_back(q);
  rep.got_q = theorem_b_support(bf, d);
  rep.support_match = bf.all_roots_integer && rep.got_q == rep.expected_q;

  UniPoly prod{{Rational(1)}};
  for (long q : rep.expected_q) prod = uni_mul(prod, UniPoly{{Rational(d - 2 - q), Rational(1)}});
  rep.product_match = bf.all_roots_integer && prod.c == bf.b.c;
  return rep;
}

}  // namespace reesd
