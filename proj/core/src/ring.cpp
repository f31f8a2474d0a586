#include "reesd/ring.hpp"

#include <algorithm>
#include <set>

namespace reesd {

int RingContext::index_of(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

std::pair<long, long> RingContext::bidegree_of_monomial(const ExpVec& e) const {
  long p = 0, q = 0;
  for (int i = 0; i < nvars(); ++i) {
    p += static_cast<long>(e[i]) * bideg[static_cast<std::size_t>(i)].first;
    q += static_cast<long>(e[i]) * bideg[static_cast<std::size_t>(i)].second;
  }
  return {p, q};
}

RingCtx make_ring(std::vector<std::string> vars, std::vector<std::pair<int, int>> bideg) {
  if (vars.empty() || vars.size() > kMaxVars) throw std::invalid_argument("bad variable count");
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) throw std::invalid_argument("duplicate variable names");
  if (bideg.empty()) bideg.assign(vars.size(), {1, 0});
  if (bideg.size() != vars.size()) throw std::invalid_argument("bidegree count mismatch");
  auto ctx = std::make_shared<RingContext>();
  ctx->vars = std::move(vars);
  ctx->bideg = std::move(bideg);
  return ctx;
}

bool same_ring(const RingCtx& a, const RingCtx& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->vars == b->vars && a->bideg == b->bideg;
}

void require_same_ring(const RingCtx& a, const RingCtx& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("ring context mismatch");
}

RingCtx ring_without(const RingCtx& ctx, const std::vector<std::string>& drop,
                     std::vector<int>* keep_index) {
  std::vector<std::string> vars;
  std::vector<std::pair<int, int>> bideg;
  std::vector<int> keep;
  for (int i = 0; i < ctx->nvars(); ++i) {
    const auto& v = ctx->vars[static_cast<std::size_t>(i)];
    if (std::find(drop.begin(), drop.end(), v) != drop.end()) continue;
    vars.push_back(v);
    bideg.push_back(ctx->bideg[static_cast<std::size_t>(i)]);
    keep.push_back(i);
  }
  if (keep_index) *keep_index = keep;
  return make_ring(std::move(vars), std::move(bideg));
}

MonomialOrder MonomialOrder::weighted(std::vector<long> w, MonomialOrder tb) {
  MonomialOrder o;
  o.kind = Kind::Weighted;
  o.weights = std::move(w);
  o.tiebreak = std::make_shared<const MonomialOrder>(std::move(tb));
  return o;
}

MonomialOrder MonomialOrder::block_elim(int split) {
  MonomialOrder o;
  o.kind = Kind::Block;
  o.block_split = split;
  o.block_first = std::make_shared<const MonomialOrder>(degrevlex());
  o.block_rest = std::make_shared<const MonomialOrder>(degrevlex());
  return o;
}

namespace {

int cmp_lex(const ExpVec& a, const ExpVec& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

// Higher degree wins; on ties the smaller exponent at the last differing
// variable wins.
int cmp_degrevlex(const ExpVec& a, const ExpVec& b, int lo, int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_range(const MonomialOrder& ord, const ExpVec& a, const ExpVec& b, int lo, int hi);

int cmp_weighted(const MonomialOrder& ord, const ExpVec& a, const ExpVec& b, int lo, int hi) {
  long wa = 0, wb = 0;
  for (int i = lo; i < hi; ++i) {
    wa += static_cast<long>(a[i]) * ord.weights[static_cast<std::size_t>(i)];
    wb += static_cast<long>(b[i]) * ord.weights[static_cast<std::size_t>(i)];
  }
  if (wa != wb) return wa > wb ? 1 : -1;
  return cmp_range(*ord.tiebreak, a, b, lo, hi);
}

int cmp_range(const MonomialOrder& ord, const ExpVec& a, const ExpVec& b, int lo, int hi) {
  switch (ord.kind) {
    case MonomialOrder::Kind::Lex:
      return cmp_lex(a, b, lo, hi);
    case MonomialOrder::Kind::DegRevLex:
      return cmp_degrevlex(a, b, lo, hi);
    case MonomialOrder::Kind::Weighted:
      return cmp_weighted(ord, a, b, lo, hi);
    case MonomialOrder::Kind::Block: {
      int c = cmp_range(*ord.block_first, a, b, lo, std::min(hi, ord.block_split));
      if (c != 0) return c;
      return cmp_range(*ord.block_rest, a, b, std::max(lo, ord.block_split), hi);
    }
  }
  return 0;
}

}  // namespace

int mono_cmp(const MonomialOrder& ord, const ExpVec& a, const ExpVec& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("exponent arity mismatch");
  return cmp_range(ord, a, b, 0, a.nvars());
}

bool degree_compatible(const MonomialOrder& ord) {
  switch (ord.kind) {
    case MonomialOrder::Kind::DegRevLex:
      return true;
    case MonomialOrder::Kind::Weighted:
      return std::all_of(ord.weights.begin(), ord.weights.end(),
                         [](long w) { return w == 1; });
    default:
      return false;
  }
}

ModuleOrder ModuleOrder::pot(MonomialOrder base, std::vector<int> comp_rank) {
  return {Strategy::PositionOverTerm, std::move(base), std::move(comp_rank)};
}

ModuleOrder ModuleOrder::top(MonomialOrder base, std::vector<int> comp_rank) {
  return {Strategy::TermOverPosition, std::move(base), std::move(comp_rank)};
}

int modterm_cmp(const ModuleOrder& ord, const ExpVec& a, int ca, const ExpVec& b, int cb) {
  auto rank = [&](int c) {
    return ord.comp_rank.empty() ? c : ord.comp_rank[static_cast<std::size_t>(c)];
  };
  if (ord.strategy == ModuleOrder::Strategy::PositionOverTerm) {
    if (ca != cb && rank(ca) != rank(cb)) return rank(ca) < rank(cb) ? 1 : -1;
    return mono_cmp(ord.base, a, b);
  }
  int c = mono_cmp(ord.base, a, b);
  if (c != 0) return c;
  if (ca == cb) return 0;
  return rank(ca) < rank(cb) ? 1 : -1;
}

std::vector<ExpVec> enumerate_monomials(const RingCtx& ctx, long p, long q,
                                        const MonomialOrder& ord) {
  for (auto [dp, dq] : ctx->bideg)
    if (dp < 0 || dq < 0) throw std::invalid_argument("enumeration needs non-negative bidegrees");
  if (p < 0 || q < 0) return {};
  std::vector<ExpVec> out;
  ExpVec cur(ctx->nvars());
  // Depth-first over variables, pruning on the remaining bidegree.
  auto rec = [&](auto&& self, int i, long rp, long rq) -> void {
    if (i == ctx->nvars()) {
      if (rp == 0 && rq == 0) out.push_back(cur);
      return;
    }
    auto [dp, dq] = ctx->bideg[static_cast<std::size_t>(i)];
    long cap = 0x7fffffff;
    if (dp > 0) cap = std::min(cap, rp / dp);
    if (dq > 0) cap = std::min(cap, rq / dq);
    if (dp == 0 && dq == 0) cap = 0;  // degree-free variable would be unbounded
    for (long e = 0; e <= cap; ++e) {
      cur.set(i, static_cast<int>(e));
      self(self, i + 1, rp - e * dp, rq - e * dq);
    }
    cur.set(i, 0);
  };
  rec(rec, 0, p, q);
  std::sort(out.begin(), out.end(),
            [&](const ExpVec& a, const ExpVec& b) { return mono_cmp(ord, a, b) > 0; });
  return out;
}

}  // namespace reesd
