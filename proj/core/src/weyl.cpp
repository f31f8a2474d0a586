#include "reesd/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace reesd {

namespace {

const char* kWeylNames[kWeylVars] = {"x1", "x2", "D1", "D2", "T1", "T2", "T3"};

// Canonical storage order: reverse-lex over (T,D,x) after total degree.
int canonical_cmp(const ExpVec& a, const ExpVec& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  static const int seq[kWeylVars] = {WT1, WT2, WT3, WD1, WD2, WX1, WX2};
  for (int i = kWeylVars - 1; i >= 0; --i) {
    int v = seq[i];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

bool term_greater(const WeylTerm& s, const WeylTerm& t) {
  return canonical_cmp(s.mono, t.mono) > 0;
}

}  // namespace

WeylOp::WeylOp(std::vector<WeylTerm> terms) {
  for (const auto& t : terms)
    if (t.mono.nvars() != kWeylVars) throw std::invalid_argument("operator term arity mismatch");
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (reesd::is_zero(t.coef)) continue;
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef += t.coef;
      if (reesd::is_zero(terms_.back().coef)) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

WeylOp WeylOp::constant(const Rational& c) { return WeylOp({{ExpVec(kWeylVars), c}}); }

WeylOp WeylOp::monomial(const ExpVec& e, const Rational& c) { return WeylOp({{e, c}}); }

WeylOp WeylOp::generator(int var) { return monomial(ExpVec::unit(kWeylVars, var)); }

WeylOp WeylOp::operator-() const {
  WeylOp r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

WeylOp WeylOp::operator+(const WeylOp& o) const {
  WeylOp r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && term_greater(terms_[i], o.terms_[j]))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || term_greater(o.terms_[j], terms_[i])) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coef + o.terms_[j].coef;
      if (!reesd::is_zero(c)) r.terms_.push_back({terms_[i].mono, std::move(c)});
      ++i, ++j;
    }
  }
  return r;
}

WeylOp WeylOp::operator-(const WeylOp& o) const { return *this + (-o); }

WeylOp WeylOp::scaled(const Rational& c) const {
  if (reesd::is_zero(c)) return WeylOp();
  WeylOp r(*this);
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

int WeylOp::cmp_terms(const WeylOp& o) const {
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    int c = canonical_cmp(terms_[i].mono, o.terms_[i].mono);
    if (c != 0) return c;
    int s = cmp(terms_[i].coef, o.terms_[i].coef);
    if (s != 0) return s;
  }
  return 0;
}

bool WeylOp::t_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const WeylTerm& t) {
    return t.mono[WT1] == 0 && t.mono[WT2] == 0 && t.mono[WT3] == 0;
  });
}

bool WeylOp::pure_derivative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const WeylTerm& t) {
    return t.mono[WX1] == 0 && t.mono[WX2] == 0 && t.mono[WT1] == 0 &&
           t.mono[WT2] == 0 && t.mono[WT3] == 0;
  });
}

long WeylOp::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool WeylOp::is_weight_homogeneous(const WeightSpec& w) const {
  if (terms_.empty()) return true;
  long ref = w.weight_of(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const WeylTerm& t) { return w.weight_of(t.mono) == ref; });
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    bool printed = false;
    if (!is_one(c) || t.mono.is_constant()) {
      os << to_string(c);
      printed = true;
    }
    for (int v : {WT1, WT2, WT3, WX1, WX2, WD1, WD2}) {
      if (t.mono[v] == 0) continue;
      if (printed) os << "*";
      os << kWeylNames[v];
      if (t.mono[v] > 1) os << "^" << t.mono[v];
      printed = true;
    }
  }
  return os.str();
}

namespace {

// (x^a D^b T^g) * (x^c D^e T^h) expanded to normal order:
// D^b x^c = sum_k C(b,k) C(c,k) k! x^(c-k) D^(b-k).
void mul_term_into(const WeylTerm& s, const WeylTerm& t,
                   std::unordered_map<ExpVec, Rational, ExpVecHash>& acc) {
  const int b1 = s.mono[WD1], b2 = s.mono[WD2];
  const int c1 = t.mono[WX1], c2 = t.mono[WX2];
  Rational base = s.coef * t.coef;
  for (int k1 = 0; k1 <= std::min(b1, c1); ++k1) {
    for (int k2 = 0; k2 <= std::min(b2, c2); ++k2) {
      BigInt w = binomial(b1, k1) * binomial(c1, k1) * factorial(k1) *
                 binomial(b2, k2) * binomial(c2, k2) * factorial(k2);
      ExpVec m(kWeylVars);
      m.set(WX1, s.mono[WX1] + c1 - k1);
      m.set(WX2, s.mono[WX2] + c2 - k2);
      m.set(WD1, b1 - k1 + t.mono[WD1]);
      m.set(WD2, b2 - k2 + t.mono[WD2]);
      m.set(WT1, s.mono[WT1] + t.mono[WT1]);
      m.set(WT2, s.mono[WT2] + t.mono[WT2]);
      m.set(WT3, s.mono[WT3] + t.mono[WT3]);
      acc[m] += base * Rational(w);
    }
  }
}

}  // namespace

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
  std::unordered_map<ExpVec, Rational, ExpVecHash> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) mul_term_into(s, t, acc);
  std::vector<WeylTerm> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!is_zero(c)) ts.push_back({m, std::move(c)});
  return WeylOp(std::move(ts));
}

WeylOp fourier(const WeylOp& a) {
  WeylOp out;
  for (const auto& t : a.terms()) {
    // x^a D^b T^g -> D^a (-x)^b T^g, renormalized.
    ExpVec da(kWeylVars), xb(kWeylVars), tg(kWeylVars);
    da.set(WD1, t.mono[WX1]);
    da.set(WD2, t.mono[WX2]);
    xb.set(WX1, t.mono[WD1]);
    xb.set(WX2, t.mono[WD2]);
    tg.set(WT1, t.mono[WT1]);
    tg.set(WT2, t.mono[WT2]);
    tg.set(WT3, t.mono[WT3]);
    int sign = (t.mono[WD1] + t.mono[WD2]) % 2 ? -1 : 1;
    WeylOp piece = weyl_mul(WeylOp::monomial(da, t.coef * sign), WeylOp::monomial(xb));
    out = out + weyl_mul(piece, WeylOp::monomial(tg));
  }
  return out;
}

WeylOp transpose_std(const WeylOp& a) {
  WeylOp out;
  for (const auto& t : a.terms()) {
    // x^a D^b T^g -> (-D)^b x^a T^g, renormalized.
    ExpVec db(kWeylVars), xa(kWeylVars), tg(kWeylVars);
    db.set(WD1, t.mono[WD1]);
    db.set(WD2, t.mono[WD2]);
    xa.set(WX1, t.mono[WX1]);
    xa.set(WX2, t.mono[WX2]);
    tg.set(WT1, t.mono[WT1]);
    tg.set(WT2, t.mono[WT2]);
    tg.set(WT3, t.mono[WT3]);
    int sign = (t.mono[WD1] + t.mono[WD2]) % 2 ? -1 : 1;
    WeylOp piece = weyl_mul(WeylOp::monomial(db, t.coef * sign), WeylOp::monomial(xa));
    out = out + weyl_mul(piece, WeylOp::monomial(tg));
  }
  return out;
}

WeylOp initial_form(const WeylOp& a, const WeightSpec& w) {
  if (a.is_zero()) return a;
  long best = w.weight_of(a.terms().front().mono);
  for (const auto& t : a.terms()) best = std::max(best, w.weight_of(t.mono));
  std::vector<WeylTerm> ts;
  for (const auto& t : a.terms())
    if (w.weight_of(t.mono) == best) ts.push_back(t);
  return WeylOp(std::move(ts));
}

CommPoly weyl_act(const WeylOp& a, const CommPoly& f) {
  const RingCtx& ctx = f.ctx();
  int ix[2] = {ctx->index_of("x1"), ctx->index_of("x2")};
  int it[3] = {ctx->index_of("T1"), ctx->index_of("T2"), ctx->index_of("T3")};
  CommPoly out = CommPoly::zero(ctx);
  for (const auto& t : a.terms()) {
    CommPoly piece = f;
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < t.mono[WD1 + i]; ++k) {
        if (ix[i] < 0) throw std::invalid_argument("ring lacks x variable for derivative");
        piece = piece.derivative(ix[i]);
      }
    if (piece.is_zero()) continue;
    ExpVec shift(ctx->nvars());
    for (int i = 0; i < 2; ++i) {
      if (t.mono[WX1 + i] == 0) continue;
      if (ix[i] < 0) throw std::invalid_argument("ring lacks x variable for multiplication");
      shift.set(ix[i], t.mono[WX1 + i]);
    }
    for (int i = 0; i < 3; ++i) {
      if (t.mono[WT1 + i] == 0) continue;
      if (it[i] < 0) throw std::invalid_argument("ring lacks T variable for multiplication");
      shift.set(it[i], t.mono[WT1 + i]);
    }
    out = out + piece.shifted(shift).scaled(t.coef);
  }
  return out;
}

WeylOp weyl_from_poly(const CommPoly& p) {
  const RingCtx& ctx = p.ctx();
  std::vector<int> map(static_cast<std::size_t>(ctx->nvars()), -1);
  for (int i = 0; i < ctx->nvars(); ++i) {
    const std::string& v = ctx->vars[static_cast<std::size_t>(i)];
    for (int w = 0; w < kWeylVars; ++w)
      if (v == kWeylNames[w]) map[static_cast<std::size_t>(i)] = w;
    if (map[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("variable " + v + " has no operator counterpart");
  }
  std::vector<WeylTerm> ts;
  for (const auto& t : p.terms()) {
    ExpVec m(kWeylVars);
    for (int i = 0; i < ctx->nvars(); ++i)
      if (t.mono[i]) m.set(map[static_cast<std::size_t>(i)], t.mono[i]);
    ts.push_back({m, t.coef});
  }
  return WeylOp(std::move(ts));
}

CommPoly derivative_part_to_poly(const WeylOp& a, const RingCtx& target) {
  int ix[2] = {target->index_of("x1"), target->index_of("x2")};
  if (ix[0] < 0 || ix[1] < 0) throw std::invalid_argument("target ring lacks x1,x2");
  std::vector<Term> ts;
  for (const auto& t : a.terms()) {
    if (t.mono[WX1] || t.mono[WX2] || t.mono[WT1] || t.mono[WT2] || t.mono[WT3])
      throw std::invalid_argument("not a pure derivative operator");
    ExpVec m(target->nvars());
    m.set(ix[0], t.mono[WD1]);
    m.set(ix[1], t.mono[WD2]);
    ts.push_back({m, t.coef});
  }
  return CommPoly(target, std::move(ts));
}

bool WeylVector::is_zero() const {
  return std::all_of(comps.begin(), comps.end(),
                     [](const WeylOp& p) { return p.is_zero(); });
}

WeylOrder WeylOrder::term_order() { return {}; }

WeylOrder WeylOrder::weighted(WeightSpec w) {
  WeylOrder o;
  o.use_weight = true;
  o.weights = w;
  return o;
}

WeylOrder WeylOrder::component_elim(int ncomps, int target) {
  WeylOrder o;
  o.position_first = true;
  o.comp_rank.resize(static_cast<std::size_t>(ncomps));
  int r = 0;
  for (int c = 0; c < ncomps; ++c)
    if (c != target) o.comp_rank[static_cast<std::size_t>(c)] = r++;
  o.comp_rank[static_cast<std::size_t>(target)] = r;
  return o;
}

int weyl_term_cmp(const WeylOrder& ord, const ExpVec& a, int ca, const ExpVec& b, int cb) {
  auto rank = [&](int c) {
    return ord.comp_rank.empty() ? c : ord.comp_rank[static_cast<std::size_t>(c)];
  };
  if (ord.position_first && ca != cb && rank(ca) != rank(cb))
    return rank(ca) < rank(cb) ? 1 : -1;
  if (ord.use_weight) {
    long wa = ord.weights.weight_of(a), wb = ord.weights.weight_of(b);
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  int c = canonical_cmp(a, b);
  if (c != 0) return c;
  if (ca == cb) return 0;
  return rank(ca) < rank(cb) ? 1 : -1;
}

}  // namespace reesd
