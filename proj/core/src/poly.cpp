#include "reesd/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace reesd {

namespace {

const MonomialOrder& canonical_order() {
  static const MonomialOrder ord = MonomialOrder::degrevlex();
  return ord;
}

bool term_greater(const Term& a, const Term& b) {
  return mono_cmp(canonical_order(), a.mono, b.mono) > 0;
}

}  // namespace

CommPoly::CommPoly(RingCtx ctx, std::vector<Term> terms) : ctx_(std::move(ctx)) {
  for (const auto& t : terms)
    if (t.mono.nvars() != ctx_->nvars()) throw std::invalid_argument("term arity mismatch");
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

CommPoly CommPoly::constant(RingCtx ctx, const Rational& c) {
  ExpVec e(ctx->nvars());
  return CommPoly(std::move(ctx), {{e, c}});
}

CommPoly CommPoly::monomial(RingCtx ctx, const ExpVec& e, const Rational& c) {
  return CommPoly(std::move(ctx), {{e, c}});
}

CommPoly CommPoly::variable(const RingCtx& ctx, std::string_view name) {
  int i = ctx->index_of(name);
  if (i < 0) throw std::invalid_argument("unknown variable: " + std::string(name));
  return monomial(ctx, ExpVec::unit(ctx->nvars(), i));
}

const Term& CommPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.front();
}

CommPoly CommPoly::operator-() const {
  CommPoly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  require_same_ring(ctx_, o.ctx_);
  CommPoly r(ctx_);
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

CommPoly CommPoly::operator-(const CommPoly& o) const { return *this + (-o); }

CommPoly CommPoly::operator*(const CommPoly& o) const {
  require_same_ring(ctx_, o.ctx_);
  std::unordered_map<ExpVec, Rational, ExpVecHash> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.mono.plus(b.mono)] += a.coef * b.coef;
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!reesd::is_zero(c)) ts.push_back({m, std::move(c)});
  return CommPoly(ctx_, std::move(ts));
}

CommPoly CommPoly::scaled(const Rational& c) const {
  if (reesd::is_zero(c)) return zero(ctx_);
  CommPoly r(*this);
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

CommPoly CommPoly::shifted(const ExpVec& m) const {
  CommPoly r(*this);
  for (auto& t : r.terms_) t.mono = t.mono.plus(m);
  return r;
}

bool CommPoly::operator==(const CommPoly& o) const {
  if (!same_ring(ctx_, o.ctx_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::optional<CommPoly> CommPoly::divided_by(const CommPoly& d) const {
  require_same_ring(ctx_, d.ctx_);
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  CommPoly rem(*this), quot(ctx_);
  const Term& lt = d.leading_term();
  while (!rem.is_zero()) {
    const Term& rt = rem.leading_term();
    if (!lt.mono.divides(rt.mono)) return std::nullopt;
    CommPoly piece = monomial(ctx_, rt.mono.minus(lt.mono), rt.coef / lt.coef);
    quot = quot + piece;
    rem = rem - piece * d;
  }
  return quot;
}

CommPoly CommPoly::derivative(int var) const {
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    ExpVec m = t.mono;
    m.set(var, t.mono[var] - 1);
    ts.push_back({m, t.coef * t.mono[var]});
  }
  return CommPoly(ctx_, std::move(ts));
}

long CommPoly::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool CommPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = terms_.front().mono.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.total_degree() == d; });
}

std::optional<std::pair<long, long>> CommPoly::bidegree() const {
  if (terms_.empty()) throw std::invalid_argument("bidegree of zero is undefined");
  auto bd = ctx_->bidegree_of_monomial(terms_.front().mono);
  for (const auto& t : terms_)
    if (ctx_->bidegree_of_monomial(t.mono) != bd) return std::nullopt;
  return bd;
}

Rational CommPoly::content() const {
  if (terms_.empty()) return 1;
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
    num_gcd = g;
    BigInt l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    den_lcm = l;
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(terms_.front().coef) < 0) c = -c;
  return c;
}

CommPoly CommPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / content());
}

CommPoly CommPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / leading_term().coef);
}

CommPoly CommPoly::mapped_to(const RingCtx& target) const {
  std::vector<int> map(static_cast<std::size_t>(ctx_->nvars()), -1);
  for (int i = 0; i < ctx_->nvars(); ++i)
    map[static_cast<std::size_t>(i)] = target->index_of(ctx_->vars[static_cast<std::size_t>(i)]);
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    ExpVec m(target->nvars());
    for (int i = 0; i < ctx_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[static_cast<std::size_t>(i)] < 0)
        throw std::invalid_argument("variable " + ctx_->vars[static_cast<std::size_t>(i)] +
                                    " absent from target ring");
      m.set(map[static_cast<std::size_t>(i)], t.mono[i]);
    }
    ts.push_back({m, t.coef});
  }
  return CommPoly(target, std::move(ts));
}

std::string CommPoly::str() const {
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
    for (int i = 0; i < ctx_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (printed) os << "*";
      os << ctx_->vars[static_cast<std::size_t>(i)];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      printed = true;
    }
  }
  return os.str();
}

int CommPoly::compare(const CommPoly& a, const CommPoly& b) {
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    int c = mono_cmp(canonical_order(), a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return c;
    int s = cmp(a.terms_[i].coef, b.terms_[i].coef);
    if (s != 0) return s > 0 ? 1 : -1;
  }
  return 0;
}

bool CommVector::is_zero() const {
  return std::all_of(comps.begin(), comps.end(),
                     [](const CommPoly& p) { return p.is_zero(); });
}

namespace {

// Univariate gcd over Q, coefficients indexed by degree, monic output.
std::vector<Rational> uni_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& v) {
    while (!v.empty() && is_zero(v.back())) v.pop_back();
  };
  trim(a), trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

CommPoly homogeneous_gcd(const CommPoly& f, const CommPoly& g) {
  require_same_ring(f.ctx(), g.ctx());
  if (f.ctx()->nvars() != 2) throw std::invalid_argument("gcd needs a bivariate ring");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw std::invalid_argument("gcd needs homogeneous input");
  // f = x^e * H(u) with u = f(1, t) and H the degree-preserving rehomogenization.
  auto split = [](const CommPoly& p, long& xpow) {
    std::vector<Rational> u(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
    long min_x = p.degree();
    for (const auto& t : p.terms()) min_x = std::min<long>(min_x, t.mono[0]);
    for (const auto& t : p.terms()) u[static_cast<std::size_t>(t.mono[1])] = t.coef;
    while (!u.empty() && is_zero(u.back())) u.pop_back();
    xpow = min_x;
    return u;
  };
  long ex = 0, ey = 0;
  auto u = split(f, ex), v = split(g, ey);
  auto w = uni_gcd(u, v);
  long deg_w = static_cast<long>(w.size()) - 1;
  std::vector<Term> ts;
  ExpVec e(2);
  long xshift = std::min(ex, ey);
  for (long i = 0; i <= deg_w; ++i) {
    if (is_zero(w[static_cast<std::size_t>(i)])) continue;
    ExpVec m(2);
    m.set(0, static_cast<int>(deg_w - i + xshift));
    m.set(1, static_cast<int>(i));
    ts.push_back({m, w[static_cast<std::size_t>(i)]});
  }
  return CommPoly(f.ctx(), std::move(ts)).monic();
}

}  // namespace reesd
