#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reesd/rational.hpp"

namespace reesd {

inline constexpr int kMaxVars = 8;

// Packed exponent vector for up to kMaxVars variables.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(int nvars) : n_(static_cast<std::int8_t>(nvars)) {
    if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("bad variable count");
  }

  static ExpVec unit(int nvars, int i) {
    ExpVec e(nvars);
    e.set(i, 1);
    return e;
  }

  int nvars() const { return n_; }
  std::uint16_t operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int v) {
    if (i < 0 || i >= n_ || v < 0 || v > 0xffff) throw std::out_of_range("exponent out of range");
    e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
  }

  long total_degree() const {
    long s = 0;
    for (int i = 0; i < n_; ++i) s += e_[static_cast<std::size_t>(i)];
    return s;
  }

  bool is_constant() const { return total_degree() == 0; }

  bool divides(const ExpVec& m) const {
    for (int i = 0; i < n_; ++i)
      if (e_[static_cast<std::size_t>(i)] > m.e_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  ExpVec plus(const ExpVec& o) const {
    ExpVec r(n_);
    for (int i = 0; i < n_; ++i) {
      unsigned s = e_[static_cast<std::size_t>(i)] + o.e_[static_cast<std::size_t>(i)];
      if (s > 0xffff) throw std::overflow_error("exponent overflow");
      r.e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(s);
    }
    return r;
  }

  // Requires o.divides(*this).
  ExpVec minus(const ExpVec& o) const {
    ExpVec r(n_);
    for (int i = 0; i < n_; ++i)
      r.e_[static_cast<std::size_t>(i)] =
          static_cast<std::uint16_t>(e_[static_cast<std::size_t>(i)] - o.e_[static_cast<std::size_t>(i)]);
    return r;
  }

  static ExpVec lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      r.e_[static_cast<std::size_t>(i)] = std::max(a.e_[static_cast<std::size_t>(i)],
                                                   b.e_[static_cast<std::size_t>(i)]);
    return r;
  }

  bool coprime_with(const ExpVec& o) const {
    for (int i = 0; i < n_; ++i)
      if (e_[static_cast<std::size_t>(i)] && o.e_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  bool operator==(const ExpVec& o) const { return n_ == o.n_ && e_ == o.e_; }
  bool operator!=(const ExpVec& o) const { return !(*this == o); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (int i = 0; i < n_; ++i) {
      h ^= e_[static_cast<std::size_t>(i)];
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::int8_t n_ = 0;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& e) const { return e.hash(); }
};

// Immutable description of a bigraded polynomial ring over Q.
struct RingContext {
  std::vector<std::string> vars;
  std::vector<std::pair<int, int>> bideg;  // per-variable bidegree

  int nvars() const { return static_cast<int>(vars.size()); }
  int index_of(std::string_view name) const;  // -1 when absent
  std::pair<long, long> bidegree_of_monomial(const ExpVec& e) const;
};

using RingCtx = std::shared_ptr<const RingContext>;

// Distinct variable names required; bidegrees default to (1,0) per variable.
RingCtx make_ring(std::vector<std::string> vars,
                  std::vector<std::pair<int, int>> bideg = {});

// Structural equality (fast path: same object).
bool same_ring(const RingCtx& a, const RingCtx& b);
void require_same_ring(const RingCtx& a, const RingCtx& b);

// Derived ring with `drop` removed; `keep_index[i]` maps new index -> old.
RingCtx ring_without(const RingCtx& ctx, const std::vector<std::string>& drop,
                     std::vector<int>* keep_index = nullptr);

// ---------------------------------------------------------------------------
// Monomial orders.

struct MonomialOrder {
  enum class Kind { Lex, DegRevLex, Weighted, Block };

  Kind kind = Kind::DegRevLex;
  // Weighted: weight per variable, ties by *tiebreak.
  std::vector<long> weights;
  std::shared_ptr<const MonomialOrder> tiebreak;
  // Block: variables [0, block_split) compared first under *block_first,
  // rest under *block_rest.
  int block_split = 0;
  std::shared_ptr<const MonomialOrder> block_first, block_rest;

  static MonomialOrder lex() { return {Kind::Lex, {}, nullptr, 0, nullptr, nullptr}; }
  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder weighted(std::vector<long> w, MonomialOrder tb);
  static MonomialOrder block_elim(int split);  // degrevlex within both blocks
};

// Three-way comparison: +1 when a > b.
int mono_cmp(const MonomialOrder& ord, const ExpVec& a, const ExpVec& b);

// True when total degree strictly increases implies strictly greater.
bool degree_compatible(const MonomialOrder& ord);

// Order on free-module terms (monomial, component).
struct ModuleOrder {
  enum class Strategy { PositionOverTerm, TermOverPosition };

  Strategy strategy = Strategy::TermOverPosition;
  MonomialOrder base;
  // comp_rank[c]: smaller rank compares greater; empty = identity ranking.
  std::vector<int> comp_rank;

  static ModuleOrder pot(MonomialOrder base, std::vector<int> comp_rank = {});
  static ModuleOrder top(MonomialOrder base, std::vector<int> comp_rank = {});
};

int modterm_cmp(const ModuleOrder& ord, const ExpVec& a, int ca, const ExpVec& b, int cb);

// All monomials of the ring with the exact bidegree (p, q), sorted descending
// under `ord`. Requires componentwise non-negative variable bidegrees.
std::vector<ExpVec> enumerate_monomials(const RingCtx& ctx, long p, long q,
                                        const MonomialOrder& ord = MonomialOrder::degrevlex());

}  // namespace reesd
