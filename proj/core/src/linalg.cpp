#include "reesd/linalg.hpp"

#include <algorithm>
#include <map>

namespace reesd {

namespace {

// Scale to integer entries with content 1 and positive leading coefficient.
void normalize_row(SparseRow& r) {
  r.erase(std::remove_if(r.begin(), r.end(),
                         [](const auto& e) { return is_zero(e.second); }),
          r.end());
  if (r.empty()) return;
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& [c, v] : r) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    den_lcm = l;
  }
  for (auto& [c, v] : r) {
    v *= den_lcm;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    num_gcd = g;
  }
  if (sgn(r.front().second) < 0) num_gcd = -num_gcd;
  for (auto& [c, v] : r) {
    v /= num_gcd;
    v.canonicalize();
  }
}

// r := (a*r - b*p) / content, where p's leading column cancels r's.
SparseRow eliminate_with(const SparseRow& r, const SparseRow& p) {
  const Rational& a = p.front().second;
  const Rational& b = r.front().second;
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -b * p[j].second);
      ++j;
    } else {
      Rational v = a * r[i].second - b * p[j].second;
      if (!is_zero(v)) out.emplace_back(r[i].first, std::move(v));
      ++i, ++j;
    }
  }
  normalize_row(out);
  return out;
}

// Echelonizes; returns pivot rows keyed by pivot column.
std::map<int, SparseRow> echelonize(SparseMatrix& m) {
  std::map<int, SparseRow> pivots;
  // Deterministic: rows processed in order, each reduced against pivots found
  // so far; sparsest-first among equal candidates is skipped for simplicity.
  for (auto& row : m.rows) {
    SparseRow r = std::move(row);
    normalize_row(r);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) break;
      r = eliminate_with(r, it->second);
    }
    if (!r.empty()) pivots.emplace(r.front().first, std::move(r));
  }
  m.rows.clear();
  return pivots;
}

}  // namespace

void SparseMatrix::add_row(SparseRow r) {
  std::sort(r.begin(), r.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  rows.push_back(std::move(r));
}

long rank_of(SparseMatrix m) { return static_cast<long>(echelonize(m).size()); }

std::vector<std::vector<Rational>> kernel_basis(SparseMatrix m) {
  const int n = m.ncols;
  auto pivots = echelonize(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (const auto& [c, r] : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(f)] = 1;
    // Back-substitute pivot coordinates from the bottom up; pivot rows with
    // pivot column beyond f never touch column f and stay zero.
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto& [pc, row] = *it;
      if (pc > f) continue;
      Rational s = 0;
      for (std::size_t k = 1; k < row.size(); ++k)
        s += row[k].second * v[static_cast<std::size_t>(row[k].first)];
      v[static_cast<std::size_t>(pc)] = -s / row.front().second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace reesd
