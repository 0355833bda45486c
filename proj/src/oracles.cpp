#include "symq/oracles.hpp"

#include <algorithm>

namespace symq {

namespace {

mpz_class determinant_of(const IntMat& m, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  const int sz = static_cast<int>(rows.size());
  if (sz == 1) return m.at(rows[0], cols[0]);
  mpz_class acc = 0;
  int sign = 1;
  const std::vector<int> rest(rows.begin() + 1, rows.end());
  for (int i = 0; i < sz; ++i) {
    std::vector<int> cc;
    cc.reserve(sz - 1);
    for (int j = 0; j < sz; ++j)
      if (j != i) cc.push_back(cols[j]);
    if (m.at(rows[0], cols[i]) != 0)
      acc += sign * m.at(rows[0], cols[i]) * determinant_of(m, rest, cc);
    sign = -sign;
  }
  return acc;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      out.push_back(pick);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

mpz_class naive_determinant(const IntMat& m) {
  std::vector<int> idx(m.rows);
  for (int i = 0; i < m.rows; ++i) idx[i] = i;
  return determinant_of(m, idx, idx);
}

mpz_class minor_gcd(const IntMat& m, int k) {
  mpz_class g = 0;
  for (const auto& r : k_subsets(m.rows, k))
    for (const auto& c : k_subsets(m.cols, k)) {
      const mpz_class d = determinant_of(m, r, c);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

std::vector<mpz_class> invariant_factors_by_minors(const IntMat& m) {
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
    const mpz_class dk = minor_gcd(m, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

}  // namespace symq
