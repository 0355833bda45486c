#include "symq/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symq/errors.hpp"
#include "symq/util.hpp"

namespace symq {

bool Permutation::is_bijection(const std::vector<int>& imgs) {
  const int n = static_cast<int>(imgs.size());
  std::vector<char> seen(n, 0);
  for (int v : imgs) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images.size());
  for (int i = 0; i < size(); ++i) inv[images[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  std::vector<int> out(images.size());
  for (int i = 0; i < size(); ++i) out[i] = images[other.images[i]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i)
    if (images[images[i]] != i) return false;
  return true;
}

namespace {

void require_square_in_range(const QuandleTable& q) {
  const int n = q.size();
  for (const auto& row : q.table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("operation table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("operation table entry out of range");
  }
}

}  // namespace

QuandleValidation validate_quandle(const QuandleTable& q) {
  require_square_in_range(q);
  const int n = q.size();
  QuandleValidation result;

  for (int x = 0; x < n; ++x)
    if (q.op(x, x) != x)
      result.violations.push_back({1, {x, -1, -1}});

  for (int y = 0; y < n; ++y) {
    std::vector<int> column(n);
    for (int x = 0; x < n; ++x) column[x] = q.op(x, y);
    if (!Permutation::is_bijection(column))
      result.violations.push_back({2, {-1, y, -1}});
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (q.op(q.op(x, y), z) != q.op(q.op(x, z), q.op(y, z))) {
          result.violations.push_back({3, {x, y, z}});
          goto done;  // one witness per axiom is enough
        }
done:
  return result;
}

QuandleTable trivial_quandle(int n) {
  if (n < 1) throw std::invalid_argument("quandle order must be positive");
  QuandleTable q;
  q.table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) q.table[x][y] = x;
  return q;
}

QuandleTable dihedral_quandle(int n) {
  if (n < 1) throw std::invalid_argument("quandle order must be positive");
  QuandleTable q;
  q.table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) q.table[x][y] = ((2 * y - x) % n + n) % n;
  return q;
}

Permutation inner_translation(const QuandleTable& q, int y) {
  std::vector<int> imgs(q.size());
  for (int x = 0; x < q.size(); ++x) imgs[x] = q.op(x, y);
  return Permutation(std::move(imgs));
}

std::vector<std::vector<int>> orbits(const QuandleTable& q) {
  // S_y and S_y⁻¹ generate the same partition as the edges x — x∗y.
  const int n = q.size();
  DisjointSets ds(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ds.unite(x, q.op(x, y));
  return ds.blocks();
}

std::vector<int> orbit_ids(const QuandleTable& q) {
  std::vector<int> ids(q.size(), -1);
  const auto parts = orbits(q);
  for (int b = 0; b < static_cast<int>(parts.size()); ++b)
    for (int x : parts[b]) ids[x] = b;
  return ids;
}

bool is_connected(const QuandleTable& q) { return orbits(q).size() == 1; }

bool is_involutive(const QuandleTable& q) {
  const int n = q.size();
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (q.op(q.op(x, y), y) != x) return false;
  return true;
}

QuandleTable relabel(const QuandleTable& q, const Permutation& p) {
  const int n = q.size();
  QuandleTable out;
  out.table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.table[p(x)][p(y)] = p(q.op(x, y));
  return out;
}

namespace {

/// Applies fn to every permutation of 0..n-1 in lexicographic order until
/// fn returns true; returns whether any call did.
template <typename Fn>
bool any_permutation(int n, Fn&& fn) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (fn(p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

bool are_isomorphic(const QuandleTable& a, const QuandleTable& b) {
  if (a.size() != b.size()) return false;
  return any_permutation(a.size(), [&](const std::vector<int>& p) {
    return relabel(a, Permutation(p)) == b;
  });
}

std::vector<int> canonical_key(const QuandleTable& q) {
  const int n = q.size();
  std::vector<int> best;
  any_permutation(n, [&](const std::vector<int>& p) {
    const QuandleTable r = relabel(q, Permutation(p));
    std::vector<int> flat;
    flat.reserve(n * n);
    for (const auto& row : r.table) flat.insert(flat.end(), row.begin(), row.end());
    if (best.empty() || flat < best) best = std::move(flat);
    return false;
  });
  return best;
}

namespace {

/// DFS over columns: column y is a permutation fixing y. Partial
/// self-distributivity (S_z S_y = S_{S_z(y)} S_z whenever all three
/// columns are already chosen) prunes the search.
class QuandleSearch {
 public:
  QuandleSearch(int n, std::vector<QuandleTable>& out) : n_(n), out_(out) {
    columns_.resize(n_);
    build_column_choices();
  }

  void run() { extend(0); }

 private:
  void build_column_choices() {
    // All permutations of 0..n-1 fixing each y, in lexicographic order.
    choices_.assign(n_, {});
    std::vector<int> p(n_);
    std::iota(p.begin(), p.end(), 0);
    do {
      for (int y = 0; y < n_; ++y)
        if (p[y] == y) choices_[y].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  bool compatible(int k) const {
    // Check S_z S_y = S_{S_z(y)} S_z for pairs whose columns all exist.
    for (int y = 0; y <= k; ++y)
      for (int z = 0; z <= k; ++z) {
        const int w = columns_[z][y];  // S_z(y)
        if (w > k) continue;
        for (int x = 0; x < n_; ++x)
          if (columns_[z][columns_[y][x]] != columns_[w][columns_[z][x]])
            return false;
      }
    return true;
  }

  void extend(int k) {
    if (k == n_) {
      QuandleTable q;
      q.table.assign(n_, std::vector<int>(n_));
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) q.table[x][y] = columns_[y][x];
      if (validate_quandle(q).ok()) out_.push_back(std::move(q));
      return;
    }
    for (const auto& col : choices_[k]) {
      columns_[k] = col;
      if (compatible(k)) extend(k + 1);
    }
  }

  int n_;
  std::vector<QuandleTable>& out_;
  std::vector<std::vector<int>> columns_;
  std::vector<std::vector<std::vector<int>>> choices_;
};

}  // namespace

std::vector<QuandleTable> enumerate_quandles(int n, int limit) {
  if (n < 1) throw std::invalid_argument("quandle order must be positive");
  if (n > limit)
    throw LimitExceededError("enumeration limit " + std::to_string(limit) +
                             " exceeded for order " + std::to_string(n));
  std::vector<QuandleTable> all;
  QuandleSearch(n, all).run();

  std::map<std::vector<int>, QuandleTable> classes;
  for (auto& q : all) {
    auto key = canonical_key(q);
    classes.emplace(std::move(key), std::move(q));
  }
  std::vector<QuandleTable> out;
  out.reserve(classes.size());
  for (auto& [key, q] : classes) out.push_back(std::move(q));
  return out;
}

}  // namespace symq
