#ifndef SYMQ_UTIL_HPP
#define SYMQ_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace symq {

/// Union-find over 0..n-1 with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  /// Returns true if the two classes were distinct. The smaller root wins,
  /// keeping representatives stable under insertion order.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  /// Partition as blocks of ascending members, blocks ordered by minimum.
  std::vector<std::vector<int>> blocks() {
    const int n = size();
    std::vector<int> root_block(n, -1);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
      const int r = find(i);
      if (root_block[r] < 0) {
        root_block[r] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[root_block[r]].push_back(i);
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

/// FNV-1a 64-bit digest, used for reproducible input fingerprints in reports.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& data);

}  // namespace symq

#endif  // SYMQ_UTIL_HPP
