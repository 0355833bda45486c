#include "symq/group_table.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "symq/errors.hpp"

namespace symq {

std::string validate_group(const FiniteGroupTable& g) {
  const int n = g.order();
  if (n == 0) return "empty table";
  if (g.id < 0 || g.id >= n) return "identity index out of range";
  if (static_cast<int>(g.inv.size()) != n) return "inverse array size mismatch";
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(g.mul[a].size()) != n) return "table is not square";
    for (int b = 0; b < n; ++b) {
      const int v = g.mul[a][b];
      if (v < 0 || v >= n) return "product out of range";
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.mul[g.id][a] != a || g.mul[a][g.id] != a)
      return "identity fails at element " + std::to_string(a);
    if (g.mul[a][g.inv[a]] != g.id || g.mul[g.inv[a]][a] != g.id)
      return "inverse fails at element " + std::to_string(a);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          return "associativity fails at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ", " + std::to_string(c) + ")";
  return {};
}

FiniteGroupTable group_from_permutations(const std::vector<Permutation>& gens,
                                         int degree,
                                         std::vector<int>* gen_elements) {
  std::map<Permutation, int> index;
  std::vector<Permutation> elems;
  const Permutation id = Permutation::identity(degree);
  index[id] = 0;
  elems.push_back(id);
  // BFS closure under right multiplication by the generators.
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const Permutation cur = elems[head];
    for (const auto& gperm : gens) {
      Permutation next = gperm.compose(cur);  // right action convention
      if (index.emplace(next, static_cast<int>(elems.size())).second)
        elems.push_back(std::move(next));
    }
  }

  const int n = static_cast<int>(elems.size());
  FiniteGroupTable g;
  g.id = 0;
  g.mul.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Permutation prod = elems[b].compose(elems[a]);
      g.mul[a][b] = index.at(prod);
    }
    g.inv[a] = index.at(elems[a].inverse());
  }
  if (gen_elements) {
    gen_elements->clear();
    for (const auto& gperm : gens) gen_elements->push_back(index.at(gperm));
  }
  return g;
}

FiniteGroupTable cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  FiniteGroupTable g;
  g.id = 0;
  g.mul.assign(n, std::vector<int>(n));
  g.inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    g.inv[a] = (n - a) % n;
  }
  return g;
}

ConjQuandle conjugation_quandle(const FiniteGroupTable& g,
                                std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const int m = static_cast<int>(subset.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[subset[i]] = i;

  ConjQuandle out;
  out.labels = subset;
  out.quandle.table.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int c = g.conj(subset[i], subset[j]);
      if (pos[c] < 0) throw NotClosedError(subset[i], subset[j]);
      out.quandle.table[i][j] = pos[c];
    }
  return out;
}

std::vector<int> generated_subgroup(const FiniteGroupTable& g,
                                    const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> stack;
  auto push = [&](int e) {
    if (!in[e]) {
      in[e] = 1;
      stack.push_back(e);
    }
  };
  push(g.id);
  for (int e : gens) push(e);
  for (std::size_t head = 0; head < stack.size(); ++head) {
    const int a = stack[head];
    push(g.inv[a]);
    for (std::size_t other = 0; other <= head; ++other) {
      push(g.mul[a][stack[other]]);
      push(g.mul[stack[other]][a]);
    }
  }
  std::vector<int> out;
  for (int e = 0; e < g.order(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

std::vector<int> derived_subgroup(const FiniteGroupTable& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const int c = g.mul[g.mul[a][b]][g.mul[g.inv[a]][g.inv[b]]];
      comms.push_back(c);
    }
  return generated_subgroup(g, comms);
}

}  // namespace symq
