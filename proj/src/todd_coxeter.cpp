#include "symq/todd_coxeter.hpp"

#include <deque>
#include <stdexcept>

#include "symq/errors.hpp"

namespace symq {

namespace {

/// Letters are mapped to table columns: generator g occupies column 2g,
/// its inverse 2g+1, so col ^ 1 inverts.
std::vector<int> to_columns(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const Letter& l : w)
    out.push_back(l.sign > 0 ? 2 * l.gen : 2 * l.gen + 1);
  return out;
}

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_gens,
             int max_cosets)
      : ngens_(static_cast<int>(p.generators.size())),
        ncols_(2 * ngens_),
        max_cosets_(max_cosets) {
    for (const Word& r : p.relators) {
      const Word reduced = free_cyclic_reduce(r);
      if (!reduced.empty()) relators_.push_back(to_columns(reduced));
    }
    for (const Word& s : subgroup_gens) {
      const Word reduced = free_reduce(s);  // cyclic reduction would
      if (!reduced.empty())                 // conjugate the subgroup
        subgroup_words_.push_back(to_columns(reduced));
    }
    new_coset();  // coset 0 = the subgroup itself
  }

  bool run() {
    for (const auto& w : subgroup_words_) {
      scan(0, w, /*fill=*/true);
      if (over_budget()) return false;
    }
    // Sweep until a full pass makes no change; in practice one pass
    // suffices, the outer loop is a correctness backstop.
    for (;;) {
      bool changed = false;
      for (std::size_t a = 0; a < tab_.size(); ++a) {
        if (!alive(static_cast<int>(a))) continue;
        for (const auto& rel : relators_) {
          const std::size_t before_rows = tab_.size();
          const long long before_live = live_;
          scan(find(static_cast<int>(a)), rel, /*fill=*/true);
          if (tab_.size() != before_rows || live_ != before_live)
            changed = true;
          if (over_budget()) return false;
          if (!alive(static_cast<int>(a))) break;
        }
        if (!alive(static_cast<int>(a))) continue;
        const int ra = find(static_cast<int>(a));
        for (int x = 0; x < ncols_; ++x)
          if (tab_[ra][x] < 0) {
            define(ra, x);
            changed = true;
            if (over_budget()) return false;
          }
      }
      if (!changed && table_closed()) return true;
      if (!changed) {
        // A pass with no change must already be closed; guard anyway.
        throw std::logic_error("coset enumeration stalled");
      }
    }
  }

  CosetTable extract(bool regular) {
    // Renumber survivors by first-definition order.
    std::vector<int> new_id(tab_.size(), -1);
    int count = 0;
    for (std::size_t a = 0; a < tab_.size(); ++a)
      if (alive(static_cast<int>(a))) new_id[a] = count++;

    CosetTable ct;
    ct.ngens = ngens_;
    ct.count = count;
    ct.regular = regular;
    ct.action.assign(ngens_, std::vector<int>(count, -1));
    ct.inv_action.assign(ngens_, std::vector<int>(count, -1));
    for (std::size_t a = 0; a < tab_.size(); ++a) {
      if (!alive(static_cast<int>(a))) continue;
      for (int g = 0; g < ngens_; ++g) {
        ct.action[g][new_id[a]] = new_id[find(tab_[a][2 * g])];
        ct.inv_action[g][new_id[a]] = new_id[find(tab_[a][2 * g + 1])];
      }
    }
    return ct;
  }

 private:
  bool alive(int a) { return find(a) == a; }

  int find(int a) {
    while (p_[a] != a) {
      p_[a] = p_[p_[a]];
      a = p_[a];
    }
    return a;
  }

  int new_coset() {
    tab_.emplace_back(ncols_, -1);
    p_.push_back(static_cast<int>(p_.size()));
    ++live_;
    return static_cast<int>(tab_.size()) - 1;
  }

  void define(int a, int x) {
    const int b = new_coset();
    tab_[a][x] = b;
    tab_[b][x ^ 1] = a;
  }

  /// Standard coincidence processing: the queue drains dead cosets,
  /// re-installing each of their edges between live representatives.
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --live_;
    dead_.push_back(b);
  }

  void process_coincidences() {
    while (!dead_.empty()) {
      const int d = dead_.front();
      dead_.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        const int f = tab_[d][x];
        if (f < 0) continue;
        tab_[d][x] = -1;
        if (tab_[f][x ^ 1] == d) tab_[f][x ^ 1] = -1;
        const int d1 = find(d);
        const int f1 = find(f);
        if (tab_[d1][x] >= 0)
          merge(f1, tab_[d1][x]);
        else if (tab_[f1][x ^ 1] >= 0)
          merge(d1, tab_[f1][x ^ 1]);
        else {
          tab_[d1][x] = f1;
          tab_[f1][x ^ 1] = d1;
        }
      }
    }
  }

  /// Two-pointer scan of a word at coset a. With fill set, gaps are
  /// closed by defining new cosets (HLT); without it the scan only
  /// applies deductions and coincidences (lookahead mode).
  void scan(int a, const std::vector<int>& w, bool fill) {
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    int f = a;
    int b = a;
    for (;;) {
      while (i <= j && tab_[f][w[i]] >= 0) {
        f = find(tab_[f][w[i]]);
        ++i;
      }
      if (i > j) {
        if (f != b) {
          merge(f, b);
          process_coincidences();
        }
        return;
      }
      while (j >= i && tab_[b][w[j] ^ 1] >= 0) {
        b = find(tab_[b][w[j] ^ 1]);
        --j;
      }
      if (j < i) {
        merge(f, b);
        process_coincidences();
        return;
      }
      if (j == i) {  // deduction closes the gap
        tab_[f][w[i]] = b;
        tab_[b][w[i] ^ 1] = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
      f = find(tab_[f][w[i]]);
      ++i;
    }
  }

  /// On budget pressure, try one collapse pass before conceding.
  bool over_budget() {
    if (live_ <= max_cosets_) return false;
    lookahead();
    return live_ > max_cosets_;
  }

  void lookahead() {
    for (std::size_t a = 0; a < tab_.size(); ++a) {
      if (!alive(static_cast<int>(a))) continue;
      for (const auto& rel : relators_) {
        scan(find(static_cast<int>(a)), rel, /*fill=*/false);
        if (!alive(static_cast<int>(a))) break;
      }
    }
  }

  bool table_closed() {
    for (std::size_t a = 0; a < tab_.size(); ++a) {
      if (!alive(static_cast<int>(a))) continue;
      for (int x = 0; x < ncols_; ++x)
        if (tab_[a][x] < 0) return false;
      for (const auto& rel : relators_) {
        int c = static_cast<int>(a);
        for (int x : rel) c = find(tab_[c][x]);
        if (c != static_cast<int>(a)) return false;
      }
    }
    for (const auto& w : subgroup_words_) {
      int c = 0;
      for (int x : w) {
        if (tab_[c][x] < 0) return false;
        c = find(tab_[c][x]);
      }
      if (c != find(0)) return false;
    }
    return true;
  }

  int ngens_;
  int ncols_;
  long long max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_words_;
  std::vector<std::vector<int>> tab_;
  std::vector<int> p_;
  std::deque<int> dead_;
  long long live_ = 0;
};

}  // namespace

ToddCoxeterResult todd_coxeter(const Presentation& p,
                               const std::vector<Word>& subgroup_gens,
                               int max_cosets) {
  if (max_cosets < 1)
    throw std::invalid_argument("coset budget must be at least 1");
  Enumerator e(p, subgroup_gens, max_cosets);
  ToddCoxeterResult out;
  if (!e.run()) {
    out.bound_exceeded = true;
    return out;
  }
  out.table = e.extract(subgroup_gens.empty());
  return out;
}

GroupFromCosets coset_group_table(const CosetTable& ct) {
  if (!ct.regular) throw NotRegularError();
  const int n = ct.count;

  // BFS from the identity coset; words to each coset give the
  // multiplication: a·b traces a along the word of b.
  std::vector<int> parent(n, -1), parent_col(n, -1);
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int c = order[head];
    for (int col = 0; col < 2 * ct.ngens; ++col) {
      const int g = col / 2;
      const int d =
          (col % 2 == 0) ? ct.action[g][c] : ct.inv_action[g][c];
      if (!seen[d]) {
        seen[d] = 1;
        parent[d] = c;
        parent_col[d] = col;
        order.push_back(d);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw NotRegularError();  // unreachable cosets: not a regular action

  std::vector<std::vector<int>> words(n);
  for (int c : order) {
    if (c == 0) continue;
    words[c] = words[parent[c]];
    words[c].push_back(parent_col[c]);
  }

  GroupFromCosets out;
  out.group.id = 0;
  out.group.mul.assign(n, std::vector<int>(n));
  out.group.inv.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int c = a;
      for (int col : words[b]) {
        const int g = col / 2;
        c = (col % 2 == 0) ? ct.action[g][c] : ct.inv_action[g][c];
      }
      out.group.mul[a][b] = c;
      if (c == 0) out.group.inv[a] = b;
    }
  }
  for (int g = 0; g < ct.ngens; ++g)
    out.generator_images.push_back(ct.action[g][0]);
  return out;
}

}  // namespace symq
