#include "symq/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

#include "symq/util.hpp"

namespace symq {

std::optional<InvolutionViolation> check_good_involution(
    const QuandleTable& q, const Permutation& rho) {
  const int n = q.size();
  if (rho.size() != n || !Permutation::is_bijection(rho.images))
    throw std::invalid_argument("rho is not a permutation of the quandle");

  using Kind = InvolutionViolation::Kind;
  for (int x = 0; x < n; ++x)
    if (rho(rho(x)) != x)
      return InvolutionViolation{Kind::NotInvolution, x, -1};

  // Condition 2 before condition 1: it is the column identity
  // S_{ρ(y)} = S_y⁻¹ that also serves as the enumeration pre-filter.
  // x∗ρ(y) = S_y⁻¹(x), checked via S_y(x∗ρ(y)) = x.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.op(q.op(x, rho(y)), y) != x)
        return InvolutionViolation{Kind::Axiom2, x, y};

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rho(q.op(x, y)) != q.op(rho(x), y))
        return InvolutionViolation{Kind::Axiom1, x, y};

  return std::nullopt;
}

namespace {

void involutions_rec(int n, std::vector<int>& img, std::vector<char>& used,
                     std::vector<Permutation>& out) {
  int x = 0;
  while (x < n && used[x]) ++x;
  if (x == n) {
    out.emplace_back(img);
    return;
  }
  used[x] = 1;
  img[x] = x;
  involutions_rec(n, img, used, out);
  for (int y = x + 1; y < n; ++y) {
    if (used[y]) continue;
    used[y] = 1;
    img[x] = y;
    img[y] = x;
    involutions_rec(n, img, used, out);
    used[y] = 0;
  }
  used[x] = 0;
}

}  // namespace

std::vector<Permutation> all_involutions(int n) {
  std::vector<Permutation> out;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  involutions_rec(n, img, used, out);
  return out;
}

std::vector<Permutation> enumerate_good_involutions(const QuandleTable& q) {
  const int n = q.size();
  std::vector<Permutation> columns, inverse_columns;
  for (int y = 0; y < n; ++y) {
    columns.push_back(inner_translation(q, y));
    inverse_columns.push_back(columns.back().inverse());
  }
  std::vector<Permutation> out;
  for (const Permutation& rho : all_involutions(n)) {
    bool plausible = true;  // S_{ρ(y)} = S_y⁻¹ pre-filter
    for (int y = 0; y < n && plausible; ++y)
      plausible = columns[rho(y)] == inverse_columns[y];
    if (plausible && !check_good_involution(q, rho)) out.push_back(rho);
  }
  return out;
}

SymClassData sym_classes(const QuandleTable& q, const Permutation& rho) {
  const int n = q.size();
  SymClassData data;
  data.orbits = orbits(q);
  data.orbit_of = orbit_ids(q);

  DisjointSets ds(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) ds.unite(x, q.op(x, y));
    ds.unite(x, rho(x));
  }
  data.classes = ds.blocks();
  data.class_of.assign(n, -1);
  for (int c = 0; c < static_cast<int>(data.classes.size()); ++c) {
    for (int x : data.classes[c]) data.class_of[x] = c;
    data.reps.push_back(data.classes[c].front());
  }

  for (int c = 0; c < static_cast<int>(data.reps.size()); ++c) {
    const int rep = data.reps[c];
    if (data.orbit_of[rho(rep)] == data.orbit_of[rep])
      data.lambda1.push_back(c);
    else
      data.lambda2.push_back(c);
  }

  data.trichotomy_reps = data.reps;
  for (int c : data.lambda2) data.trichotomy_reps.push_back(rho(data.reps[c]));
  std::sort(data.trichotomy_reps.begin(), data.trichotomy_reps.end());
  return data;
}

TrichotomyAssignment orbit_trichotomy_check(const QuandleTable& q,
                                            const Permutation& rho,
                                            const SymClassData& data) {
  const int n = q.size();
  TrichotomyAssignment out;
  out.kase.assign(n, 0);
  out.lambda.assign(n, -1);

  std::vector<char> is_lambda1(data.reps.size(), 0);
  for (int c : data.lambda1) is_lambda1[c] = 1;

  for (int x = 0; x < n; ++x) {
    int matches = 0;
    for (int c = 0; c < static_cast<int>(data.reps.size()); ++c) {
      const int rep = data.reps[c];
      if (data.orbit_of[x] == data.orbit_of[rep]) {
        ++matches;
        out.kase[x] = is_lambda1[c] ? 1 : 2;
        out.lambda[x] = c;
      }
      if (!is_lambda1[c] && data.orbit_of[x] == data.orbit_of[rho(rep)]) {
        ++matches;
        out.kase[x] = 3;
        out.lambda[x] = c;
      }
    }
    if (matches != 1) {
      out.ok = false;
      out.failed_element = x;
      return out;
    }
  }
  return out;
}

bool check_equivariance(const QuandleTable& q, const Permutation& rho) {
  const int n = q.size();
  for (int y = 0; y < n; ++y) {
    const Permutation s = inner_translation(q, y);
    const Permutation s_inv = s.inverse();
    for (int x = 0; x < n; ++x) {
      if (rho(s(x)) != s(rho(x))) return false;
      if (rho(s_inv(x)) != s_inv(rho(x))) return false;
    }
  }
  return true;
}

}  // namespace symq
