#include "symq/snf.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace symq {

bool IntMat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

IntMat IntMat::multiply(const IntMat& other) const {
  if (cols != other.rows)
    throw std::invalid_argument("matrix dimension mismatch");
  IntMat out(rows, other.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const mpz_class& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < other.cols; ++j) out.at(i, j) += x * other.at(k, j);
    }
  return out;
}

std::vector<mpz_class> IntMat::apply(const std::vector<mpz_class>& v) const {
  if (static_cast<int>(v.size()) != cols)
    throw std::invalid_argument("vector dimension mismatch");
  std::vector<mpz_class> out(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

/// In-place diagonalization by unimodular row/column operations.
/// Column operations are mirrored into V (as column ops) and into W = V⁻¹
/// (as the inverse row ops), so A_original · V = U⁻¹ · D throughout.
class SmithWorker {
 public:
  SmithWorker(IntMat& m, IntMat* v, IntMat* w) : m_(m), v_(v), w_(w) {}

  void run() {
    const int limit = std::min(m_.rows, m_.cols);
    int t = 0;
    while (t < limit) {
      if (!move_pivot(t)) break;
      clear_cross(t);
      if (!ensure_divides_rest(t)) continue;  // pivot changed, redo this t
      if (m_.at(t, t) < 0) negate_row(t);
      ++t;
    }
    rank_ = t;
  }

  int rank() const { return rank_; }

 private:
  // Smallest-|value| nonzero entry of the trailing submatrix moves to
  // (t,t). Returns false when the submatrix is zero.
  bool move_pivot(int t) {
    int bi = -1, bj = -1;
    for (int i = t; i < m_.rows; ++i)
      for (int j = t; j < m_.cols; ++j) {
        const mpz_class& x = m_.at(i, j);
        if (x == 0) continue;
        if (bi < 0 || cmpabs(x, m_.at(bi, bj)) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    if (bi != t) swap_rows(t, bi);
    if (bj != t) swap_cols(t, bj);
    return true;
  }

  // Zeroes row t (right of the pivot) and column t (below the pivot).
  void clear_cross(int t) {
    for (;;) {
      bool again = false;
      for (int i = t + 1; i < m_.rows; ++i) {
        if (m_.at(i, t) == 0) continue;
        const mpz_class q = m_.at(i, t) / m_.at(t, t);  // truncated
        add_row_multiple(i, t, -q);
        if (m_.at(i, t) != 0) {  // remainder became the smaller pivot
          swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < m_.cols; ++j) {
        if (m_.at(t, j) == 0) continue;
        const mpz_class q = m_.at(t, j) / m_.at(t, t);
        add_col_multiple(j, t, -q);
        if (m_.at(t, j) != 0) {
          swap_cols(t, j);
          again = true;
        }
      }
      // A pass without swaps leaves column t and row t clear: row ops do
      // not touch row t, and column ops do not touch column t.
      if (!again) return;
    }
  }

  // The divisibility chain: if the pivot misses an entry, fold that
  // column into column t and re-run elimination for the same t.
  bool ensure_divides_rest(int t) {
    const mpz_class& d = m_.at(t, t);
    for (int i = t + 1; i < m_.rows; ++i)
      for (int j = t + 1; j < m_.cols; ++j)
        if (m_.at(i, j) % d != 0) {
          add_col_multiple(t, j, 1);
          clear_cross(t);
          return false;
        }
    return true;
  }

  static int cmpabs(const mpz_class& a, const mpz_class& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  }

  void swap_rows(int i, int j) {
    for (int c = 0; c < m_.cols; ++c) std::swap(m_.at(i, c), m_.at(j, c));
  }

  void negate_row(int i) {
    for (int c = 0; c < m_.cols; ++c) m_.at(i, c) = -m_.at(i, c);
  }

  // row_i += q * row_j
  void add_row_multiple(int i, int j, const mpz_class& q) {
    for (int c = 0; c < m_.cols; ++c) m_.at(i, c) += q * m_.at(j, c);
  }

  void swap_cols(int i, int j) {
    for (int r = 0; r < m_.rows; ++r) std::swap(m_.at(r, i), m_.at(r, j));
    if (v_)
      for (int r = 0; r < v_->rows; ++r) std::swap(v_->at(r, i), v_->at(r, j));
    if (w_)
      for (int c = 0; c < w_->cols; ++c) std::swap(w_->at(i, c), w_->at(j, c));
  }

  // col_i += q * col_j, V gets the same op, W the inverse row op.
  void add_col_multiple(int i, int j, const mpz_class& q) {
    for (int r = 0; r < m_.rows; ++r) m_.at(r, i) += q * m_.at(r, j);
    if (v_)
      for (int r = 0; r < v_->rows; ++r) v_->at(r, i) += q * v_->at(r, j);
    if (w_)
      for (int c = 0; c < w_->cols; ++c) w_->at(j, c) -= q * w_->at(i, c);
  }

  IntMat& m_;
  IntMat* v_;
  IntMat* w_;
  int rank_ = 0;
};

}  // namespace

SmithResult smith_normal_form(IntMat m, bool want_v, bool want_v_inv) {
  SmithResult out;
  IntMat v, w;
  if (want_v) v = IntMat::identity(m.cols);
  if (want_v_inv) w = IntMat::identity(m.cols);
  SmithWorker worker(m, want_v ? &v : nullptr, want_v_inv ? &w : nullptr);
  worker.run();
  out.rank = worker.rank();
  out.diagonal.reserve(out.rank);
  for (int t = 0; t < out.rank; ++t) out.diagonal.push_back(m.at(t, t));
  out.v = std::move(v);
  out.v_inv = std::move(w);
  return out;
}

std::string to_string(const AbelianInvariants& inv) {
  std::ostringstream os;
  bool first = true;
  for (long long d : inv.torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  for (int i = 0; i < inv.free_rank; ++i) {
    if (!first) os << " + ";
    os << "Z";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

IntMat relation_matrix(const Presentation& p) {
  const int g = static_cast<int>(p.generators.size());
  const int r = static_cast<int>(p.relators.size());
  IntMat m(r, g);
  for (int i = 0; i < r; ++i)
    for (const Letter& l : p.relators[i]) m.at(i, l.gen) += l.sign;
  return m;
}

namespace {

long long to_ll_checked(const mpz_class& x) {
  if (!x.fits_slong_p())
    throw std::overflow_error("abelian invariant exceeds long long range");
  return x.get_si();
}

AbelianInvariants invariants_from(const SmithResult& s, int cols) {
  AbelianInvariants inv;
  for (const auto& d : s.diagonal)
    if (d > 1) inv.torsion.push_back(to_ll_checked(d));
  inv.free_rank = cols - s.rank;
  return inv;
}

}  // namespace

AbelianInvariants cokernel_invariants(const IntMat& m) {
  return invariants_from(smith_normal_form(m), m.cols);
}

AbelianInvariants abelian_invariants(const Presentation& p) {
  return cokernel_invariants(relation_matrix(p));
}

AbelianizedClasses abelianization_with_classes(const Presentation& p) {
  const IntMat m = relation_matrix(p);
  const SmithResult s = smith_normal_form(m, /*want_v=*/true);
  AbelianizedClasses out;
  out.invariants = invariants_from(s, m.cols);

  const int g = m.cols;
  // Class of generator j = row j of V, with torsion coordinates reduced;
  // coordinates with dᵢ = 1 are identically zero and dropped.
  for (int j = 0; j < g; ++j) {
    std::vector<long long> coords;
    for (int i = 0; i < s.rank; ++i) {
      const mpz_class& d = s.diagonal[i];
      if (d == 1) continue;
      mpz_class c = s.v.at(j, i) % d;
      if (c < 0) c += d;
      coords.push_back(to_ll_checked(c));
    }
    for (int i = s.rank; i < g; ++i)
      coords.push_back(to_ll_checked(s.v.at(j, i)));
    out.classes.push_back(std::move(coords));
  }
  return out;
}

}  // namespace symq
