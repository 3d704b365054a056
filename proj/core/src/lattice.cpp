#include "hopfz/lattice.hpp"

#include <algorithm>

namespace hopfz {

namespace {

struct ZMat {
  int rows, cols;
  std::vector<Int> a;
  ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  explicit ZMat(const ExactMatrix& m) : ZMat(m.rows(), m.cols()) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) at(i, j) = m.int_at(i, j);
  }
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static ZMat identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  ExactMatrix to_matrix() const {
    ExactMatrix m(Fiber::integers(), rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (at(i, j) != 0) m.set(i, j, Rat(at(i, j)));
    return m;
  }
  void swap_cols(int j1, int j2) {
    if (j1 == j2) return;
    for (int i = 0; i < rows; ++i) std::swap(at(i, j1), at(i, j2));
  }
  void swap_rows(int i1, int i2) {
    if (i1 == i2) return;
    for (int j = 0; j < cols; ++j) std::swap(at(i1, j), at(i2, j));
  }
  void negate_col(int j) {
    for (int i = 0; i < rows; ++i) at(i, j) = -at(i, j);
  }
  void negate_row(int i) {
    for (int j = 0; j < cols; ++j) at(i, j) = -at(i, j);
  }
  // col_dst -= q * col_src
  void submul_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < rows; ++i) at(i, dst) -= q * at(i, src);
  }
  void submul_row(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < cols; ++j) at(dst, j) -= q * at(src, j);
  }
  void add_col(int dst, int src) {
    for (int i = 0; i < rows; ++i) at(i, dst) += at(i, src);
  }
};

Int floor_div(const Int& a, const Int& b) {
  // b > 0
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Column HNF in place; U (if given) receives the same column operations.
// Returns the rank. Pivot rule: smallest nonzero absolute value in the pivot
// row, leftmost on ties.
int hnf_in_place(ZMat& m, ZMat* u) {
  int r = 0, c = 0;
  while (r < m.rows && c < m.cols) {
    int best = -1;
    for (int j = c; j < m.cols; ++j)
      if (m.at(r, j) != 0 && (best < 0 || abs(m.at(r, j)) < abs(m.at(r, best)))) best = j;
    if (best < 0) {
      ++r;
      continue;
    }
    while (true) {
      m.swap_cols(c, best);
      if (u) u->swap_cols(c, best);
      if (m.at(r, c) < 0) {
        m.negate_col(c);
        if (u) u->negate_col(c);
      }
      bool clean = true;
      for (int j = c + 1; j < m.cols; ++j) {
        if (m.at(r, j) == 0) continue;
        Int q = m.at(r, j) / m.at(r, c);
        m.submul_col(j, c, q);
        if (u) u->submul_col(j, c, q);
        if (m.at(r, j) != 0) clean = false;
      }
      if (clean) break;
      best = c;
      for (int j = c; j < m.cols; ++j)
        if (m.at(r, j) != 0 && abs(m.at(r, j)) < abs(m.at(r, best))) best = j;
    }
    for (int j = 0; j < c; ++j) {
      Int q = floor_div(m.at(r, j), m.at(r, c));
      m.submul_col(j, c, q);
      if (u) u->submul_col(j, c, q);
    }
    ++r;
    ++c;
  }
  return c;
}

}  // namespace

ExactMatrix hnf(const ExactMatrix& m) {
  ZMat w(m);
  hnf_in_place(w, nullptr);
  return w.to_matrix();
}

HnfResult hnf_with_transform(const ExactMatrix& m) {
  ZMat w(m);
  ZMat u = ZMat::identity(m.cols());
  int rank = hnf_in_place(w, &u);
  return HnfResult{w.to_matrix(), u.to_matrix(), rank};
}

SnfResult snf(const ExactMatrix& m, bool want_left, bool want_right) {
  ZMat w(m);
  ZMat l(0, 0), r(0, 0);
  if (want_left) l = ZMat::identity(w.rows);
  if (want_right) r = ZMat::identity(w.cols);
  const int mn = std::min(w.rows, w.cols);

  auto eliminate_at = [&](int t) {
    // Repeated euclidean steps until row t and column t hold only the pivot.
    while (true) {
      bool restart = false;
      for (int i = t + 1; i < w.rows; ++i) {
        if (w.at(i, t) == 0) continue;
        Int q = w.at(i, t) / w.at(t, t);
        w.submul_row(i, t, q);
        if (want_left) l.submul_row(i, t, q);
        if (w.at(i, t) != 0) {
          w.swap_rows(t, i);
          if (want_left) l.swap_rows(t, i);
          restart = true;
          break;
        }
      }
      if (restart) continue;
      for (int j = t + 1; j < w.cols; ++j) {
        if (w.at(t, j) == 0) continue;
        Int q = w.at(t, j) / w.at(t, t);
        w.submul_col(j, t, q);
        if (want_right) r.submul_col(j, t, q);
        if (w.at(t, j) != 0) {
          w.swap_cols(t, j);
          if (want_right) r.swap_cols(t, j);
          restart = true;
          break;
        }
      }
      if (!restart) break;
    }
  };

  int rank = 0;
  for (int t = 0; t < mn; ++t) {
    // pivot rule: (|value|, column, row) lexicographically minimal
    int pi = -1, pj = -1;
    for (int j = t; j < w.cols; ++j)
      for (int i = t; i < w.rows; ++i) {
        if (w.at(i, j) == 0) continue;
        if (pi < 0 || abs(w.at(i, j)) < abs(w.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    if (want_left) l.swap_rows(t, pi);
    w.swap_cols(t, pj);
    if (want_right) r.swap_cols(t, pj);
    eliminate_at(t);
    ++rank;
  }

  // enforce the divisor chain
  bool again = true;
  while (again) {
    again = false;
    for (int t = 0; t + 1 < rank; ++t) {
      if (w.at(t + 1, t + 1) % w.at(t, t) == 0) continue;
      w.add_col(t, t + 1);
      if (want_right) r.add_col(t, t + 1);
      eliminate_at(t);
      again = true;
    }
  }

  for (int t = 0; t < rank; ++t) {
    if (w.at(t, t) < 0) {
      w.negate_row(t);
      if (want_left) l.negate_row(t);
    }
  }

  SnfResult out;
  out.rank = rank;
  out.divisors.reserve(mn);
  for (int t = 0; t < mn; ++t) out.divisors.push_back(w.at(t, t));
  if (want_left) out.left = l.to_matrix();
  if (want_right) out.right = r.to_matrix();
  return out;
}

Int integer_determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error("DimensionMismatch", "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  ZMat w(m);
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      w.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign * w.at(n - 1, n - 1);
}

bool is_unimodular(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Int d = integer_determinant(m);
  return d == 1 || d == -1;
}

ExactMatrix inverse_unimodular(const ExactMatrix& m) {
  if (!is_unimodular(m)) throw Error("NotUnimodular", "inverse_unimodular");
  auto inv = field_inverse(to_fiber(m, Fiber::rationals()));
  return to_fiber(*inv, Fiber::integers());
}

ExactMatrix integer_kernel(const ExactMatrix& m) {
  HnfResult h = hnf_with_transform(m);
  std::vector<int> zero_cols;
  for (int j = h.rank; j < m.cols(); ++j) zero_cols.push_back(j);
  return hnf(h.transform.select_columns(zero_cols));
}

std::optional<ExactMatrix> solve_integer(const ExactMatrix& m, const ExactMatrix& rhs) {
  if (m.rows() != rhs.rows()) throw Error("DimensionMismatch", "solve_integer");
  HnfResult h = hnf_with_transform(m);
  // pivot positions of the echelon columns
  std::vector<int> pivot_row(h.rank, -1);
  for (int k = 0; k < h.rank; ++k)
    for (int i = 0; i < h.h.rows(); ++i)
      if (h.h.at(i, k) != 0) {
        pivot_row[k] = i;
        break;
      }
  ExactMatrix y(Fiber::integers(), m.cols(), rhs.cols());
  for (int col = 0; col < rhs.cols(); ++col) {
    std::vector<Int> w(m.rows());
    for (int i = 0; i < m.rows(); ++i) w[i] = rhs.int_at(i, col);
    for (int k = 0; k < h.rank; ++k) {
      int r = pivot_row[k];
      Int p = h.h.int_at(r, k);
      if (w[r] % p != 0) return std::nullopt;
      Int q = w[r] / p;
      y.set(k, col, Rat(q));
      if (q != 0)
        for (int i = r; i < m.rows(); ++i) w[i] -= q * h.h.int_at(i, k);
    }
    for (const Int& x : w)
      if (x != 0) return std::nullopt;
  }
  return h.transform * y;
}

Lattice::Lattice(int ambient_rank, const ExactMatrix& generators) : ambient_(ambient_rank) {
  if (generators.rows() != ambient_rank)
    throw Error("DimensionMismatch", "lattice generators vs ambient rank");
  ExactMatrix h = hnf(generators);
  std::vector<int> nonzero;
  for (int j = 0; j < h.cols(); ++j) {
    bool z = true;
    for (int i = 0; i < h.rows(); ++i)
      if (h.at(i, j) != 0) {
        z = false;
        break;
      }
    if (!z) nonzero.push_back(j);
  }
  basis_ = h.select_columns(nonzero);
  pivot_rows_.resize(basis_.cols());
  for (int j = 0; j < basis_.cols(); ++j) {
    for (int i = 0; i < basis_.rows(); ++i)
      if (basis_.at(i, j) != 0) {
        pivot_rows_[j] = i;
        break;
      }
  }
}

Lattice Lattice::zero(int ambient_rank) {
  return Lattice(ambient_rank, ExactMatrix(Fiber::integers(), ambient_rank, 0));
}

Lattice Lattice::full(int ambient_rank) {
  return Lattice(ambient_rank, ExactMatrix::identity(Fiber::integers(), ambient_rank));
}

bool Lattice::contains(const ExactMatrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1)
    throw Error("DimensionMismatch", "membership vector vs ambient rank");
  std::vector<Int> w(ambient_);
  for (int i = 0; i < ambient_; ++i) w[i] = v.int_at(i, 0);
  for (int k = 0; k < basis_.cols(); ++k) {
    int r = pivot_rows_[k];
    Int p = basis_.int_at(r, k);
    if (w[r] % p != 0) return false;
    Int q = w[r] / p;
    if (q != 0)
      for (int i = r; i < ambient_; ++i) w[i] -= q * basis_.int_at(i, k);
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_rank() != ambient_) throw Error("DimensionMismatch", "lattice containment");
  for (int j = 0; j < other.basis().cols(); ++j)
    if (!contains(other.basis().column(j))) return false;
  return true;
}

bool membership(const ExactMatrix& v, const Lattice& l) { return l.contains(v); }

Lattice kernel_lattice(const ExactMatrix& m) {
  return Lattice(m.cols(), integer_kernel(m));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw Error("DimensionMismatch", "lattice sum");
  return Lattice(a.ambient_rank(), hstack(a.basis(), b.basis()));
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error("DimensionMismatch", "lattice intersection");
  if (a.rank() == 0 || b.rank() == 0) return Lattice::zero(a.ambient_rank());
  ExactMatrix combined = hstack(a.basis(), b.basis());
  ExactMatrix ker = integer_kernel(combined);
  std::vector<int> top;
  for (int i = 0; i < a.rank(); ++i) top.push_back(i);
  return Lattice(a.ambient_rank(), a.basis() * ker.select_rows(top));
}

Lattice saturate(const Lattice& l) {
  ExactMatrix orth = integer_kernel(l.basis().transpose());
  return Lattice(l.ambient_rank(), integer_kernel(orth.transpose()));
}

bool is_saturated(const Lattice& l) { return saturate(l) == l; }

QuotientPresentation quotient(int ambient_rank, const Lattice& sub) {
  if (sub.ambient_rank() != ambient_rank)
    throw Error("DimensionMismatch", "quotient sublattice vs ambient rank");
  QuotientPresentation out;
  out.ambient_rank = ambient_rank;
  out.sublattice = sub;
  if (sub.rank() == 0) {
    out.projection = ExactMatrix::identity(Fiber::integers(), ambient_rank);
    out.section = out.projection;
    return out;
  }
  SnfResult s = snf(sub.basis(), true, false);
  std::vector<int> free_idx;
  for (int i = 0; i < ambient_rank; ++i) {
    if (i >= static_cast<int>(s.divisors.size()) || s.divisors[i] == 0) {
      free_idx.push_back(i);
    } else if (s.divisors[i] > 1) {
      out.torsion.push_back(s.divisors[i]);
    }
  }
  ExactMatrix linv = inverse_unimodular(s.left);
  out.projection = s.left.select_rows(free_idx);
  out.section = linv.select_columns(free_idx);
  return out;
}

}  // namespace hopfz
