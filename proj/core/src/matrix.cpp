#include "hopfz/matrix.hpp"

#include <sstream>

namespace hopfz {

ExactMatrix::ExactMatrix(Fiber fiber, int rows, int cols)
    : fiber_(std::move(fiber)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("DimensionMismatch", "negative matrix dimension");
  a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

ExactMatrix ExactMatrix::identity(const Fiber& fiber, int n) {
  ExactMatrix m(fiber, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const Fiber& fiber,
                                   const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rat>> conv;
  conv.reserve(rows.size());
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return from_rat_rows(fiber, conv);
}

ExactMatrix ExactMatrix::from_rat_rows(const Fiber& fiber, const std::vector<std::vector<Rat>>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  ExactMatrix m(fiber, nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc)
      throw Error("DimensionMismatch", "ragged rows in matrix literal");
    for (int j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::column_vector(const Fiber& fiber, const std::vector<long long>& v) {
  std::vector<Rat> conv(v.begin(), v.end());
  return rat_column_vector(fiber, conv);
}

ExactMatrix ExactMatrix::rat_column_vector(const Fiber& fiber, const std::vector<Rat>& v) {
  ExactMatrix m(fiber, static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m.set(static_cast<int>(i), 0, v[i]);
  return m;
}

void ExactMatrix::add_at(int i, int j, const Rat& dv) {
  Rat& e = a_[static_cast<size_t>(i) * cols_ + j];
  e = fiber_.add(e, dv);
}

Int ExactMatrix::int_at(int i, int j) const {
  const Rat& v = at(i, j);
  if (denominator(v) != 1) throw Error("NotAnInteger", "entry " + v.str());
  return numerator(v);
}

bool ExactMatrix::is_zero() const {
  for (const Rat& v : a_)
    if (v != 0) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(fiber_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

ExactMatrix ExactMatrix::column(int j) const {
  ExactMatrix c(fiber_, rows_, 1);
  for (int i = 0; i < rows_; ++i) c.set(i, 0, at(i, j));
  return c;
}

ExactMatrix ExactMatrix::row(int i) const {
  ExactMatrix r(fiber_, 1, cols_);
  for (int j = 0; j < cols_; ++j) r.set(0, j, at(i, j));
  return r;
}

void ExactMatrix::set_column(int j, const ExactMatrix& col) {
  if (col.rows() != rows_ || col.cols() != 1)
    throw Error("DimensionMismatch", "set_column shape");
  for (int i = 0; i < rows_; ++i) set(i, j, col.at(i, 0));
}

ExactMatrix ExactMatrix::select_columns(const std::vector<int>& js) const {
  ExactMatrix m(fiber_, rows_, static_cast<int>(js.size()));
  for (size_t k = 0; k < js.size(); ++k)
    for (int i = 0; i < rows_; ++i) m.set(i, static_cast<int>(k), at(i, js[k]));
  return m;
}

ExactMatrix ExactMatrix::select_rows(const std::vector<int>& is) const {
  ExactMatrix m(fiber_, static_cast<int>(is.size()), cols_);
  for (size_t k = 0; k < is.size(); ++k)
    for (int j = 0; j < cols_; ++j) m.set(static_cast<int>(k), j, at(is[k], j));
  return m;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
  }
  os << "]";
  return os.str();
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.fiber() != b.fiber()) throw Error("FiberMismatch", "matrix product");
  if (a.cols() != b.rows()) throw Error("DimensionMismatch", "matrix product");
  const Fiber& f = a.fiber();
  ExactMatrix c(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rat& bkj = b.at(k, j);
        if (bkj == 0) continue;
        c.add_at(i, j, f.mul(aik, bkj));
      }
    }
  }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.fiber() != b.fiber()) throw Error("FiberMismatch", "matrix sum");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("DimensionMismatch", "matrix sum");
  ExactMatrix c(a.fiber(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.fiber().add(a.at(i, j), b.at(i, j)));
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + (-b); }

ExactMatrix operator-(const ExactMatrix& a) {
  ExactMatrix c(a.fiber(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.fiber().neg(a.at(i, j)));
  return c;
}

ExactMatrix scale(const Rat& c, const ExactMatrix& a) {
  ExactMatrix m(a.fiber(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, a.fiber().mul(c, a.at(i, j)));
  return m;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.fiber() != b.fiber()) throw Error("FiberMismatch", "kronecker product");
  const Fiber& f = a.fiber();
  ExactMatrix c(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rat& aij = a.at(i, j);
      if (aij == 0) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q) {
          const Rat& bpq = b.at(p, q);
          if (bpq == 0) continue;
          c.set(i * b.rows() + p, j * b.cols() + q, f.mul(aij, bpq));
        }
    }
  return c;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.fiber() != b.fiber() || a.rows() != b.rows())
    throw Error("DimensionMismatch", "hstack");
  ExactMatrix c(a.fiber(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b.at(i, j));
  }
  return c;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.fiber() != b.fiber() || a.cols() != b.cols())
    throw Error("DimensionMismatch", "vstack");
  ExactMatrix c(a.fiber(), a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) c.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i) c.set(a.rows() + i, j, b.at(i, j));
  }
  return c;
}

ExactMatrix to_fiber(const ExactMatrix& m, const Fiber& k) {
  ExactMatrix out(k, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
  return out;
}

void for_each_nonzero_in_column(const ExactMatrix& m, int j,
                                const std::function<void(int, const Rat&)>& fn) {
  for (int i = 0; i < m.rows(); ++i) {
    const Rat& v = m.at(i, j);
    if (v != 0) fn(i, v);
  }
}

namespace {

// Row echelon workspace for field elimination. Returns pivot columns; m is
// reduced in place to RREF.
std::vector<int> rref_in_place(ExactMatrix& m) {
  if (!m.fiber().is_field()) throw Error("FiberMismatch", "field elimination over Z");
  const Fiber& f = m.fiber();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) {
        Rat t = m.at(r, j);
        m.set(r, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    Rat inv = f.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.set(r, j, f.mul(inv, m.at(r, j)));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Rat v = m.at(i, c);
      if (v == 0) continue;
      for (int j = c; j < m.cols(); ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(v, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int field_rank(const ExactMatrix& m) {
  ExactMatrix w = m;
  return static_cast<int>(rref_in_place(w).size());
}

ExactMatrix field_kernel(const ExactMatrix& m) {
  ExactMatrix w = m;
  std::vector<int> pivots = rref_in_place(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const Fiber& f = m.fiber();
  ExactMatrix basis(f, m.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.set(fc, static_cast<int>(k), 1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.set(pivots[r], static_cast<int>(k), f.neg(w.at(static_cast<int>(r), fc)));
  }
  return basis;
}

std::optional<ExactMatrix> field_solve(const ExactMatrix& m, const ExactMatrix& rhs) {
  if (m.rows() != rhs.rows()) throw Error("DimensionMismatch", "field_solve");
  ExactMatrix w = hstack(m, rhs);
  std::vector<int> pivots = rref_in_place(w);
  // any pivot in the rhs block means inconsistency
  for (int c : pivots)
    if (c >= m.cols()) return std::nullopt;
  ExactMatrix x(m.fiber(), m.cols(), rhs.cols());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < rhs.cols(); ++j)
      x.set(pivots[r], j, w.at(static_cast<int>(r), m.cols() + j));
  return x;
}

std::optional<ExactMatrix> field_inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error("DimensionMismatch", "field_inverse");
  if (field_rank(m) != m.rows()) return std::nullopt;
  return field_solve(m, ExactMatrix::identity(m.fiber(), m.rows()));
}

Rat field_determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error("DimensionMismatch", "determinant");
  const Fiber& f = m.fiber();
  ExactMatrix w = m;
  Rat det(1);
  for (int c = 0; c < w.cols(); ++c) {
    int pr = -1;
    for (int i = c; i < w.rows(); ++i)
      if (w.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) return Rat(0);
    if (pr != c) {
      for (int j = 0; j < w.cols(); ++j) {
        Rat t = w.at(c, j);
        w.set(c, j, w.at(pr, j));
        w.set(pr, j, t);
      }
      det = f.neg(det);
    }
    det = f.mul(det, w.at(c, c));
    Rat inv = f.inv(w.at(c, c));
    for (int i = c + 1; i < w.rows(); ++i) {
      Rat v = w.at(i, c);
      if (v == 0) continue;
      Rat factor = f.mul(v, inv);
      for (int j = c; j < w.cols(); ++j)
        w.set(i, j, f.sub(w.at(i, j), f.mul(factor, w.at(c, j))));
    }
  }
  return det;
}

ExactMatrix field_column_space(const ExactMatrix& m) {
  ExactMatrix w = m.transpose();
  std::vector<int> pivots = rref_in_place(w);
  ExactMatrix basis(m.fiber(), m.rows(), static_cast<int>(pivots.size()));
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int i = 0; i < m.rows(); ++i)
      basis.set(i, static_cast<int>(r), w.at(static_cast<int>(r), i));
  return basis;
}

}  // namespace hopfz
