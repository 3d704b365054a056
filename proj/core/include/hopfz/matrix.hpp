#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hopfz/fiber.hpp"

namespace hopfz {

/// Dense matrix with exact scalars in a base fiber. Entries are kept in the
/// fiber's canonical form; over F_p this means representatives in [0, p).
class ExactMatrix {
 public:
  ExactMatrix() : fiber_(Fiber::integers()) {}
  ExactMatrix(Fiber fiber, int rows, int cols);

  static ExactMatrix identity(const Fiber& fiber, int n);
  static ExactMatrix from_rows(const Fiber& fiber,
                               const std::vector<std::vector<long long>>& rows);
  static ExactMatrix from_rat_rows(const Fiber& fiber,
                                   const std::vector<std::vector<Rat>>& rows);
  static ExactMatrix column_vector(const Fiber& fiber, const std::vector<long long>& v);
  static ExactMatrix rat_column_vector(const Fiber& fiber, const std::vector<Rat>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Fiber& fiber() const { return fiber_; }

  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, const Rat& v) { a_[static_cast<size_t>(i) * cols_ + j] = fiber_.canon(v); }
  void add_at(int i, int j, const Rat& dv);
  /// Entry as an integer; requires denominator 1.
  Int int_at(int i, int j) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const ExactMatrix& o) const = default;

  ExactMatrix transpose() const;
  ExactMatrix column(int j) const;
  ExactMatrix row(int i) const;
  void set_column(int j, const ExactMatrix& col);
  /// Columns js of this matrix, in the order given.
  ExactMatrix select_columns(const std::vector<int>& js) const;
  ExactMatrix select_rows(const std::vector<int>& is) const;

  std::string str() const;

 private:
  Fiber fiber_;
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator-(const ExactMatrix& a);
ExactMatrix scale(const Rat& c, const ExactMatrix& a);

/// Kronecker product; index (i, j) of factors maps to i*b.rows()+j etc.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

/// Entrywise base change of an integer matrix into another fiber.
ExactMatrix to_fiber(const ExactMatrix& m, const Fiber& k);

void for_each_nonzero_in_column(const ExactMatrix& m, int j,
                                const std::function<void(int, const Rat&)>& fn);

// Exact Gaussian elimination over a field fiber (Q or F_p).
int field_rank(const ExactMatrix& m);
/// Basis of the null space as columns; canonical (free variables in input
/// order, each basis vector has a 1 at its free coordinate). Empty kernel
/// gives a cols x 0 matrix.
ExactMatrix field_kernel(const ExactMatrix& m);
/// One solution of m x = rhs (columnwise), if any.
std::optional<ExactMatrix> field_solve(const ExactMatrix& m, const ExactMatrix& rhs);
std::optional<ExactMatrix> field_inverse(const ExactMatrix& m);
Rat field_determinant(const ExactMatrix& m);
/// Canonical basis of the column space: reduced column echelon form with zero
/// columns dropped. Two matrices span the same subspace iff these agree.
ExactMatrix field_column_space(const ExactMatrix& m);

}  // namespace hopfz
