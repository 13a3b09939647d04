#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "fixsub/integer.hpp"

namespace fixsub {

// Dense integer matrix, row-major, arbitrary precision entries.
// 0-row and 0-column shapes are legal.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& d);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);

// Block diagonal diag(a, b).
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
// [a; b] stacked vertically (same column count).
IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b);

// M = U * D * V with U, V unimodular. The inverses are carried along so
// callers never need a separate inversion.
struct SmithDecomposition {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;

  IntVector diagonal() const;  // min(rows, cols) entries, d1 | d2 | ...
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

std::vector<IntVector> kernel_basis(const IntMatrix& m);
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& c);
// Reuses a decomposition of m across many right-hand sides.
std::optional<IntVector> solve_integer(const SmithDecomposition& snf, const IntVector& c);
Integer determinant(const IntMatrix& m);
// Inverse over the integers; absent unless det = +-1.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

// Z^k / im(M). Coordinates: torsion first (reduced into 0..d-1), then free.
struct CokernelStructure {
  std::size_t ambient_dim = 0;
  std::size_t free_rank = 0;
  IntVector torsion;       // invariant factors > 1, divisibility chain
  IntMatrix projection;    // (torsion.size() + free_rank) x ambient_dim
  IntVector moduli;        // per coordinate; 0 for free coordinates

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::size_t coordinate_count() const { return moduli.size(); }
};

CokernelStructure cokernel(const IntMatrix& m);
IntVector project_to_cokernel(const CokernelStructure& cs, const IntVector& c);

}  // namespace fixsub
