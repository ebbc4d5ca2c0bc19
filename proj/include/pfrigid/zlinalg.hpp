#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "pfrigid/bigint.hpp"

namespace pfrigid::zlinalg {

// Dense row-major integer matrix with exact entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<const Int> entries() const noexcept { return entries_; }

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntMatrix transposed() const;
  std::vector<Int> column(std::size_t j) const;

  void swap_rows(std::size_t i, std::size_t k);
  void swap_cols(std::size_t j, std::size_t k);
  // row_i += factor * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const Int& factor);
  // col_j += factor * col_k
  void add_col_multiple(std::size_t j, std::size_t k, const Int& factor);
  void negate_row(std::size_t i);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& a);

/// Smith normal form with witnesses: u * a * v == d, u and v unimodular,
/// d diagonal with non-negative entries d_1 | d_2 | ... and zeros last.
struct SnfResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  std::vector<Int> diagonal() const;
  std::size_t rank() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group Z^b1 + Z/t_1 + ... + Z/t_k with
/// t_1 | t_2 | ... | t_k and every t_i > 1.
struct HomologySummary {
  std::size_t b1 = 0;
  std::vector<Int> torsion;

  Int torsion_order() const;
  bool is_infinite_cyclic() const { return b1 == 1 && torsion.empty(); }
  // "Z^2 + Z/6", "Z", "0"
  std::string to_string() const;

  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// Invariants of Z^rows / image(a).
HomologySummary cokernel_invariants(const IntMatrix& a);

// Z-basis of {x in Z^cols : a x = 0}, read off the SNF column transform.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

}  // namespace pfrigid::zlinalg
