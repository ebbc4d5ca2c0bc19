#include "pfrigid/zlinalg.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pfrigid::zlinalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("IntMatrix: ragged initializer");
    }
    for (long x : row) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
  if (i == k) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
  if (j == k) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += factor * (*this)(k, j);
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += factor * (*this)(i, k);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << (*this)(i, j).get_str();
    }
  }
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign_flip = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign_flip * m(n - 1, n - 1);
}

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> out;
  const std::size_t k = std::min(d.rows(), d.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const Int& x : diagonal())
    if (x != 0) ++r;
  return r;
}

namespace {

// Smallest nonzero |entry| in the trailing block starting at (t, t),
// scanning rows first; returns false when the block is zero.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& x = a(i, j);
      if (x == 0) continue;
      if (!found || cmp_abs(x, best) < 0) {
        best = x;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  if (input.rows() == 0 || input.cols() == 0) {
    throw std::invalid_argument("smith_normal_form: empty matrix");
  }
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t limit = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(a, t, pi, pj)) break;
    for (;;) {
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clear = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const Int q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const Int q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) clear = false;
      }
      if (clear) {
        // Pivot must divide the whole trailing block; otherwise pull an
        // offending row into row t and keep reducing.
        bool divides = true;
        for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
          for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
              a.add_row_multiple(t, i, 1);
              u.add_row_multiple(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      find_pivot(a, t, pi, pj);
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SnfResult{std::move(a), std::move(u), std::move(v)};
}

HomologySummary cokernel_invariants(const IntMatrix& a) {
  const SnfResult snf = smith_normal_form(a);
  HomologySummary h;
  h.b1 = a.rows() - snf.rank();
  for (const Int& x : snf.diagonal())
    if (x > 1) h.torsion.push_back(x);
  return h;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
  const SnfResult snf = smith_normal_form(a);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = snf.rank(); j < a.cols(); ++j) basis.push_back(snf.v.column(j));
  return basis;
}

Int HomologySummary::torsion_order() const {
  Int order = 1;
  for (const Int& t : torsion) order *= t;
  return order;
}

std::string HomologySummary::to_string() const {
  std::string out;
  if (b1 == 1) out = "Z";
  else if (b1 > 1) out = "Z^" + std::to_string(b1);
  for (const Int& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace pfrigid::zlinalg
