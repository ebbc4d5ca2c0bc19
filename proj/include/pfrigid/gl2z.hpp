#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfrigid/bigint.hpp"

namespace pfrigid::gl2z {

/// Element of GL(2,Z). Construction rejects determinants other than +-1.
class Mat2Z {
 public:
  Mat2Z(Int a11, Int a12, Int a21, Int a22);

  static Mat2Z identity();

  const Int& a11() const noexcept { return e_[0]; }
  const Int& a12() const noexcept { return e_[1]; }
  const Int& a21() const noexcept { return e_[2]; }
  const Int& a22() const noexcept { return e_[3]; }
  const std::array<Int, 4>& entries() const noexcept { return e_; }

  Int trace() const { return e_[0] + e_[3]; }
  int det() const noexcept { return det_; }
  bool is_scalar() const { return e_[1] == 0 && e_[2] == 0 && e_[0] == e_[3]; }

  Mat2Z inverse() const;

  friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
  friend bool operator==(const Mat2Z& x, const Mat2Z& y) { return x.e_ == y.e_; }

 private:
  std::array<Int, 4> e_;
  int det_ = 1;
};

/// Parses "a11,a12;a21,a22" (spaces allowed around numbers).
Mat2Z parse_matrix(std::string_view text);
std::string format_matrix(const Mat2Z& m);

enum class Kind { Elliptic, Parabolic, Hyperbolic };

struct MatClass {
  Kind kind = Kind::Elliptic;
  int order = 0;  // finite order for Elliptic, 0 otherwise

  std::string to_string() const;  // "elliptic(6)", "parabolic", "hyperbolic"
  friend bool operator==(const MatClass&, const MatClass&) = default;
};

std::string kind_name(Kind k);

MatClass classify(const Mat2Z& phi);

Mat2Z power(const Mat2Z& phi, long r);

struct ConjVerdict {
  bool conjugate = false;
  std::optional<Mat2Z> witness;  // g with g * phi * g^-1 == psi
};

/// Decides conjugacy in GL(2,Z) exactly.
ConjVerdict is_conjugate_z(const Mat2Z& phi, const Mat2Z& psi);

struct ModConjVerdict {
  bool conjugate = false;
  Int modulus;
  // Entries of g reduced into [0, m) with g * phi == psi * g (mod m) and
  // det(g) a unit mod m.
  std::optional<std::array<Int, 4>> witness;
};

ModConjVerdict is_conjugate_mod(const Mat2Z& phi, const Mat2Z& psi, const Int& m);

struct LocalConjReport {
  long modulus_bound = 0;
  std::vector<long> failures;
  bool all_pass() const noexcept { return failures.empty(); }
};

LocalConjReport local_conjugacy(const Mat2Z& phi, const Mat2Z& psi, long bound);

/// Complete list of GL(2,Z)-conjugacy class representatives with the given
/// trace and determinant. Each representative is the member of its class of
/// least height (max |entry|), ties broken by fewest negative entries, then
/// lexicographically greatest (a11, a12, a21, a22). Ordered by that key.
/// Throws InfiniteFamily for (tr, det) = (+-2, 1).
std::vector<Mat2Z> enumerate_classes(const Int& trace, int det);

enum class Nielsen { R, L, S, E };

using NielsenWord = std::vector<Nielsen>;

/// Word in R=(1 1;0 1), L=(1 0;1 1), S=(0 1;1 0), E=(1 0;0 -1) whose
/// product, read left to right, equals phi.
NielsenWord nielsen_decompose(const Mat2Z& phi);
Mat2Z nielsen_product(const NielsenWord& word);
Mat2Z nielsen_matrix(Nielsen g);
std::string format_word(const NielsenWord& word);

}  // namespace pfrigid::gl2z
