#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pfrigid/bigint.hpp"

// Integral binary quadratic forms a x^2 + b xy + c y^2. Used by the GL(2,Z)
// conjugacy decision and the class census; all comparisons with sqrt(D)
// are done through isqrt on exact integers.
namespace pfrigid::quadform {

// Row-major 2x2 integer matrix acting on (x, y) column vectors.
using Transform = std::array<Int, 4>;

Transform transform_identity();
Transform compose(const Transform& x, const Transform& y);

struct Form {
  Int a, b, c;

  Int discriminant() const { return b * b - 4 * a * c; }
  Int evaluate(const Int& x, const Int& y) const { return a * x * x + b * x * y + c * y * y; }
  Form negated() const { return Form{-a, -b, -c}; }

  friend bool operator==(const Form&, const Form&) = default;
};

// (f . m)(x, y) = f(m (x, y)^T)
Form act(const Form& f, const Transform& m);

struct Reduced {
  Form form;
  Transform transform;  // act(original, transform) == form, det(transform) == 1
};

// Indefinite forms with non-square discriminant.
bool is_reduced_indefinite(const Form& f, const Int& sqrt_floor);
Reduced rho_step(const Reduced& r, const Int& sqrt_floor);
// The full cycle of reduced forms properly equivalent to f.
std::vector<Reduced> reduction_cycle(const Form& f);

// Definite forms: reduces f (or -f when negative definite) to |b| <= a <= c.
Reduced reduce_definite(const Form& f);

/// All reduced forms of discriminant D (not necessarily primitive). For
/// D > 0 non-square these satisfy |sqrt(D) - 2|a|| < b < sqrt(D); for D < 0
/// they are the positive and negative definite reduced forms.
std::vector<Form> reduced_forms(const Int& discriminant);

struct UnitRepresentation {
  Int x, y;
  int value;  // f(x, y), either +1 or -1
};

/// Finds (x, y) with f(x, y) = +-1 when one exists.
std::optional<UnitRepresentation> represent_unit(const Form& f);

}  // namespace pfrigid::quadform
