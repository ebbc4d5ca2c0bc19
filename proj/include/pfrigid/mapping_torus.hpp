#pragma once

#include <string>
#include <vector>

#include "pfrigid/gl2z.hpp"
#include "pfrigid/presentation.hpp"
#include "pfrigid/zlinalg.hpp"

// Invariants of the free-by-cyclic group F_2 x|_phi Z for phi in GL(2,Z).
namespace pfrigid::torus {

using gl2z::Mat2Z;
using zlinalg::HomologySummary;

constexpr long kDefaultProfileDepth = 12;

/// H_1 = Z (the stable letter) + coker(phi - I).
HomologySummary h1(const Mat2Z& phi);

/// Entry r-1 is b1 of the mapping torus of phi^r, r = 1..depth.
std::vector<std::size_t> b1_profile(const Mat2Z& phi, long depth);

struct Fingerprint {
  int det = 1;
  Int trace;
  HomologySummary h1;
  gl2z::MatClass matrix_class;
  std::vector<std::size_t> b1_profile;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// depth must be >= 12 so every elliptic order and the trace -2 parabolics
// are exposed.
Fingerprint fingerprint(const Mat2Z& phi, long depth = kDefaultProfileDepth);

struct Compatibility {
  bool distinguished = false;
  std::string reason;  // empty when compatible
};

/// Checks necessary conditions for isomorphic profinite completions.
/// Compatible only means no implemented invariant separates the pair.
Compatibility completion_compatible(const Mat2Z& phi, const Mat2Z& psi);

enum class B1OneIdentity { FigureEight, Trefoil, Gieseking, NotB1One };

std::string identity_name(B1OneIdentity id);

B1OneIdentity identify_b1_one(const Mat2Z& phi);

/// Images of a and b under the automorphism of F<a,b> realizing phi, with
/// the convention that phi_*(a) abelianizes to a^a11 b^a21.
struct FreeAutomorphism {
  fp::Word image_a;
  fp::Word image_b;
};

FreeAutomorphism lift_to_automorphism(const Mat2Z& phi);

/// <a, b, t | t a T = phi_*(a), t b T = phi_*(b)>
fp::Presentation presentation_of(const Mat2Z& phi);

}  // namespace pfrigid::torus
