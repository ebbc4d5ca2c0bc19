#include "pfrigid/mapping_torus.hpp"

#include <stdexcept>

#include "pfrigid/errors.hpp"

namespace pfrigid::torus {

using gl2z::Kind;
using gl2z::Nielsen;

HomologySummary h1(const Mat2Z& phi) {
  zlinalg::IntMatrix m(2, 2);
  m(0, 0) = phi.a11() - 1;
  m(0, 1) = phi.a12();
  m(1, 0) = phi.a21();
  m(1, 1) = phi.a22() - 1;
  HomologySummary h = zlinalg::cokernel_invariants(m);
  h.b1 += 1;
  return h;
}

std::vector<std::size_t> b1_profile(const Mat2Z& phi, long depth) {
  if (depth < 1) throw DomainError("profile depth must be at least 1");
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(depth));
  Mat2Z p = phi;
  for (long r = 1; r <= depth; ++r) {
    out.push_back(h1(p).b1);
    p = p * phi;
  }
  return out;
}

Fingerprint fingerprint(const Mat2Z& phi, long depth) {
  if (depth < kDefaultProfileDepth) {
    throw DomainError("fingerprint depth must be at least " + std::to_string(kDefaultProfileDepth));
  }
  return Fingerprint{phi.det(), phi.trace(), h1(phi), gl2z::classify(phi), b1_profile(phi, depth)};
}

Compatibility completion_compatible(const Mat2Z& phi, const Mat2Z& psi) {
  const Fingerprint f = fingerprint(phi);
  const Fingerprint g = fingerprint(psi);
  if (!(f.h1 == g.h1)) {
    return {true, "first homology differs: " + f.h1.to_string() + " vs " + g.h1.to_string()};
  }
  const bool b1_one = f.h1.b1 == 1;
  if (b1_one && f.det != g.det) {
    return {true, "determinant differs (mod-3 action on the fibre): " + std::to_string(f.det) +
                      " vs " + std::to_string(g.det)};
  }
  if (f.matrix_class.kind != g.matrix_class.kind) {
    return {true, "monodromy type differs: " + gl2z::kind_name(f.matrix_class.kind) + " vs " +
                      gl2z::kind_name(g.matrix_class.kind)};
  }
  if (f.matrix_class.kind == Kind::Hyperbolic && (f.det != g.det || f.trace != g.trace)) {
    return {true, "hyperbolic eigenvalues differ: (tr, det) = (" + f.trace.get_str() + ", " +
                      std::to_string(f.det) + ") vs (" + g.trace.get_str() + ", " +
                      std::to_string(g.det) + ")"};
  }
  if (b1_one && f.b1_profile != g.b1_profile) {
    return {true, "b1 of cyclic covers differs"};
  }
  return {};
}

std::string identity_name(B1OneIdentity id) {
  switch (id) {
    case B1OneIdentity::FigureEight: return "figure-eight";
    case B1OneIdentity::Trefoil: return "trefoil";
    case B1OneIdentity::Gieseking: return "gieseking";
    case B1OneIdentity::NotB1One: return "not-b1-one";
  }
  return "unknown";
}

B1OneIdentity identify_b1_one(const Mat2Z& phi) {
  if (!h1(phi).is_infinite_cyclic()) return B1OneIdentity::NotB1One;
  const Int tr = phi.trace();
  if (tr == 3 && phi.det() == 1) return B1OneIdentity::FigureEight;
  if (tr == 1 && phi.det() == 1) return B1OneIdentity::Trefoil;
  // (-1,-1) is the inverse of the (1,-1) class; Gamma_phi and Gamma_{phi^-1} are isomorphic via t -> T
  if ((tr == 1 || tr == -1) && phi.det() == -1) return B1OneIdentity::Gieseking;
  throw std::logic_error("H_1 = Z outside the three known (tr, det) pairs");
}

namespace {

constexpr std::size_t kA = 0, kB = 1, kT = 2;

fp::Word letter(std::size_t g, int e = 1) { return fp::Word{fp::Letter{g, e}}; }

// Image of the generator x under the elementary automorphism for g.
fp::Word elementary_image(Nielsen g, std::size_t x) {
  switch (g) {
    case Nielsen::S: return letter(x == kA ? kB : kA);
    case Nielsen::R: return x == kB ? fp::Word{{kB, 1}, {kA, 1}} : letter(x);  // b -> ba
    case Nielsen::L: return x == kA ? fp::Word{{kA, 1}, {kB, 1}} : letter(x);  // a -> ab
    case Nielsen::E: return x == kB ? letter(kB, -1) : letter(x);
  }
  throw std::logic_error("elementary_image");
}

fp::Word substitute(const fp::Word& w, const FreeAutomorphism& f) {
  fp::Word out;
  for (const fp::Letter& x : w) {
    const fp::Word& img = x.generator == kA ? f.image_a : f.image_b;
    const fp::Word piece = x.exponent > 0 ? img : fp::inverse(img);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return fp::free_reduce(out);
}

}  // namespace

FreeAutomorphism lift_to_automorphism(const Mat2Z& phi) {
  // Abelianization sends composition to matrix product, so the word
  // g_1 ... g_n lifts to the composite g_1 o ... o g_n.
  FreeAutomorphism cur{letter(kA), letter(kB)};
  for (Nielsen g : gl2z::nielsen_decompose(phi)) {
    cur = FreeAutomorphism{substitute(elementary_image(g, kA), cur),
                           substitute(elementary_image(g, kB), cur)};
  }
  return cur;
}

fp::Presentation presentation_of(const Mat2Z& phi) {
  const FreeAutomorphism f = lift_to_automorphism(phi);
  const fp::Word ta = {{kT, 1}, {kA, 1}, {kT, -1}};
  const fp::Word tb = {{kT, 1}, {kB, 1}, {kT, -1}};
  return fp::Presentation({"a", "b", "t"}, {fp::Relation{ta, f.image_a, true},
                                            fp::Relation{tb, f.image_b, true}});
}

}  // namespace pfrigid::torus
