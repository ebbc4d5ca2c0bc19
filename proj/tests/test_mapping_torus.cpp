#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pfrigid/errors.hpp"
#include "pfrigid/gl2z.hpp"
#include "pfrigid/mapping_torus.hpp"
#include "pfrigid/quotients.hpp"
#include "pfrigid/finite_group.hpp"

using namespace pfrigid;
using namespace pfrigid::torus;
using gl2z::Kind;

namespace {

const Mat2Z kFigureEight(2, 1, 1, 1);
const Mat2Z kTrefoil(1, -1, 1, 0);
const Mat2Z kGieseking(1, 1, 1, 0);

using Sizes = std::vector<std::size_t>;

}  // namespace

TEST_CASE("first homology") {
  auto h = h1(kFigureEight);
  CHECK(h.b1 == 1);
  CHECK(h.torsion.empty());

  h = h1(Mat2Z::identity());
  CHECK(h.b1 == 3);
  CHECK(h.torsion.empty());

  h = h1(Mat2Z(1, 6, 0, 1));
  CHECK(h.b1 == 2);
  CHECK(h.torsion == std::vector<Int>{6});
  CHECK(h.to_string() == "Z^2 + Z/6");

  // trace -2 parabolic: b1 = 1, |T| = |1 + 1 + 2| = 4
  h = h1(Mat2Z(-1, 1, 0, -1));
  CHECK(h.b1 == 1);
  CHECK(h.torsion_order() == 4);
}

TEST_CASE("b1 = 1 iff 1 + det != tr, with |T| = |1 + det - tr|") {
  for (const auto& m : oracle::gl2_box(3)) {
    const Mat2Z phi = oracle::to_mat(m);
    const Int n = 1 + phi.det() - phi.trace();
    const auto h = h1(phi);
    CHECK((h.b1 == 1) == (n != 0));
    if (h.b1 == 1) CHECK(h.torsion_order() == abs(n));
  }
}

TEST_CASE("b1 profiles") {
  CHECK(b1_profile(kFigureEight, 4) == Sizes{1, 1, 1, 1});
  CHECK(b1_profile(Mat2Z(0, -1, 1, 0), 4) == Sizes{1, 1, 1, 3});
  CHECK(b1_profile(Mat2Z(1, 1, 0, 1), 3) == Sizes{2, 2, 2});
  CHECK(b1_profile(Mat2Z(0, 1, 1, 0), 2) == Sizes{2, 3});
  CHECK(b1_profile(Mat2Z(-1, 1, 0, -1), 2) == Sizes{1, 2});
  CHECK_THROWS_AS(b1_profile(kFigureEight, 0), DomainError);
}

TEST_CASE("hyperbolic iff every cyclic cover has b1 = 1") {
  for (const auto& m : oracle::gl2_box(3)) {
    const Mat2Z phi = oracle::to_mat(m);
    const auto p = b1_profile(phi, 12);
    const bool all_one = std::all_of(p.begin(), p.end(), [](std::size_t b) { return b == 1; });
    CHECK((gl2z::classify(phi).kind == Kind::Hyperbolic) == all_one);
  }
}

TEST_CASE("fingerprint") {
  auto f = fingerprint(kFigureEight);
  CHECK(f.det == 1);
  CHECK(f.trace == 3);
  CHECK(f.h1.is_infinite_cyclic());
  CHECK(f.matrix_class.kind == Kind::Hyperbolic);
  CHECK(f.b1_profile == Sizes(12, 1));

  f = fingerprint(kGieseking);
  CHECK(f.det == -1);
  CHECK(f.trace == 1);
  CHECK(f.h1.is_infinite_cyclic());
  CHECK(f.matrix_class.kind == Kind::Hyperbolic);

  f = fingerprint(Mat2Z(0, 1, 1, 0));
  CHECK(f.det == -1);
  CHECK(f.trace == 0);
  CHECK(f.h1.b1 == 2);  // coker of (phi - I) = Z
  CHECK(f.matrix_class == gl2z::MatClass{Kind::Elliptic, 2});
  CHECK(f.b1_profile[1] == 3);

  CHECK_THROWS_AS(fingerprint(kFigureEight, 11), DomainError);
}

TEST_CASE("fingerprint is a conjugacy invariant") {
  std::mt19937_64 rng(11);
  const auto box = oracle::gl2_box(3);
  std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
  for (int i = 0; i < 200; ++i) {
    const Mat2Z phi = oracle::to_mat(box[pick(rng)]);
    const Mat2Z g = oracle::to_mat(oracle::random_gl2(rng, 8));
    CHECK(fingerprint(phi) == fingerprint(g * phi * g.inverse()));
  }
}

TEST_CASE("completion compatibility") {
  auto v = completion_compatible(kFigureEight, kTrefoil);
  CHECK(v.distinguished);
  CHECK(v.reason.find("type") != std::string::npos);

  const Mat2Z g(3, 2, 1, 1);
  CHECK_FALSE(completion_compatible(kFigureEight, g * kFigureEight * g.inverse()).distinguished);
  CHECK_FALSE(completion_compatible(Mat2Z(188, 275, 121, 177), Mat2Z(188, 11, 3025, 177)).distinguished);

  // same H_1 = Z^2, elliptic vs parabolic
  v = completion_compatible(Mat2Z(0, 1, 1, 0), Mat2Z(1, 1, 0, 1));
  CHECK(v.distinguished);

  CHECK(completion_compatible(kFigureEight, kGieseking).distinguished);
}

TEST_CASE("completion compatibility is symmetric and reflexive") {
  const auto box = oracle::gl2_box(2);
  for (const auto& x : box) {
    const Mat2Z a = oracle::to_mat(x);
    CHECK_FALSE(completion_compatible(a, a).distinguished);
    for (const auto& y : box) {
      const Mat2Z b = oracle::to_mat(y);
      CHECK(completion_compatible(a, b).distinguished == completion_compatible(b, a).distinguished);
    }
  }
}

TEST_CASE("mod-3 conjugacy forces equal determinants") {
  const auto box = oracle::gl2_box(2);
  for (const auto& x : box)
    for (const auto& y : box) {
      const Mat2Z a = oracle::to_mat(x), b = oracle::to_mat(y);
      if (gl2z::is_conjugate_mod(a, b, 3).conjugate) CHECK(a.det() == b.det());
    }
}

TEST_CASE("identify the three monodromies with H_1 = Z") {
  CHECK(identify_b1_one(kFigureEight) == B1OneIdentity::FigureEight);
  CHECK(identify_b1_one(kTrefoil) == B1OneIdentity::Trefoil);
  CHECK(identify_b1_one(kGieseking) == B1OneIdentity::Gieseking);
  CHECK(identify_b1_one(Mat2Z(1, 1, 0, 1)) == B1OneIdentity::NotB1One);
  CHECK(identify_b1_one(Mat2Z(1, 1, 1, 2)) == B1OneIdentity::FigureEight);
  // trace 4: H_1 = Z + Z/2
  CHECK(identify_b1_one(Mat2Z(3, 2, 1, 1)) == B1OneIdentity::NotB1One);
}

TEST_CASE("inverse monodromy gives the same group") {
  const Mat2Z inv = kGieseking.inverse();
  CHECK(inv.trace() == -1);
  CHECK(h1(inv).is_infinite_cyclic());
  CHECK(identify_b1_one(inv) == B1OneIdentity::Gieseking);
  const auto catalog = pfrigid::fp::default_catalog(24);
  for (const auto& phi : {kFigureEight, kTrefoil, kGieseking}) {
    CHECK(pfrigid::fp::quotient_fingerprint(presentation_of(phi), catalog) ==
          pfrigid::fp::quotient_fingerprint(presentation_of(phi.inverse()), catalog));
  }
}

TEST_CASE("lifted automorphism abelianizes to phi") {
  for (const auto& m : oracle::gl2_box(3)) {
    const Mat2Z phi = oracle::to_mat(m);
    const auto f = lift_to_automorphism(phi);
    long ea[2] = {0, 0}, eb[2] = {0, 0};
    for (const auto& x : f.image_a) ea[x.generator] += x.exponent;
    for (const auto& x : f.image_b) eb[x.generator] += x.exponent;
    // columns are images
    CHECK(Mat2Z(ea[0], eb[0], ea[1], eb[1]) == phi);
  }
}

TEST_CASE("presentations of mapping tori") {
  CHECK(presentation_of(Mat2Z(1, 1, 0, 1)).to_string() == "a b t | t a T = a, t b T = b a");
  CHECK(presentation_of(Mat2Z::identity()).to_string() == "a b t | t a T = a, t b T = b");
  CHECK(fp::abelianization(presentation_of(kFigureEight)).is_infinite_cyclic());
  for (const auto& m : oracle::gl2_box(3)) {
    const Mat2Z phi = oracle::to_mat(m);
    CHECK(fp::abelianization(presentation_of(phi)) == h1(phi));
  }
}
