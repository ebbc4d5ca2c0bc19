#include <doctest.h>

#include "pfrigid/quadform.hpp"

using namespace pfrigid;
using namespace pfrigid::quadform;

namespace {

Int det(const Transform& t) { return t[0] * t[3] - t[1] * t[2]; }

// Does f take the value +-1 on some (x, y) with |x|, |y| <= bound?
bool small_unit_value(const Form& f, long bound) {
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      const Int v = f.evaluate(x, y);
      if (v == 1 || v == -1) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("action composes") {
  const Form f{3, 5, -7};
  const Transform x{Int(2), Int(1), Int(1), Int(1)};
  const Transform y{Int(0), Int(-1), Int(1), Int(3)};
  CHECK(act(act(f, x), y) == act(f, compose(x, y)));
  CHECK(act(f, x).discriminant() == f.discriminant());
}

TEST_CASE("reduction cycles of indefinite forms") {
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long c = -6; c <= 6; ++c) {
        const Form f{a, b, c};
        const Int D = f.discriminant();
        if (D <= 0 || is_square(D)) continue;
        const auto cycle = reduction_cycle(f);
        REQUIRE(!cycle.empty());
        const Int s0 = isqrt(D);
        for (const auto& r : cycle) {
          CHECK(is_reduced_indefinite(r.form, s0));
          CHECK(act(f, r.transform) == r.form);
          CHECK(det(r.transform) == 1);
        }
      }
}

TEST_CASE("definite reduction") {
  const auto r = reduce_definite(Form{10, 34, 29});  // disc -4
  CHECK(r.form == Form{1, 0, 1});
  CHECK(act(Form{10, 34, 29}, r.transform) == r.form);
  const auto n = reduce_definite(Form{-10, 34, -29});
  CHECK(n.form == Form{-1, 0, -1});
}

TEST_CASE("reduced forms") {
  CHECK(reduced_forms(-4) == std::vector<Form>{{1, 0, 1}, {-1, 0, -1}});
  CHECK(reduced_forms(-3) == std::vector<Form>{{1, 1, 1}, {-1, -1, -1}});
  for (const Form& f : reduced_forms(5)) {
    CHECK(f.discriminant() == 5);
    CHECK(is_reduced_indefinite(f, isqrt(Int(5))));
  }
  CHECK(reduced_forms(7).empty());  // 7 is not a discriminant
}

TEST_CASE("unit representation agrees with small search") {
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b)
      for (long c = -5; c <= 5; ++c) {
        const Form f{a, b, c};
        const auto rep = represent_unit(f);
        if (rep) {
          CHECK(f.evaluate(rep->x, rep->y) == rep->value);
          CHECK((rep->value == 1 || rep->value == -1));
        }
        // small coefficients: any unit value shows up in a small window
        if (small_unit_value(f, 12)) CHECK(rep.has_value());
      }
}
