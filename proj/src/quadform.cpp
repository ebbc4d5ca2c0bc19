#include "pfrigid/quadform.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfrigid::quadform {

Transform transform_identity() { return {Int(1), Int(0), Int(0), Int(1)}; }

Transform compose(const Transform& x, const Transform& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Form act(const Form& f, const Transform& m) {
  const Int& p = m[0];
  const Int& q = m[1];
  const Int& r = m[2];
  const Int& s = m[3];
  return Form{f.evaluate(p, r), 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
              f.evaluate(q, s)};
}

bool is_reduced_indefinite(const Form& f, const Int& sqrt_floor) {
  const Int abs_a = abs(f.a);
  // |sqrt(D) - 2|a|| < b < sqrt(D), D not a square
  return f.b > 0 && f.b <= sqrt_floor && f.b + 2 * abs_a > sqrt_floor &&
         2 * abs_a - f.b <= sqrt_floor;
}

Reduced rho_step(const Reduced& cur, const Int& sqrt_floor) {
  const Form& f = cur.form;
  const Int D = f.discriminant();
  const Int abs_c = abs(f.c);
  const Int two_c = 2 * abs_c;
  Int r;
  if (abs_c > sqrt_floor) {
    r = mod_nonneg(-f.b, two_c);
    if (r > abs_c) r -= two_c;
  } else {
    r = sqrt_floor - mod_nonneg(sqrt_floor + f.b, two_c);
  }
  Int s = (r + f.b) / (2 * f.c);
  Form next{f.c, r, (r * r - D) / (4 * f.c)};
  Transform step{Int(0), Int(-1), Int(1), s};
  return Reduced{next, compose(cur.transform, step)};
}

std::vector<Reduced> reduction_cycle(const Form& f) {
  const Int D = f.discriminant();
  if (D <= 0 || is_square(D)) {
    throw std::invalid_argument("reduction_cycle: discriminant must be a positive non-square");
  }
  const Int s0 = isqrt(D);
  Reduced cur{f, transform_identity()};
  while (!is_reduced_indefinite(cur.form, s0)) cur = rho_step(cur, s0);
  std::vector<Reduced> cycle;
  const Form start = cur.form;
  do {
    cycle.push_back(cur);
    cur = rho_step(cur, s0);
  } while (!(cur.form == start));
  return cycle;
}

Reduced reduce_definite(const Form& f) {
  if (f.discriminant() >= 0) throw std::invalid_argument("reduce_definite: form is not definite");
  const int orientation = f.a > 0 ? 1 : -1;
  Form g = orientation > 0 ? f : f.negated();
  Transform t = transform_identity();
  const Transform swap{Int(0), Int(-1), Int(1), Int(0)};
  for (;;) {
    const Int k = floor_div(g.a - g.b, 2 * g.a);
    if (k != 0) {
      const Transform shift{Int(1), k, Int(0), Int(1)};
      g = act(g, shift);
      t = compose(t, shift);
    }
    if (g.a > g.c || (g.a == g.c && g.b < 0)) {
      g = act(g, swap);
      t = compose(t, swap);
      if (g.a == g.c) break;
      continue;
    }
    break;
  }
  return Reduced{orientation > 0 ? g : g.negated(), t};
}

std::vector<Form> reduced_forms(const Int& D) {
  std::vector<Form> out;
  if (D == 0 || (D > 0 && is_square(D))) {
    throw std::invalid_argument("reduced_forms: square discriminant");
  }
  if (mod_nonneg(D, 4) != 0 && mod_nonneg(D, 4) != 1) return out;
  if (D < 0) {
    const Int N = -D;
    // |b| <= a <= c  =>  3a^2 <= N
    for (Int a = 1; 3 * a * a <= N; ++a) {
      for (Int b = -a + 1; b <= a; ++b) {
        const Int num = b * b - D;
        if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t())) continue;
        const Int c = num / (4 * a);
        if (c < a) continue;
        if (a == c && b < 0) continue;
        out.push_back(Form{a, b, c});
      }
    }
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i].negated());
    return out;
  }
  const Int s0 = isqrt(D);
  for (Int b = 1; b <= s0; ++b) {
    const Int num = b * b - D;  // = 4ac < 0
    if (!mpz_divisible_p(num.get_mpz_t(), Int(4).get_mpz_t())) continue;
    const Int ac = num / 4;
    // (s0 - b) / 2 < |a| <= (s0 + b) / 2
    const Int lo = floor_div(s0 - b, 2) + 1;
    const Int hi = floor_div(s0 + b, 2);
    for (Int abs_a = std::max(lo, Int(1)); abs_a <= hi; ++abs_a) {
      if (!mpz_divisible_p(ac.get_mpz_t(), abs_a.get_mpz_t())) continue;
      for (int sg : {1, -1}) {
        const Int a = sg * abs_a;
        Form f{a, b, ac / a};
        if (is_reduced_indefinite(f, s0)) out.push_back(f);
      }
    }
  }
  return out;
}

namespace {

std::optional<UnitRepresentation> represent_degenerate(const Form& f) {
  // D = 0: f = s * g * (alpha x + beta y)^2 with gcd(alpha, beta) = 1.
  const Int g = gcd(gcd(f.a, f.b), f.c);
  if (g != 1) return std::nullopt;
  const int s = f.a != 0 ? sgn(f.a) : sgn(f.c);
  const Int alpha = isqrt(s * f.a);
  Int beta = isqrt(s * f.c);
  if (s * f.b < 0) beta = -beta;
  Int x, y;
  if (ext_gcd(alpha, beta, x, y) != 1) return std::nullopt;
  return UnitRepresentation{x, y, s};
}

std::optional<UnitRepresentation> represent_split(const Form& f, const Int& D) {
  // Square discriminant k^2: move a rational root to (1, 0), giving
  // (0, B, C) = y (B x + C y), then solve the two linear conditions.
  const Int k = isqrt(D);
  Int x0 = 1, y0 = 0;
  if (f.a != 0) {
    const Int num = -f.b + k;
    const Int den = 2 * f.a;
    const Int g = gcd(num, den);
    x0 = num / g;
    y0 = den / g;
  }
  Int u, v;
  ext_gcd(x0, y0, u, v);
  const Transform m{x0, -v, y0, u};
  const Form h = act(f, m);
  for (int e : {1, -1}) {
    for (int target : {1, -1}) {
      const Int num = Int(target * e) - h.c * e;
      if (!mpz_divisible_p(num.get_mpz_t(), h.b.get_mpz_t())) continue;
      const Int x = num / h.b;
      const Int y = e;
      return UnitRepresentation{m[0] * x + m[1] * y, m[2] * x + m[3] * y, target};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<UnitRepresentation> represent_unit(const Form& f) {
  const Int D = f.discriminant();
  if (D < 0) {
    const Reduced r = reduce_definite(f);
    if (abs(r.form.a) != 1) return std::nullopt;
    return UnitRepresentation{r.transform[0], r.transform[2], sgn(r.form.a)};
  }
  if (D == 0) return represent_degenerate(f);
  if (is_square(D)) return represent_split(f, D);
  for (const Reduced& r : reduction_cycle(f)) {
    if (abs(r.form.a) == 1) {
      return UnitRepresentation{r.transform[0], r.transform[2], sgn(r.form.a)};
    }
  }
  return std::nullopt;
}

}  // namespace pfrigid::quadform
