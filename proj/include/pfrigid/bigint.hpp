#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pfrigid {

// Unbounded integer used for every matrix entry and invariant factor.
using Int = mpz_class;

inline std::string to_string(const Int& x) { return x.get_str(10); }

// Floor division and non-negative remainder, independent of operand signs.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int isqrt(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline bool is_square(const Int& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& s, Int& t) {
  Int g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline int cmp_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline int sign(const Int& a) { return sgn(a); }

inline Int abs_value(const Int& a) { return abs(a); }

}  // namespace pfrigid
