#pragma once

// Brute-force references used only by tests. Nothing here calls into the
// SNF, quadratic-form or backtracking code paths it is compared against.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pfrigid/finite_group.hpp"
#include "pfrigid/gl2z.hpp"
#include "pfrigid/presentation.hpp"
#include "pfrigid/zlinalg.hpp"

namespace oracle {

using M2 = std::array<long, 4>;

inline M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

inline long det(const M2& x) { return x[0] * x[3] - x[1] * x[2]; }
inline long trace(const M2& x) { return x[0] + x[3]; }

inline M2 to_m2(const pfrigid::gl2z::Mat2Z& m) {
  return {m.a11().get_si(), m.a12().get_si(), m.a21().get_si(), m.a22().get_si()};
}

inline pfrigid::gl2z::Mat2Z to_mat(const M2& m) { return pfrigid::gl2z::Mat2Z(m[0], m[1], m[2], m[3]); }

// Every element of GL(2,Z) with entries in [-b, b].
inline std::vector<M2> gl2_box(long b) {
  std::vector<M2> out;
  for (long a = -b; a <= b; ++a)
    for (long c = -b; c <= b; ++c)
      for (long d = -b; d <= b; ++d)
        for (long e = -b; e <= b; ++e) {
          const long x = a * e - c * d;
          if (x == 1 || x == -1) out.push_back({a, c, d, e});
        }
  return out;
}

// g with g phi == psi g among the given candidates.
inline bool conjugator_search(const M2& phi, const M2& psi, const std::vector<M2>& candidates) {
  for (const M2& g : candidates)
    if (mul(g, phi) == mul(psi, g)) return true;
  return false;
}

// Conjugacy in GL(2,Z/m) by exhausting all 4-tuples mod m.
inline bool conjugate_mod_exhaustive(const M2& phi, const M2& psi, long m) {
  auto red = [m](long x) { return ((x % m) + m) % m; };
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b)
      for (long c = 0; c < m; ++c)
        for (long d = 0; d < m; ++d) {
          if (std::gcd(red(a * d - b * c), m) != 1) continue;
          const M2 g{a, b, c, d};
          const M2 l = mul(g, phi), r = mul(psi, g);
          bool eq = true;
          for (int i = 0; i < 4 && eq; ++i) eq = red(l[i]) == red(r[i]);
          if (eq) return true;
        }
  return false;
}

// gcd of all k x k minors for the largest k with a nonzero minor, plus k.
inline std::pair<long, std::size_t> minor_gcd(const std::vector<std::vector<long>>& a) {
  const std::size_t rows = a.size(), cols = a[0].size();
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  auto det_small = [](std::vector<std::vector<long>> m) -> long {
    // Laplace expansion; sizes here are at most 4
    auto rec = [](auto&& self, const std::vector<std::vector<long>>& x) -> long {
      const std::size_t n = x.size();
      if (n == 1) return x[0][0];
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long>> sub;
        for (std::size_t i = 1; i < n; ++i) {
          std::vector<long> r;
          for (std::size_t k = 0; k < n; ++k)
            if (k != j) r.push_back(x[i][k]);
          sub.push_back(r);
        }
        s += (j % 2 ? -1 : 1) * x[0][j] * self(self, sub);
      }
      return s;
    };
    return rec(rec, m);
  };
  for (std::size_t k = std::min(rows, cols); k >= 1; --k) {
    long g = 0;
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<long>> m;
        for (auto i : rs) {
          std::vector<long> r;
          for (auto j : cs) r.push_back(a[i][j]);
          m.push_back(r);
        }
        g = std::gcd(g, det_small(m));
      }
    if (g != 0) return {g, k};
  }
  return {0, 0};
}

// Raw epimorphism count by trying every generator-image tuple and
// multiplying permutations directly.
inline std::uint64_t epimorphisms_naive(const pfrigid::fp::Presentation& p,
                                        const std::vector<pfrigid::fp::Perm>& elements) {
  using pfrigid::fp::Perm;
  const std::size_t k = p.generators().size();
  const std::size_t n = elements.size();
  const std::size_t degree = elements[0].size();
  auto compose = [](const Perm& g, const Perm& h) {
    Perm out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) out[x] = g[h[x]];
    return out;
  };
  auto invert = [](const Perm& g) {
    Perm out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) out[g[x]] = static_cast<std::uint16_t>(x);
    return out;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  const auto rels = p.relators();
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    bool ok = true;
    for (const auto& r : rels) {
      Perm acc = id;
      for (const auto& x : r) {
        const Perm& g = elements[idx[x.generator]];
        acc = compose(acc, x.exponent > 0 ? g : invert(g));
      }
      if (acc != id) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::set<Perm> closure{id};
      std::vector<Perm> frontier{id};
      while (!frontier.empty()) {
        Perm cur = frontier.back();
        frontier.pop_back();
        for (std::size_t i = 0; i < k; ++i) {
          Perm nx = compose(cur, elements[idx[i]]);
          if (closure.insert(nx).second) frontier.push_back(nx);
        }
      }
      if (closure.size() == n) ++count;
    }
    std::size_t i = 0;
    while (i < k && ++idx[i] == n) idx[i++] = 0;
    if (i == k) break;
  }
  return count;
}

// Random product of at most max_len Nielsen generators and inverses.
inline M2 random_gl2(std::mt19937_64& rng, int max_len) {
  static const M2 gens[] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 0}, {1, 0, 0, -1}, {1, -1, 0, 1}, {1, 0, -1, 1}};
  std::uniform_int_distribution<int> len(0, max_len), pick(0, 5);
  M2 g{1, 0, 0, 1};
  for (int i = len(rng); i > 0; --i) g = mul(g, gens[pick(rng)]);
  return g;
}

inline M2 inverse(const M2& g) {
  const long d = det(g);
  return {d * g[3], -d * g[1], -d * g[2], d * g[0]};
}

}  // namespace oracle
