#include "pfrigid/gl2z.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "pfrigid/errors.hpp"
#include "pfrigid/quadform.hpp"
#include "pfrigid/zlinalg.hpp"

namespace pfrigid::gl2z {

using quadform::Form;
using zlinalg::IntMatrix;

Mat2Z::Mat2Z(Int a11, Int a12, Int a21, Int a22)
    : e_{std::move(a11), std::move(a12), std::move(a21), std::move(a22)} {
  const Int d = e_[0] * e_[3] - e_[1] * e_[2];
  if (d == 1) {
    det_ = 1;
  } else if (d == -1) {
    det_ = -1;
  } else {
    throw NotUnimodular("determinant " + d.get_str() + " is not +-1");
  }
}

Mat2Z Mat2Z::identity() { return Mat2Z(1, 0, 0, 1); }

Mat2Z Mat2Z::inverse() const {
  // adj / det with det = +-1
  return Mat2Z(det_ * e_[3], -det_ * e_[1], -det_ * e_[2], det_ * e_[0]);
}

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
  const auto& a = x.e_;
  const auto& b = y.e_;
  return Mat2Z(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
               a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]);
}

namespace {

bool parse_integer(std::string_view text, std::size_t& pos, Int& out) {
  while (pos < text.size() && text[pos] == ' ') ++pos;
  const std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits) return false;
  std::string token(text.substr(start, pos - start));
  if (token[0] == '+') token.erase(0, 1);
  out = Int(token, 10);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  return true;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError(std::string("expected '") + c + "' in matrix", pos);
  }
  ++pos;
}

}  // namespace

Mat2Z parse_matrix(std::string_view text) {
  std::array<Int, 4> e;
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    if (!parse_integer(text, pos, e[i])) throw ParseError("expected integer in matrix", pos);
    if (i == 0 || i == 2) expect(text, pos, ',');
    if (i == 1) expect(text, pos, ';');
  }
  if (pos != text.size()) throw ParseError("trailing characters in matrix", pos);
  return Mat2Z(e[0], e[1], e[2], e[3]);
}

std::string format_matrix(const Mat2Z& m) {
  return m.a11().get_str() + "," + m.a12().get_str() + ";" + m.a21().get_str() + "," +
         m.a22().get_str();
}

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::Elliptic: return "elliptic";
    case Kind::Parabolic: return "parabolic";
    case Kind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

std::string MatClass::to_string() const {
  if (kind == Kind::Elliptic) return "elliptic(" + std::to_string(order) + ")";
  return kind_name(kind);
}

MatClass classify(const Mat2Z& phi) {
  const Int tr = phi.trace();
  if (phi.det() == -1) {
    if (tr == 0) return {Kind::Elliptic, 2};
    return {Kind::Hyperbolic, 0};
  }
  if (phi.is_scalar()) return {Kind::Elliptic, phi.a11() == 1 ? 1 : 2};
  if (abs(tr) > 2) return {Kind::Hyperbolic, 0};
  if (abs(tr) == 2) return {Kind::Parabolic, 0};
  const Mat2Z id = Mat2Z::identity();
  Mat2Z p = phi;
  for (int order = 1; order <= 6; ++order) {
    if (p == id) return {Kind::Elliptic, order};
    p = p * phi;
  }
  throw std::logic_error("classify: elliptic element of order > 6");
}

Mat2Z power(const Mat2Z& phi, long r) {
  Mat2Z base = r < 0 ? phi.inverse() : phi;
  unsigned long n = r < 0 ? static_cast<unsigned long>(-(r + 1)) + 1 : static_cast<unsigned long>(r);
  Mat2Z result = Mat2Z::identity();
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

namespace {

// Coefficients of X -> X*phi - psi*X on the row-major entries of X.
IntMatrix intertwiner_system(const Mat2Z& phi, const Mat2Z& psi) {
  IntMatrix a(4, 4);
  const auto& f = phi.entries();
  const auto& s = psi.entries();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
          Int coeff = 0;
          if (p == i) coeff += f[2 * q + j];
          if (q == j) coeff -= s[2 * i + p];
          a(2 * i + j, 2 * p + q) = coeff;
        }
  return a;
}

Int det2(const std::vector<Int>& x) { return x[0] * x[3] - x[1] * x[2]; }

}  // namespace

ConjVerdict is_conjugate_z(const Mat2Z& phi, const Mat2Z& psi) {
  if (phi.trace() != psi.trace() || phi.det() != psi.det()) return {};
  if (phi == psi) return {true, Mat2Z::identity()};
  if (phi.is_scalar() || psi.is_scalar()) return {};

  // Non-scalar with equal characteristic polynomial: the intertwiners
  // {X : X phi = psi X} form a rank-2 lattice with basis P, Q, and
  // det(xP + yQ) is a binary quadratic form. Conjugators are exactly the
  // lattice points where it takes the value +-1.
  const auto basis = zlinalg::kernel_basis(intertwiner_system(phi, psi));
  if (basis.size() != 2) throw std::logic_error("is_conjugate_z: intertwiner lattice rank != 2");
  const auto& p = basis[0];
  const auto& q = basis[1];
  std::vector<Int> sum(4);
  for (int i = 0; i < 4; ++i) sum[i] = p[i] + q[i];
  const Int a = det2(p);
  const Int c = det2(q);
  const Form form{a, det2(sum) - a - c, c};

  const auto rep = quadform::represent_unit(form);
  if (!rep) return {};
  Mat2Z g(rep->x * p[0] + rep->y * q[0], rep->x * p[1] + rep->y * q[1],
          rep->x * p[2] + rep->y * q[2], rep->x * p[3] + rep->y * q[3]);
  if (!(g * phi == psi * g)) throw std::logic_error("is_conjugate_z: witness check failed");
  return {true, std::move(g)};
}

namespace {

std::vector<std::pair<Int, unsigned>> factor(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Conjugacy mod p^k. A solution X of X phi = psi X (mod p^k) has unit
// determinant iff its reduction mod p does, and reductions of solutions
// span exactly the columns v_i of the SNF transform whose diagonal entry
// is divisible by p^k. det is a quadratic polynomial in the coefficients,
// so a nonvanishing point exists on {0,1,2}^n when it exists at all
// (p >= 3); for p = 2 the grid {0,1}^n is the whole space.
std::optional<std::array<Int, 4>> conjugator_mod_prime_power(const zlinalg::SnfResult& snf,
                                                             const Int& p, const Int& pk) {
  std::vector<std::vector<Int>> span;
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < 4; ++i) {
    if (mpz_divisible_p(diag[i].get_mpz_t(), pk.get_mpz_t())) span.push_back(snf.v.column(i));
  }
  const int grid = p == 2 ? 2 : 3;
  std::vector<int> coeff(span.size(), 0);
  for (;;) {
    std::array<Int, 4> x{};
    for (std::size_t i = 0; i < span.size(); ++i)
      for (int j = 0; j < 4; ++j) x[j] += coeff[i] * span[i][j];
    const Int det = x[0] * x[3] - x[1] * x[2];
    if (!mpz_divisible_p(det.get_mpz_t(), p.get_mpz_t())) {
      for (auto& e : x) e = mod_nonneg(e, pk);
      return x;
    }
    std::size_t i = 0;
    while (i < coeff.size() && ++coeff[i] == grid) coeff[i++] = 0;
    if (i == coeff.size()) return std::nullopt;
  }
}

}  // namespace

ModConjVerdict is_conjugate_mod(const Mat2Z& phi, const Mat2Z& psi, const Int& m) {
  if (m < 2) throw BadModulus("modulus must be at least 2, got " + m.get_str());
  ModConjVerdict verdict;
  verdict.modulus = m;
  const auto snf = zlinalg::smith_normal_form(intertwiner_system(phi, psi));

  std::array<Int, 4> combined{};
  Int modulus = 1;
  for (const auto& [p, e] : factor(m)) {
    Int pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
    const auto local = conjugator_mod_prime_power(snf, p, pk);
    if (!local) return verdict;
    // CRT: combined (mod modulus) with local (mod pk)
    Int inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pk.get_mpz_t());
    for (int j = 0; j < 4; ++j) {
      const Int t = mod_nonneg(((*local)[j] - combined[j]) * inv, pk);
      combined[j] += modulus * t;
    }
    modulus *= pk;
  }
  verdict.conjugate = true;
  verdict.witness = combined;
  return verdict;
}

LocalConjReport local_conjugacy(const Mat2Z& phi, const Mat2Z& psi, long bound) {
  if (bound < 2) throw BadModulus("modulus bound must be at least 2");
  LocalConjReport report;
  report.modulus_bound = bound;
  for (long m = 2; m <= bound; ++m) {
    if (!is_conjugate_mod(phi, psi, Int(m)).conjugate) report.failures.push_back(m);
  }
  return report;
}

namespace {

// Matrix with the given trace whose form omega(v, phi v) equals f.
Mat2Z matrix_of_form(const Int& trace, const Form& f) {
  return Mat2Z((trace - f.b) / 2, -f.c, f.a, (trace + f.b) / 2);
}

struct RepKey {
  Int height;
  int negatives;
  std::array<Int, 4> entries;

  explicit RepKey(const Mat2Z& m) : height(0), negatives(0), entries(m.entries()) {
    for (const Int& x : entries) {
      if (abs(x) > height) height = abs(x);
      if (x < 0) ++negatives;
    }
  }

  bool operator<(const RepKey& o) const {
    if (height != o.height) return height < o.height;
    if (negatives != o.negatives) return negatives < o.negatives;
    return entries > o.entries;
  }
};

// Every matrix with the given trace/det whose largest |entry| is exactly h.
std::vector<Mat2Z> matrices_of_height(const Int& trace, int det, const Int& h) {
  std::vector<Mat2Z> out;
  for (Int a11 = -h; a11 <= h; ++a11) {
    const Int a22 = trace - a11;
    if (abs(a22) > h) continue;
    const Int prod = a11 * a22 - det;  // = a12 * a21
    for (Int a12 = -h; a12 <= h; ++a12) {
      auto consider = [&](const Int& a21) {
        if (abs(a21) > h) return;
        if (abs(a11) != h && abs(a22) != h && abs(a12) != h && abs(a21) != h) return;
        out.emplace_back(a11, a12, a21, a22);
      };
      if (a12 == 0) {
        if (prod != 0) continue;
        for (Int a21 = -h; a21 <= h; ++a21) consider(a21);
      } else if (mpz_divisible_p(prod.get_mpz_t(), a12.get_mpz_t())) {
        consider(prod / a12);
      }
    }
  }
  return out;
}

// One matrix per SL(2,Z) class: proper equivalence classes of forms of
// discriminant tr^2 - 4 det correspond to SL(2,Z)-conjugacy classes.
std::vector<Mat2Z> proper_class_seeds(const Int& trace, int det) {
  const Int D = trace * trace - 4 * det;
  std::vector<Mat2Z> seeds;
  if (D == 4) {
    // tr 0, det -1: the involutions
    seeds.emplace_back(1, 0, 0, -1);
    seeds.emplace_back(0, 1, 1, 0);
    return seeds;
  }
  const auto forms = quadform::reduced_forms(D);
  if (D < 0) {
    for (const Form& f : forms) seeds.push_back(matrix_of_form(trace, f));
    return seeds;
  }
  std::vector<bool> seen(forms.size(), false);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (seen[i]) continue;
    for (const auto& r : quadform::reduction_cycle(forms[i])) {
      const auto it = std::find(forms.begin(), forms.end(), r.form);
      if (it != forms.end()) seen[static_cast<std::size_t>(it - forms.begin())] = true;
    }
    seeds.push_back(matrix_of_form(trace, forms[i]));
  }
  return seeds;
}

}  // namespace

std::vector<Mat2Z> enumerate_classes(const Int& trace, int det) {
  if (det != 1 && det != -1) throw NotUnimodular("determinant must be +-1");
  if (det == 1 && abs(trace) == 2) {
    throw InfiniteFamily("classes with trace " + trace.get_str() +
                         " and determinant 1 are +-I and the infinite family +-(1 n; 0 1), n > 0");
  }

  std::vector<Mat2Z> classes;
  for (const Mat2Z& seed : proper_class_seeds(trace, det)) {
    const bool known = std::any_of(classes.begin(), classes.end(), [&](const Mat2Z& c) {
      return is_conjugate_z(c, seed).conjugate;
    });
    if (!known) classes.push_back(seed);
  }

  // Canonical representatives: scan heights upward, assigning each matrix
  // to the first class it is conjugate to.
  std::vector<std::optional<Mat2Z>> best(classes.size());
  std::size_t unresolved = classes.size();
  for (Int h = 1; unresolved > 0; ++h) {
    std::vector<std::optional<Mat2Z>> found(classes.size());
    for (const Mat2Z& cand : matrices_of_height(trace, det, h)) {
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (best[i]) continue;
        if (!is_conjugate_z(cand, classes[i]).conjugate) continue;
        if (!found[i] || RepKey(cand) < RepKey(*found[i])) found[i] = cand;
        break;
      }
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (found[i]) {
        best[i] = found[i];
        --unresolved;
      }
    }
  }
  std::vector<Mat2Z> out;
  out.reserve(best.size());
  for (auto& b : best) out.push_back(*b);
  std::sort(out.begin(), out.end(),
            [](const Mat2Z& x, const Mat2Z& y) { return RepKey(x) < RepKey(y); });
  return out;
}

Mat2Z nielsen_matrix(Nielsen g) {
  switch (g) {
    case Nielsen::R: return Mat2Z(1, 1, 0, 1);
    case Nielsen::L: return Mat2Z(1, 0, 1, 1);
    case Nielsen::S: return Mat2Z(0, 1, 1, 0);
    case Nielsen::E: return Mat2Z(1, 0, 0, -1);
  }
  throw std::logic_error("nielsen_matrix");
}

Mat2Z nielsen_product(const NielsenWord& word) {
  Mat2Z m = Mat2Z::identity();
  for (Nielsen g : word) m = m * nielsen_matrix(g);
  return m;
}

namespace {

// Appends g^k; negative powers use R^-1 = E R E and L^-1 = E L E.
void append_power(NielsenWord& word, Nielsen g, const Int& k) {
  if (k == 0) return;
  const bool negative = k < 0;
  if (negative) word.push_back(Nielsen::E);
  for (Int i = 0; i < abs(k); ++i) word.push_back(g);
  if (negative) word.push_back(Nielsen::E);
}

NielsenWord cancel_involutions(const NielsenWord& word) {
  NielsenWord out;
  for (Nielsen g : word) {
    if ((g == Nielsen::E || g == Nielsen::S) && !out.empty() && out.back() == g) {
      out.pop_back();
    } else {
      out.push_back(g);
    }
  }
  return out;
}

// Quotient leaving the remainder in (0, |d|] with the sign of n.
Int soft_quotient(const Int& n, const Int& d) { return (n - sgn(n)) / d; }

}  // namespace

NielsenWord nielsen_decompose(const Mat2Z& phi) {
  // Invariant: phi == product(word) * (current matrix).
  NielsenWord word;
  Int m11 = phi.a11(), m12 = phi.a12(), m21 = phi.a21(), m22 = phi.a22();
  if (m11 == 0) {
    word.push_back(Nielsen::S);
    std::swap(m11, m21);
    std::swap(m12, m22);
  }
  while (m21 != 0) {
    if (cmp_abs(m11, m21) > 0) {
      const Int k = soft_quotient(m11, m21);  // R^-k: row1 -= k row2
      m11 -= k * m21;
      m12 -= k * m22;
      append_power(word, Nielsen::R, k);
    } else {
      const Int k = cmp_abs(m11, m21) == 0 ? Int(m21 / m11) : soft_quotient(m21, m11);
      m21 -= k * m11;
      m22 -= k * m12;
      append_power(word, Nielsen::L, k);
    }
  }
  // m = diag(m11, m22) * R^y with y = m12 * m11
  if (m11 == 1 && m22 == -1) {
    word.push_back(Nielsen::E);
  } else if (m11 == -1 && m22 == 1) {
    word.insert(word.end(), {Nielsen::S, Nielsen::E, Nielsen::S});
  } else if (m11 == -1 && m22 == -1) {
    word.insert(word.end(), {Nielsen::S, Nielsen::E, Nielsen::S, Nielsen::E});
  }
  append_power(word, Nielsen::R, m12 * m11);
  return cancel_involutions(word);
}

std::string format_word(const NielsenWord& word) {
  std::string out;
  for (Nielsen g : word) {
    if (!out.empty()) out += ' ';
    switch (g) {
      case Nielsen::R: out += 'R'; break;
      case Nielsen::L: out += 'L'; break;
      case Nielsen::S: out += 'S'; break;
      case Nielsen::E: out += 'E'; break;
    }
  }
  return out;
}

}  // namespace pfrigid::gl2z
