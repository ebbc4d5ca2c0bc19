#include "pfrigid/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <stdexcept>

#include "pfrigid/errors.hpp"

namespace pfrigid::fp {

namespace {

Perm compose(const Perm& g, const Perm& h) {
  Perm out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = g[h[x]];
  return out;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint16_t>(i);
  return p;
}

}  // namespace

FiniteGroupTable FiniteGroupTable::from_permutations(std::string id,
                                                     const std::vector<Perm>& generators) {
  if (generators.empty()) throw std::invalid_argument("group needs at least one generator");
  const std::size_t degree = generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != degree) throw std::invalid_argument("generators of different degree");
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(degree)) throw std::invalid_argument("generator is not a permutation");
  }

  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> queue{identity_perm(degree)};
  while (!queue.empty()) {
    const Perm cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Perm next = compose(cur, g);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  FiniteGroupTable t;
  t.id_ = std::move(id);
  t.elements_.assign(seen.begin(), seen.end());
  const std::size_t n = t.elements_.size();
  t.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t.table_[i * n + j] = static_cast<std::uint32_t>(t.index_of(compose(t.elements_[i], t.elements_[j])));

  t.inverses_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n && t.inverses_[i] == n; ++j)
      if (t.product(i, j) == 0) t.inverses_[i] = j;
  if (t.elements_.front() != identity_perm(degree) ||
      std::find(t.inverses_.begin(), t.inverses_.end(), n) != t.inverses_.end()) {
    throw std::logic_error("permutation closure is not a group");
  }
  for (const auto& g : generators) t.generators_.push_back(t.index_of(g));
  return t;
}

std::size_t FiniteGroupTable::index_of(const Perm& p) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw std::out_of_range("permutation not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroupTable::generated_order(const std::vector<std::size_t>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<std::size_t> members{identity()};
  in[identity()] = 1;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (std::size_t g : gens) {
      const std::size_t next = product(members[k], g);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
        if (members.size() == order()) return order();
      }
    }
  }
  return members.size();
}

std::vector<std::size_t> FiniteGroupTable::conjugacy_class_representatives() const {
  std::vector<char> done(order(), 0);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < order(); ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (std::size_t g = 0; g < order(); ++g) done[product(product(g, x), inverse(g))] = 1;
  }
  return reps;
}

namespace {

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::Cyclic, "cyclic"},         {Family::Dihedral, "dihedral"},
    {Family::Symmetric, "symmetric"},   {Family::Alternating, "alternating"},
    {Family::Psl2, "psl2"},
};

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("group spec must look like family:parameter");
  const auto name = text.substr(0, colon);
  const auto param = text.substr(colon + 1);
  GroupSpec spec;
  bool known = false;
  for (const auto& [family, fname] : kFamilyNames)
    if (fname == name) {
      spec.family = family;
      known = true;
    }
  if (!known) throw InputError("unknown group family '" + std::string(name) + "'");
  const auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), spec.parameter);
  if (ec != std::errc() || ptr != param.data() + param.size()) {
    throw InputError("bad group parameter '" + std::string(param) + "'");
  }
  return spec;
}

std::string GroupSpec::id() const {
  for (const auto& [family_, name] : kFamilyNames)
    if (family_ == family) return std::string(name) + ":" + std::to_string(parameter);
  return "?";
}

unsigned long GroupSpec::expected_order() const {
  const unsigned long n = parameter;
  switch (family) {
    case Family::Cyclic:
    case Family::Dihedral: return n;
    case Family::Symmetric:
    case Family::Alternating: {
      unsigned long f = 1;
      for (unsigned long i = 2; i <= n; ++i) f *= i;
      return family == Family::Alternating && n >= 2 ? f / 2 : f;
    }
    case Family::Psl2: return n == 2 ? 6 : n * (n * n - 1) / 2;
  }
  return 0;
}

bool operator<(const GroupSpec& x, const GroupSpec& y) {
  const auto ox = x.expected_order(), oy = y.expected_order();
  if (ox != oy) return ox < oy;
  if (x.family != y.family) return x.family < y.family;
  return x.parameter < y.parameter;
}

FiniteGroupTable build_catalog_group(const GroupSpec& spec) {
  const unsigned n = spec.parameter;
  std::vector<Perm> gens;
  auto cycle = [](std::size_t degree, std::size_t length) {
    Perm p = identity_perm(degree);
    for (std::size_t i = 0; i < length; ++i) p[i] = static_cast<std::uint16_t>((i + 1) % length);
    return p;
  };
  switch (spec.family) {
    case Family::Cyclic:
      if (n < 1 || n > 4096) throw UnsupportedParameter("cyclic order must be in [1, 4096]");
      gens.push_back(cycle(n, n));
      break;
    case Family::Dihedral: {
      // order 2m, acting on the m vertices of an m-gon (m >= 3), or the
      // Klein four-group for m = 2
      if (n < 4 || n % 2 != 0 || n > 4096) {
        throw UnsupportedParameter("dihedral parameter must be an even order in [4, 4096]");
      }
      const unsigned m = n / 2;
      if (m == 2) {
        gens.push_back(Perm{1, 0, 3, 2});
        gens.push_back(Perm{2, 3, 0, 1});
        break;
      }
      gens.push_back(cycle(m, m));
      Perm reflection(m);
      for (unsigned i = 0; i < m; ++i) reflection[i] = static_cast<std::uint16_t>((m - i) % m);
      gens.push_back(reflection);
      break;
    }
    case Family::Symmetric:
      if (n < 1 || n > 6) throw UnsupportedParameter("symmetric degree must be in [1, 6]");
      if (n == 1) {
        gens.push_back(Perm{0});
        break;
      }
      gens.push_back(cycle(n, n));
      gens.push_back(cycle(n, 2));
      break;
    case Family::Alternating:
      if (n < 1 || n > 6) throw UnsupportedParameter("alternating degree must be in [1, 6]");
      if (n < 3) {
        gens.push_back(identity_perm(n));
        break;
      }
      // 3-cycles (0 1 k) generate A_n
      for (unsigned k = 2; k < n; ++k) {
        Perm p = identity_perm(n);
        p[0] = 1;
        p[1] = static_cast<std::uint16_t>(k);
        p[k] = 0;
        gens.push_back(p);
      }
      break;
    case Family::Psl2: {
      if (n > 13 || !is_prime(n)) throw UnsupportedParameter("psl2 needs a prime p <= 13");
      // action on the projective line {0, ..., p-1, infinity = p}
      const unsigned p = n;
      Perm shift(p + 1), invert(p + 1);
      for (unsigned x = 0; x < p; ++x) shift[x] = static_cast<std::uint16_t>((x + 1) % p);
      shift[p] = static_cast<std::uint16_t>(p);
      invert[0] = static_cast<std::uint16_t>(p);
      invert[p] = 0;
      for (unsigned x = 1; x < p; ++x) {
        unsigned y = 1;
        while ((x * y) % p != 1) ++y;
        invert[x] = static_cast<std::uint16_t>((p - y) % p);  // -1/x
      }
      gens.push_back(shift);
      gens.push_back(invert);
      break;
    }
  }
  auto table = FiniteGroupTable::from_permutations(spec.id(), gens);
  if (table.order() != spec.expected_order()) {
    throw std::logic_error(spec.id() + ": built order " + std::to_string(table.order()) +
                           " differs from expected " + std::to_string(spec.expected_order()));
  }
  return table;
}

std::vector<GroupSpec> default_catalog_specs(unsigned max_order) {
  std::vector<GroupSpec> specs;
  for (unsigned n = 2; n <= max_order; ++n) specs.push_back({Family::Cyclic, n});
  for (unsigned n = 4; n <= max_order; n += 2)
    if (n != 6) specs.push_back({Family::Dihedral, n});
  for (unsigned k = 3; k <= 6; ++k) specs.push_back({Family::Symmetric, k});
  for (unsigned k = 4; k <= 6; ++k) specs.push_back({Family::Alternating, k});
  for (unsigned p : {7u, 11u, 13u}) specs.push_back({Family::Psl2, p});
  std::erase_if(specs, [&](const GroupSpec& s) { return s.expected_order() > max_order; });
  std::sort(specs.begin(), specs.end());
  return specs;
}

std::string catalog_version(unsigned max_order) {
  return "pfcat-1/max" + std::to_string(max_order);
}

Catalog default_catalog(unsigned max_order) {
  Catalog c;
  c.version = catalog_version(max_order);
  c.specs = default_catalog_specs(max_order);
  for (const auto& s : c.specs) c.groups.push_back(build_catalog_group(s));
  return c;
}

}  // namespace pfrigid::fp
