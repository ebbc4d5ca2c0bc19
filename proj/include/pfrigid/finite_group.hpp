#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pfrigid::fp {

using Perm = std::vector<std::uint16_t>;

/// Finite permutation group with a full multiplication table. Elements are
/// sorted lexicographically by image list, so index 0 is the identity.
/// product(g, h) is the permutation x -> g[h[x]].
class FiniteGroupTable {
 public:
  static FiniteGroupTable from_permutations(std::string id, const std::vector<Perm>& generators);

  const std::string& id() const noexcept { return id_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Perm>& elements() const noexcept { return elements_; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return generators_; }

  std::size_t identity() const noexcept { return 0; }
  std::size_t product(std::size_t g, std::size_t h) const { return table_[g * order() + h]; }
  std::size_t inverse(std::size_t g) const { return inverses_[g]; }
  std::size_t index_of(const Perm& p) const;

  // Size of the subgroup generated by the given elements.
  std::size_t generated_order(const std::vector<std::size_t>& gens) const;
  // Smallest index in each conjugacy class, ascending.
  std::vector<std::size_t> conjugacy_class_representatives() const;

 private:
  std::string id_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> inverses_;
};

enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Psl2 };

/// Catalog key "family:parameter". Dihedral parameters are the group
/// order 2n; Psl2 parameters are the prime p.
struct GroupSpec {
  Family family = Family::Cyclic;
  unsigned parameter = 1;

  static GroupSpec parse(std::string_view text);
  std::string id() const;
  unsigned long expected_order() const;

  // group order, then family, then parameter
  friend bool operator<(const GroupSpec& x, const GroupSpec& y);
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

FiniteGroupTable build_catalog_group(const GroupSpec& spec);

struct Catalog {
  std::string version;
  std::vector<GroupSpec> specs;
  std::vector<FiniteGroupTable> groups;
};

constexpr unsigned kDefaultCatalogMax = 60;

/// Pairwise non-isomorphic catalog groups of order in [2, max_order]:
/// cyclic n, dihedral 2n (n >= 2, omitting 6 = S3), symmetric 3..6,
/// alternating 4..6, psl2 p for p in {7, 11, 13} (smaller p coincide
/// with S3, A4, A5).
Catalog default_catalog(unsigned max_order = kDefaultCatalogMax);
std::vector<GroupSpec> default_catalog_specs(unsigned max_order);
std::string catalog_version(unsigned max_order);

}  // namespace pfrigid::fp
