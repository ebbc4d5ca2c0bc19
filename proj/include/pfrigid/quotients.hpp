#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pfrigid/finite_group.hpp"
#include "pfrigid/presentation.hpp"

namespace pfrigid::fp {

struct EpimorphismSearch {
  std::uint64_t count = 0;
  // Generator image tuples (element indices), in enumeration order.
  std::vector<std::vector<std::size_t>> witnesses;
};

struct EpimorphismOptions {
  // Stop at the first epimorphism and search only one image of the first
  // generator per conjugacy class; count is then 0 or 1.
  bool existence_only = false;
  std::size_t max_witnesses = 0;
};

/// Surjective homomorphisms from p onto g, counted as raw maps.
EpimorphismSearch epimorphism_count(const Presentation& p, const FiniteGroupTable& g,
                                    const EpimorphismOptions& options = {});

bool has_epimorphism(const Presentation& p, const FiniteGroupTable& g);

// Evaluates w under the generator images.
std::size_t evaluate(const Word& w, const std::vector<std::size_t>& images, const FiniteGroupTable& g);

struct QuotientFingerprint {
  std::string catalog_version;
  std::vector<GroupSpec> members;  // catalog order

  std::vector<std::string> ids() const;
  friend bool operator==(const QuotientFingerprint&, const QuotientFingerprint&) = default;
};

QuotientFingerprint quotient_fingerprint(const Presentation& p, const Catalog& catalog);

struct FingerprintDiff {
  std::vector<GroupSpec> only_first;
  std::vector<GroupSpec> only_second;
  // union of both sides, by group order then catalog id
  std::vector<GroupSpec> symmetric_difference;

  bool empty() const noexcept { return symmetric_difference.empty(); }
};

/// Empty result means "not separated by this catalog"; it says nothing
/// about the full profinite completions.
FingerprintDiff compare_fingerprints(const QuotientFingerprint& f1, const QuotientFingerprint& f2);

}  // namespace pfrigid::fp
