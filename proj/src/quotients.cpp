#include "pfrigid/quotients.hpp"

#include <algorithm>
#include <iterator>

#include "pfrigid/errors.hpp"

namespace pfrigid::fp {

std::size_t evaluate(const Word& w, const std::vector<std::size_t>& images, const FiniteGroupTable& g) {
  std::size_t acc = g.identity();
  for (const Letter& x : w) {
    const std::size_t img = images[x.generator];
    acc = g.product(acc, x.exponent > 0 ? img : g.inverse(img));
  }
  return acc;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Presentation& p, const FiniteGroupTable& g, const EpimorphismOptions& opt)
      : group_(g), options_(opt), rank_(p.generators().size()), images_(rank_, 0) {
    // relator i is checked once its highest generator has an image
    checks_.resize(rank_);
    for (const Word& r : p.relators()) {
      if (r.empty()) continue;
      std::size_t top = 0;
      for (const Letter& x : r) top = std::max(top, x.generator);
      checks_[top].push_back(r);
    }
    if (options_.existence_only && rank_ > 0) first_choices_ = g.conjugacy_class_representatives();
  }

  EpimorphismSearch run() {
    if (rank_ == 0) {
      if (group_.order() == 1) result_.count = 1;
      return result_;
    }
    extend(0);
    return result_;
  }

 private:
  bool done() const { return options_.existence_only && result_.count > 0; }

  void extend(std::size_t k) {
    if (k == rank_) {
      if (group_.generated_order(images_) != group_.order()) return;
      ++result_.count;
      if (result_.witnesses.size() < options_.max_witnesses) result_.witnesses.push_back(images_);
      return;
    }
    auto attempt = [&](std::size_t x) {
      images_[k] = x;
      for (const Word& r : checks_[k])
        if (evaluate(r, images_, group_) != group_.identity()) return;
      extend(k + 1);
    };
    if (k == 0 && !first_choices_.empty()) {
      for (std::size_t x : first_choices_) {
        attempt(x);
        if (done()) return;
      }
      return;
    }
    for (std::size_t x = 0; x < group_.order(); ++x) {
      attempt(x);
      if (done()) return;
    }
  }

  const FiniteGroupTable& group_;
  EpimorphismOptions options_;
  std::size_t rank_;
  std::vector<std::size_t> images_;
  std::vector<std::vector<Word>> checks_;
  std::vector<std::size_t> first_choices_;
  EpimorphismSearch result_;
};

}  // namespace

EpimorphismSearch epimorphism_count(const Presentation& p, const FiniteGroupTable& g,
                                    const EpimorphismOptions& options) {
  return Backtracker(p, g, options).run();
}

bool has_epimorphism(const Presentation& p, const FiniteGroupTable& g) {
  EpimorphismOptions opt;
  opt.existence_only = true;
  return epimorphism_count(p, g, opt).count > 0;
}

std::vector<std::string> QuotientFingerprint::ids() const {
  std::vector<std::string> out;
  for (const auto& s : members) out.push_back(s.id());
  return out;
}

QuotientFingerprint quotient_fingerprint(const Presentation& p, const Catalog& catalog) {
  QuotientFingerprint fp;
  fp.catalog_version = catalog.version;
  for (std::size_t i = 0; i < catalog.groups.size(); ++i)
    if (has_epimorphism(p, catalog.groups[i])) fp.members.push_back(catalog.specs[i]);
  return fp;
}

FingerprintDiff compare_fingerprints(const QuotientFingerprint& f1, const QuotientFingerprint& f2) {
  if (f1.catalog_version != f2.catalog_version) {
    throw CatalogMismatch("fingerprints use catalogs '" + f1.catalog_version + "' and '" +
                          f2.catalog_version + "'");
  }
  auto a = f1.members;
  auto b = f2.members;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  FingerprintDiff d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.only_first));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d.only_second));
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(d.symmetric_difference));
  return d;
}

}  // namespace pfrigid::fp
