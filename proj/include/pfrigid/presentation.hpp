#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pfrigid/zlinalg.hpp"

namespace pfrigid::fp {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return Letter{generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);

// lhs = rhs; a bare relator has an empty rhs.
struct Relation {
  Word lhs;
  Word rhs;
  bool is_equation = false;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Finite presentation with single-letter generator names. Words are
/// stored freely reduced.
class Presentation {
 public:
  Presentation(std::vector<std::string> generators, std::vector<Relation> relations);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  // lhs * rhs^-1, freely reduced
  std::vector<Word> relators() const;

  std::string format_word(const Word& w) const;
  // Inverse of parse_presentation on its canonical spelling.
  std::string to_string() const;

  // Relator exponent-sum matrix: one row per relator, one column per generator.
  zlinalg::IntMatrix relation_matrix() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
};

/// Grammar: `g1 g2 ... | word (= word)? (, word (= word)?)*`. Generators
/// are single lowercase letters; the uppercase letter is the inverse; `1`
/// is the empty word. Throws ParseError or UnknownGenerator.
Presentation parse_presentation(std::string_view text);

zlinalg::HomologySummary abelianization(const Presentation& p);

}  // namespace pfrigid::fp
