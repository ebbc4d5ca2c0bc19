#include "pfrigid/presentation.hpp"

#include <algorithm>
#include <cctype>

#include "pfrigid/errors.hpp"

namespace pfrigid::fp {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    if (!out.empty() && out.back() == x.inverse()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(out);
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Relation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0]))) {
      throw InputError("generator name must be a single lowercase letter: '" + g + "'");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j] == g) throw InputError("duplicate generator '" + g + "'");
  }
  for (auto& r : relations_) {
    for (const Word* w : {&r.lhs, &r.rhs})
      for (const Letter& x : *w)
        if (x.generator >= generators_.size()) throw UnknownGenerator("relator uses an undeclared generator");
    r.lhs = free_reduce(r.lhs);
    r.rhs = free_reduce(r.rhs);
  }
}

std::vector<Word> Presentation::relators() const {
  std::vector<Word> out;
  out.reserve(relations_.size());
  for (const auto& r : relations_) out.push_back(concat(r.lhs, inverse(r.rhs)));
  return out;
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& x : w) {
    if (!out.empty()) out += ' ';
    const char c = generators_[x.generator][0];
    out += x.exponent > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out;
  for (const auto& g : generators_) {
    out += g;
    out += ' ';
  }
  out += '|';
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    out += i ? ", " : " ";
    out += format_word(relations_[i].lhs);
    if (relations_[i].is_equation) out += " = " + format_word(relations_[i].rhs);
  }
  return out;
}

zlinalg::IntMatrix Presentation::relation_matrix() const {
  const auto rels = relators();
  zlinalg::IntMatrix m(rels.size(), generators_.size());
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (const Letter& x : rels[i]) m(i, x.generator) += x.exponent;
  return m;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation run() {
    std::vector<std::string> gens;
    skip_space();
    while (pos_ < text_.size() && text_[pos_] != '|') {
      const char c = text_[pos_];
      if (!std::islower(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("expected generator letter or '|', found '") + c + "'", pos_);
      }
      if (std::find(gens.begin(), gens.end(), std::string(1, c)) != gens.end()) {
        throw ParseError(std::string("duplicate generator '") + c + "'", pos_);
      }
      gens.emplace_back(1, c);
      ++pos_;
      require_separator();
      skip_space();
    }
    if (pos_ >= text_.size()) throw ParseError("missing '|'", pos_);
    ++pos_;
    gens_ = &gens;

    std::vector<Relation> rels;
    skip_space();
    if (pos_ < text_.size()) {
      for (;;) {
        Relation r;
        r.lhs = word();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '=') {
          ++pos_;
          r.is_equation = true;
          r.rhs = word();
          skip_space();
        }
        rels.push_back(std::move(r));
        if (pos_ >= text_.size()) break;
        if (text_[pos_] != ',') throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        ++pos_;
      }
    }
    return Presentation(std::move(gens), std::move(rels));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void require_separator() {
    if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("letters must be separated by whitespace", pos_);
    }
  }

  Word word() {
    Word w;
    skip_space();
    bool any = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '1') {
        ++pos_;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const auto it = std::find(gens_->begin(), gens_->end(), std::string(1, lower));
        if (it == gens_->end()) {
          throw UnknownGenerator(std::string("unknown generator '") + c + "' at position " +
                                 std::to_string(pos_));
        }
        w.push_back(Letter{static_cast<std::size_t>(it - gens_->begin()),
                           std::islower(static_cast<unsigned char>(c)) ? 1 : -1});
        ++pos_;
      } else {
        break;
      }
      any = true;
      require_separator();
      skip_space();
    }
    if (!any) throw ParseError("expected a word", pos_);
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).run(); }

zlinalg::HomologySummary abelianization(const Presentation& p) {
  const std::size_t k = p.generators().size();
  if (k == 0) return {};
  // Z^k modulo the row space of the relation matrix.
  const auto rel = p.relation_matrix();
  zlinalg::IntMatrix cols(k, std::max<std::size_t>(rel.rows(), 1));
  for (std::size_t i = 0; i < rel.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) cols(j, i) = rel(i, j);
  return zlinalg::cokernel_invariants(cols);
}

}  // namespace pfrigid::fp
