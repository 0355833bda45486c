#ifndef SYMQ_WORDS_HPP
#define SYMQ_WORDS_HPP

#include <string>
#include <vector>

namespace symq {

/// One letter of a free-group word: generator index with exponent ±1.
struct Letter {
  int gen = 0;
  int sign = 1;

  Letter() = default;
  Letter(int g, int s) : gen(g), sign(s) {}
  Letter inverse() const { return Letter(gen, -sign); }

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);
Word free_reduce(const Word& w);
/// Freely reduced and cyclically reduced.
Word free_cyclic_reduce(const Word& w);

/// Finitely presented group, relator convention relator = 1.
/// Relators are stored verbatim; nothing reduces them implicitly.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int find_generator(const std::string& name) const;
};

/// Parses the line-oriented text format:
///   gens: a b c
///   rel: a b a^-1 b^-1
/// Blank lines and '#' comments are ignored. Throws ParseError or
/// UnknownGeneratorError.
Presentation parse_presentation(const std::string& text);

/// Canonical renderer; parse_presentation ∘ print_presentation = identity.
std::string print_presentation(const Presentation& p);

enum class RelatorShape { Wirtinger, Twisted, Neither };
enum class PresentationClass { Wirtinger, TwistedWirtinger, General };

struct WirtingerClassification {
  /// Tag per input relator. Relators that reduce to the empty word are
  /// tagged Neither and excluded from the overall verdict.
  std::vector<RelatorShape> relator_tags;
  std::vector<bool> empty_after_reduction;
  PresentationClass overall = PresentationClass::General;
};

/// Shape recognition after free + cyclic reduction: a relator counts as
/// wirtinger when some cyclic rotation of it or of its inverse reads
/// literally w⁻¹·x·w·y⁻¹ with x, y positive generators, and as twisted
/// when the final letter may also be y⁺ (the relation w⁻¹xw = y^ε with
/// ε = −1).
WirtingerClassification classify_wirtinger(const Presentation& p);

const char* to_string(RelatorShape s);
const char* to_string(PresentationClass c);

}  // namespace symq

#endif  // SYMQ_WORDS_HPP
