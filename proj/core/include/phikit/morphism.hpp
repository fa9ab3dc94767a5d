#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace phikit {

// Letters are free-form tokens over [A-Za-z0-9_'] so alphabets like
// {1, 2, 3, 3', 4} need no escaping.
using Symbol = std::string;
using Word = std::vector<Symbol>;

std::string to_string(const Word& w);  // letters joined by single spaces

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A substitution on a finite alphabet.  Rules keep their declaration order,
// which downstream algorithms use as the deterministic iteration order.
class Morphism {
 public:
  Morphism() = default;
  explicit Morphism(std::vector<std::pair<Symbol, Word>> rules);

  const Word& image(const Symbol& s) const;
  bool has_rule(const Symbol& s) const;
  const std::vector<std::pair<Symbol, Word>>& rules() const { return rules_; }
  std::vector<Symbol> alphabet() const;  // rule order

 private:
  std::vector<std::pair<Symbol, Word>> rules_;
  std::unordered_map<Symbol, std::size_t> index_;
};

// Letter-to-letter map.
class Coding {
 public:
  Coding() = default;
  explicit Coding(std::vector<std::pair<Symbol, Symbol>> rules);

  const Symbol& image(const Symbol& s) const;
  Word apply(const Word& w) const;
  const std::vector<std::pair<Symbol, Symbol>>& rules() const { return rules_; }

 private:
  std::vector<std::pair<Symbol, Symbol>> rules_;
  std::unordered_map<Symbol, std::size_t> index_;
};

// Letter-to-word map; images live in an output alphabet and need no rules of
// their own.
class Decoration {
 public:
  Decoration() = default;
  explicit Decoration(std::vector<std::pair<Symbol, Word>> rules);

  const Word& image(const Symbol& s) const;
  Word apply(const Word& w) const;
  const std::vector<std::pair<Symbol, Word>>& rules() const { return rules_; }

 private:
  std::vector<std::pair<Symbol, Word>> rules_;
  std::unordered_map<Symbol, std::size_t> index_;
};

// Rule text: one rule per line or ';'-separated, '#' starts a comment,
// tokens are whitespace-separated: LETTER -> LETTER+ .
// Codings and decorations use => as the arrow.
Morphism parse_morphism(std::string_view text);
Coding parse_coding(std::string_view text);
Decoration parse_decoration(std::string_view text);

Word apply(const Morphism& m, const Word& w);

// m(s) starts with s and has length >= 2.
bool is_prolongable(const Morphism& m, const Symbol& seed);

// Prefix of length len of the fixed point of m starting from seed.
// Generated incrementally; throws if the morphism stops producing letters
// before len is reached.
Word fixed_point(const Morphism& m, const Symbol& seed, std::size_t len);

// Builders for the two pervasive two-letter substitutions.
Morphism fibonacci_morphism(const Symbol& a, const Symbol& b);  // a->ab, b->a
Morphism g_morphism(const Symbol& a, const Symbol& b);          // a->baa, b->ba

// Fixed point of a->ab, b->a from a.
Word fibonacci_word(const Symbol& a, const Symbol& b, std::size_t len);
// Fixed point of a->baa, b->ba from b; equals b followed by the Fibonacci
// word on {a,b}.
Word g_word(const Symbol& a, const Symbol& b, std::size_t len);

// Number of distinct length-n factors of the given prefix.
std::size_t factor_complexity(const Word& prefix, std::size_t n);

// Start positions of every (possibly overlapping) occurrence of w.
std::vector<std::size_t> occurrences(const Word& prefix, const Word& w);

struct ReturnWords {
  std::vector<Word> words;            // distinct, in order of first appearance
  std::vector<std::size_t> sequence;  // indices into words, one per return
};

// Return words of w: the factors from one occurrence start to the next.
// The final occurrence starts an incomplete return and is excluded.
// Throws if w occurs fewer than twice.
ReturnWords return_words(const Word& prefix, const Word& w);

// The induced substitution on the return words of `factor` in the fixed
// point of m: the m-image of each return block is read off as a sequence of
// return blocks, positionally, inside a fixed-point prefix of length
// prefix_len.  `name` labels each distinct return word with its letter.
Morphism derived_morphism(const Morphism& m, const Symbol& seed,
                          const Word& factor, std::size_t prefix_len,
                          const std::function<Symbol(const Word&)>& name);

struct MorphicCover {
  Morphism morphism;
  Coding coding;
  Symbol seed;
};

// Rewrites the decorated fixed point d(x_m) as coding(fixed point of a new
// morphism): splits each letter into one letter per decoration position,
// distributes block images (whole trailing blocks first), then greedily
// merges letters with identical images and identical coding values, in rule
// order.  If verify_len > 0 the round trip is checked letterwise up to that
// length.
MorphicCover decoration_to_morphic(const Morphism& m, const Symbol& seed,
                                   const Decoration& d,
                                   std::size_t verify_len = 0);

// True iff a bijective renaming of letters carries (m1, seed1) to (m2,
// seed2), rule for rule.
bool morphisms_isomorphic(const Morphism& m1, const Symbol& seed1,
                          const Morphism& m2, const Symbol& seed2);

}  // namespace phikit
