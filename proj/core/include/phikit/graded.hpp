#pragma once

// Morphisms on the infinite alphabet Z x T for a finite tag set T.  Rules are
// tag-indexed and grade-equivariant: the image of (j, t) is the image of
// (0, t) with every grade shifted by j.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace phikit {

struct GradedSymbol {
  std::int64_t grade = 0;
  int tag = 0;
  friend bool operator==(const GradedSymbol&, const GradedSymbol&) = default;
};

struct GradedLetter {
  std::int64_t grade_shift = 0;
  int tag = 0;
};

class GradedMorphism {
 public:
  // tags: the tag names, in order; rules[t]: image of (0, t).
  GradedMorphism(std::vector<std::string> tags,
                 std::vector<std::vector<GradedLetter>> rules);

  std::vector<GradedSymbol> image(const GradedSymbol& s) const;
  std::size_t tag_count() const { return tags_.size(); }
  const std::string& tag_name(int tag) const;
  const std::vector<GradedLetter>& rule(int tag) const;

 private:
  std::vector<std::string> tags_;
  std::vector<std::vector<GradedLetter>> rules_;
};

// Prefix of the fixed point from `seed`; the seed's rule must begin with
// (0, seed.tag).
std::vector<GradedSymbol> graded_fixed_point(const GradedMorphism& m,
                                             const GradedSymbol& seed,
                                             std::size_t len);

// Output map: symbol (j, t) |-> j + offset(t).
class GradedOutputMap {
 public:
  explicit GradedOutputMap(std::vector<std::int64_t> offsets);
  std::int64_t value(const GradedSymbol& s) const;

 private:
  std::vector<std::int64_t> offsets_;
};

std::vector<std::int64_t> graded_output(const GradedMorphism& m,
                                        const GradedSymbol& seed,
                                        const GradedOutputMap& out,
                                        std::size_t len);

// Decoration: symbol (j, t) |-> the word (j + o) for o in offsets(t).
class GradedDecoration {
 public:
  explicit GradedDecoration(std::vector<std::vector<std::int64_t>> offsets);
  std::vector<std::int64_t> values(const GradedSymbol& s) const;

 private:
  std::vector<std::vector<std::int64_t>> offsets_;
};

// First `len` values of the decorated fixed point.
std::vector<std::int64_t> graded_decorated_output(const GradedMorphism& m,
                                                  const GradedSymbol& seed,
                                                  const GradedDecoration& d,
                                                  std::size_t len);

// The tag sequence of the fixed point, as indices into the tag set.
std::vector<int> graded_tag_word(const GradedMorphism& m,
                                 const GradedSymbol& seed, std::size_t len);

std::string to_string(const GradedMorphism& m, const GradedSymbol& s);

}  // namespace phikit
