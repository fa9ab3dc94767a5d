#include "phikit/graded.hpp"

namespace phikit {

GradedMorphism::GradedMorphism(std::vector<std::string> tags,
                               std::vector<std::vector<GradedLetter>> rules)
    : tags_(std::move(tags)), rules_(std::move(rules)) {
  if (tags_.empty()) throw std::invalid_argument("graded morphism: no tags");
  if (rules_.size() != tags_.size())
    throw std::invalid_argument("graded morphism: one rule per tag required");
  for (const auto& rule : rules_) {
    if (rule.empty())
      throw std::invalid_argument("graded morphism: empty image");
    for (const auto& letter : rule)
      if (letter.tag < 0 || std::size_t(letter.tag) >= tags_.size())
        throw std::invalid_argument("graded morphism: tag out of range");
  }
}

std::vector<GradedSymbol> GradedMorphism::image(const GradedSymbol& s) const {
  const auto& rule = this->rule(s.tag);
  std::vector<GradedSymbol> out;
  out.reserve(rule.size());
  for (const auto& letter : rule)
    out.push_back({s.grade + letter.grade_shift, letter.tag});
  return out;
}

const std::string& GradedMorphism::tag_name(int tag) const {
  if (tag < 0 || std::size_t(tag) >= tags_.size())
    throw std::invalid_argument("graded morphism: tag out of range");
  return tags_[std::size_t(tag)];
}

const std::vector<GradedLetter>& GradedMorphism::rule(int tag) const {
  if (tag < 0 || std::size_t(tag) >= rules_.size())
    throw std::invalid_argument("graded morphism: tag out of range");
  return rules_[std::size_t(tag)];
}

std::vector<GradedSymbol> graded_fixed_point(const GradedMorphism& m,
                                             const GradedSymbol& seed,
                                             std::size_t len) {
  if (len == 0) return {};
  auto first = m.image(seed);
  if (!(first[0] == seed))
    throw std::domain_error(
        "graded_fixed_point: morphism is not prolongable at the seed");
  std::vector<GradedSymbol> x;
  x.reserve(len);
  for (const auto& s : first) {
    x.push_back(s);
    if (x.size() == len) return x;
  }
  std::size_t k = 1;
  while (x.size() < len) {
    if (k >= x.size())
      throw std::domain_error("graded_fixed_point: generation stalls");
    auto im = m.image(x[k]);
    ++k;
    for (const auto& s : im) {
      x.push_back(s);
      if (x.size() == len) return x;
    }
  }
  return x;
}

GradedOutputMap::GradedOutputMap(std::vector<std::int64_t> offsets)
    : offsets_(std::move(offsets)) {
  if (offsets_.empty())
    throw std::invalid_argument("graded output map: no offsets");
}

std::int64_t GradedOutputMap::value(const GradedSymbol& s) const {
  if (s.tag < 0 || std::size_t(s.tag) >= offsets_.size())
    throw std::invalid_argument("graded output map: tag out of range");
  return s.grade + offsets_[std::size_t(s.tag)];
}

std::vector<std::int64_t> graded_output(const GradedMorphism& m,
                                        const GradedSymbol& seed,
                                        const GradedOutputMap& out,
                                        std::size_t len) {
  auto x = graded_fixed_point(m, seed, len);
  std::vector<std::int64_t> values;
  values.reserve(x.size());
  for (const auto& s : x) values.push_back(out.value(s));
  return values;
}

GradedDecoration::GradedDecoration(
    std::vector<std::vector<std::int64_t>> offsets)
    : offsets_(std::move(offsets)) {
  if (offsets_.empty())
    throw std::invalid_argument("graded decoration: no offsets");
  for (const auto& os : offsets_)
    if (os.empty())
      throw std::invalid_argument("graded decoration: empty offset list");
}

std::vector<std::int64_t> GradedDecoration::values(
    const GradedSymbol& s) const {
  if (s.tag < 0 || std::size_t(s.tag) >= offsets_.size())
    throw std::invalid_argument("graded decoration: tag out of range");
  std::vector<std::int64_t> out;
  out.reserve(offsets_[std::size_t(s.tag)].size());
  for (std::int64_t o : offsets_[std::size_t(s.tag)])
    out.push_back(s.grade + o);
  return out;
}

std::vector<std::int64_t> graded_decorated_output(const GradedMorphism& m,
                                                  const GradedSymbol& seed,
                                                  const GradedDecoration& d,
                                                  std::size_t len) {
  if (len == 0) return {};
  // Generate fixed-point symbols lazily until the decorated stream is long
  // enough; each symbol contributes at least one value.
  std::vector<GradedSymbol> x = m.image(seed);
  if (!(x[0] == seed))
    throw std::domain_error(
        "graded_decorated_output: morphism is not prolongable at the seed");
  std::vector<std::int64_t> values;
  values.reserve(len);
  std::size_t emitted = 0;  // symbols whose decoration has been flushed
  std::size_t k = 1;        // next symbol to expand
  while (values.size() < len) {
    while (emitted < x.size() && values.size() < len) {
      for (std::int64_t v : d.values(x[emitted])) {
        values.push_back(v);
        if (values.size() == len) break;
      }
      ++emitted;
    }
    if (values.size() == len) break;
    if (k >= x.size())
      throw std::domain_error("graded_decorated_output: generation stalls");
    auto im = m.image(x[k]);
    ++k;
    x.insert(x.end(), im.begin(), im.end());
  }
  return values;
}

std::vector<int> graded_tag_word(const GradedMorphism& m,
                                 const GradedSymbol& seed, std::size_t len) {
  auto x = graded_fixed_point(m, seed, len);
  std::vector<int> tags;
  tags.reserve(x.size());
  for (const auto& s : x) tags.push_back(s.tag);
  return tags;
}

std::string to_string(const GradedMorphism& m, const GradedSymbol& s) {
  return std::to_string(s.grade) + ":" + m.tag_name(s.tag);
}

}  // namespace phikit
