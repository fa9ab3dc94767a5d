#include "phikit/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace phikit {

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += w[i];
  }
  return out;
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool is_letter_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Token {
  std::string text;
  int line;
  int column;
};

// Splits the text into rule chunks.  Rules are separated by newlines or ';',
// '#' comments run to end of line.
std::vector<std::vector<Token>> tokenize_rules(std::string_view text) {
  std::vector<std::vector<Token>> chunks;
  std::vector<Token> current;
  auto flush = [&] {
    if (!current.empty()) {
      chunks.push_back(std::move(current));
      current.clear();
    }
  };
  int line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      flush();
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++column;
      }
      continue;
    }
    if (c == ';') {
      flush();
      ++i;
      ++column;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    if (c == '-' || c == '=') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        current.push_back({std::string(text.substr(i, 2)), line, column});
        i += 2;
        column += 2;
        continue;
      }
      throw ParseError(line, column,
                       std::string("unexpected character '") + c + "'");
    }
    if (is_letter_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_letter_char(text[j])) ++j;
      current.push_back({std::string(text.substr(i, j - i)), line, column});
      column += int(j - i);
      i = j;
      continue;
    }
    throw ParseError(line, column,
                     std::string("unexpected character '") + c + "'");
  }
  flush();
  return chunks;
}

bool is_arrow(const std::string& t) { return t == "->" || t == "=>"; }

std::vector<std::pair<Symbol, Word>> parse_rule_list(std::string_view text,
                                                     std::string_view arrow) {
  auto chunks = tokenize_rules(text);
  if (chunks.empty()) throw ParseError(1, 1, "no rules");
  std::vector<std::pair<Symbol, Word>> rules;
  std::unordered_map<Symbol, int> seen;
  for (const auto& chunk : chunks) {
    const Token& head = chunk.front();
    if (is_arrow(head.text))
      throw ParseError(head.line, head.column, "rule must start with a letter");
    if (chunk.size() < 2 || !is_arrow(chunk[1].text))
      throw ParseError(head.line, head.column,
                       "expected '" + std::string(arrow) + "' after '" +
                           head.text + "'");
    if (chunk[1].text != arrow)
      throw ParseError(chunk[1].line, chunk[1].column,
                       "expected '" + std::string(arrow) + "', got '" +
                           chunk[1].text + "'");
    if (chunk.size() < 3)
      throw ParseError(chunk[1].line, chunk[1].column,
                       "empty right-hand side for '" + head.text + "'");
    Word rhs;
    for (std::size_t k = 2; k < chunk.size(); ++k) {
      if (is_arrow(chunk[k].text))
        throw ParseError(chunk[k].line, chunk[k].column,
                         "unexpected arrow in right-hand side");
      rhs.push_back(chunk[k].text);
    }
    if (auto it = seen.find(head.text); it != seen.end())
      throw ParseError(head.line, head.column,
                       "duplicate rule for '" + head.text + "'");
    seen.emplace(head.text, 1);
    rules.emplace_back(head.text, std::move(rhs));
  }
  return rules;
}

}  // namespace

Morphism::Morphism(std::vector<std::pair<Symbol, Word>> rules)
    : rules_(std::move(rules)) {
  if (rules_.empty()) throw std::invalid_argument("morphism: no rules");
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& [lhs, rhs] = rules_[i];
    if (rhs.empty())
      throw std::invalid_argument("morphism: empty image for '" + lhs + "'");
    if (!index_.emplace(lhs, i).second)
      throw std::invalid_argument("morphism: duplicate rule for '" + lhs +
                                  "'");
  }
  for (const auto& [lhs, rhs] : rules_) {
    (void)lhs;
    for (const auto& s : rhs)
      if (!index_.count(s))
        throw std::invalid_argument("morphism: no rule for letter '" + s +
                                    "'");
  }
}

const Word& Morphism::image(const Symbol& s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    throw std::invalid_argument("morphism: unknown letter '" + s + "'");
  return rules_[it->second].second;
}

bool Morphism::has_rule(const Symbol& s) const { return index_.count(s) > 0; }

std::vector<Symbol> Morphism::alphabet() const {
  std::vector<Symbol> out;
  out.reserve(rules_.size());
  for (const auto& [lhs, rhs] : rules_) {
    (void)rhs;
    out.push_back(lhs);
  }
  return out;
}

Coding::Coding(std::vector<std::pair<Symbol, Symbol>> rules)
    : rules_(std::move(rules)) {
  if (rules_.empty()) throw std::invalid_argument("coding: no rules");
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (!index_.emplace(rules_[i].first, i).second)
      throw std::invalid_argument("coding: duplicate rule for '" +
                                  rules_[i].first + "'");
  }
}

const Symbol& Coding::image(const Symbol& s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    throw std::invalid_argument("coding: unknown letter '" + s + "'");
  return rules_[it->second].second;
}

Word Coding::apply(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (const auto& s : w) out.push_back(image(s));
  return out;
}

Decoration::Decoration(std::vector<std::pair<Symbol, Word>> rules)
    : rules_(std::move(rules)) {
  if (rules_.empty()) throw std::invalid_argument("decoration: no rules");
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].second.empty())
      throw std::invalid_argument("decoration: empty image for '" +
                                  rules_[i].first + "'");
    if (!index_.emplace(rules_[i].first, i).second)
      throw std::invalid_argument("decoration: duplicate rule for '" +
                                  rules_[i].first + "'");
  }
}

const Word& Decoration::image(const Symbol& s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    throw std::invalid_argument("decoration: unknown letter '" + s + "'");
  return rules_[it->second].second;
}

Word Decoration::apply(const Word& w) const {
  Word out;
  for (const auto& s : w) {
    const Word& im = image(s);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

Morphism parse_morphism(std::string_view text) {
  auto rules = parse_rule_list(text, "->");
  return Morphism(std::move(rules));
}

Coding parse_coding(std::string_view text) {
  auto rules = parse_rule_list(text, "=>");
  std::vector<std::pair<Symbol, Symbol>> flat;
  for (auto& [lhs, rhs] : rules) {
    if (rhs.size() != 1)
      throw std::invalid_argument("coding: image of '" + lhs +
                                  "' must be a single letter");
    flat.emplace_back(std::move(lhs), std::move(rhs[0]));
  }
  return Coding(std::move(flat));
}

Decoration parse_decoration(std::string_view text) {
  return Decoration(parse_rule_list(text, "=>"));
}

Word apply(const Morphism& m, const Word& w) {
  Word out;
  for (const auto& s : w) {
    const Word& im = m.image(s);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

bool is_prolongable(const Morphism& m, const Symbol& seed) {
  if (!m.has_rule(seed)) return false;
  const Word& im = m.image(seed);
  return im.size() >= 2 && im[0] == seed;
}

Word fixed_point(const Morphism& m, const Symbol& seed, std::size_t len) {
  if (len == 0) return {};
  const Word& first = m.image(seed);
  if (first[0] != seed)
    throw std::domain_error("fixed_point: morphism is not prolongable at '" +
                            seed + "'");
  Word x;
  x.reserve(len);
  for (const auto& s : first) {
    x.push_back(s);
    if (x.size() == len) return x;
  }
  std::size_t k = 1;
  while (x.size() < len) {
    if (k >= x.size())
      throw std::domain_error("fixed_point: generation stalls at length " +
                              std::to_string(x.size()));
    const Word& im = m.image(x[k]);
    ++k;
    for (const auto& s : im) {
      x.push_back(s);
      if (x.size() == len) return x;
    }
  }
  return x;
}

Morphism fibonacci_morphism(const Symbol& a, const Symbol& b) {
  return Morphism({{a, {a, b}}, {b, {a}}});
}

Morphism g_morphism(const Symbol& a, const Symbol& b) {
  return Morphism({{a, {b, a, a}}, {b, {b, a}}});
}

Word fibonacci_word(const Symbol& a, const Symbol& b, std::size_t len) {
  return fixed_point(fibonacci_morphism(a, b), a, len);
}

Word g_word(const Symbol& a, const Symbol& b, std::size_t len) {
  return fixed_point(g_morphism(a, b), b, len);
}

std::size_t factor_complexity(const Word& prefix, std::size_t n) {
  if (n == 0) return prefix.empty() ? 0 : 1;
  if (prefix.size() < n) return 0;
  std::unordered_map<std::string_view, int> ids;
  std::vector<int> codes;
  codes.reserve(prefix.size());
  for (const auto& s : prefix) {
    auto [it, inserted] = ids.try_emplace(std::string_view(s), int(ids.size()));
    (void)inserted;
    codes.push_back(it->second);
  }
  // Rolling hash to bucket windows; exact comparison inside buckets.
  const std::uint64_t kBase = 1000003319ULL;
  std::vector<std::uint64_t> h(codes.size() + 1, 0);
  for (std::size_t i = 0; i < codes.size(); ++i)
    h[i + 1] = h[i] * kBase + std::uint64_t(codes[i] + 1);
  std::uint64_t pw = 1;
  for (std::size_t i = 0; i < n; ++i) pw *= kBase;

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::size_t distinct = 0;
  for (std::size_t i = 0; i + n <= codes.size(); ++i) {
    std::uint64_t wh = h[i + n] - h[i] * pw;
    auto& reps = buckets[wh];
    bool found = false;
    for (std::size_t start : reps) {
      if (std::equal(codes.begin() + start, codes.begin() + start + n,
                     codes.begin() + i)) {
        found = true;
        break;
      }
    }
    if (!found) {
      reps.push_back(i);
      ++distinct;
    }
  }
  return distinct;
}

std::vector<std::size_t> occurrences(const Word& prefix, const Word& w) {
  if (w.empty()) throw std::invalid_argument("occurrences: empty factor");
  std::vector<std::size_t> out;
  if (prefix.size() < w.size()) return out;
  for (std::size_t i = 0; i + w.size() <= prefix.size(); ++i)
    if (std::equal(w.begin(), w.end(), prefix.begin() + i)) out.push_back(i);
  return out;
}

ReturnWords return_words(const Word& prefix, const Word& w) {
  auto occ = occurrences(prefix, w);
  if (occ.size() < 2)
    throw std::domain_error("return_words: factor occurs fewer than twice");
  ReturnWords out;
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    Word r(prefix.begin() + occ[i], prefix.begin() + occ[i + 1]);
    std::size_t idx = 0;
    for (; idx < out.words.size(); ++idx)
      if (out.words[idx] == r) break;
    if (idx == out.words.size()) out.words.push_back(std::move(r));
    out.sequence.push_back(idx);
  }
  return out;
}

Morphism derived_morphism(const Morphism& m, const Symbol& seed,
                          const Word& factor, std::size_t prefix_len,
                          const std::function<Symbol(const Word&)>& name) {
  Word x = fixed_point(m, seed, prefix_len);
  auto occ = occurrences(x, factor);
  if (occ.size() < 3)
    throw std::domain_error("derived_morphism: prefix holds too few returns");
  ReturnWords rw = return_words(x, factor);

  // Where each occurrence lands under m: position p -> |m(x[0..p-1])|.
  std::vector<std::size_t> img_start(occ.size());
  {
    std::size_t cum = 0, oi = 0;
    for (std::size_t i = 0; i < x.size() && oi < occ.size(); ++i) {
      if (occ[oi] == i) img_start[oi] = cum, ++oi;
      cum += m.image(x[i]).size();
    }
  }

  // Since m(x) = x, the image of a return block is tiled by return blocks;
  // read the tiling off the occurrence list.
  std::vector<std::optional<std::vector<std::size_t>>> images(rw.words.size());
  for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
    std::size_t lo = img_start[i], hi = img_start[i + 1];
    if (hi > occ.back()) break;  // image leaves the analyzed prefix
    auto it0 = std::lower_bound(occ.begin(), occ.end(), lo);
    auto it1 = std::lower_bound(occ.begin(), occ.end(), hi);
    if (*it0 != lo)
      throw std::domain_error(
          "derived_morphism: image block does not start at an occurrence");
    if (*it1 != hi)
      throw std::domain_error(
          "derived_morphism: image block does not end at an occurrence");
    std::size_t a = std::size_t(it0 - occ.begin());
    std::size_t b = std::size_t(it1 - occ.begin());
    std::vector<std::size_t> img(rw.sequence.begin() + a,
                                 rw.sequence.begin() + b);
    auto& slot = images[rw.sequence[i]];
    if (!slot) {
      slot = std::move(img);
    } else if (*slot != img) {
      throw std::domain_error(
          "derived_morphism: inconsistent image for a return word");
    }
  }

  std::vector<Symbol> names;
  names.reserve(rw.words.size());
  for (const auto& w : rw.words) names.push_back(name(w));
  std::vector<std::pair<Symbol, Word>> rules;
  for (std::size_t c = 0; c < rw.words.size(); ++c) {
    if (!images[c])
      throw std::domain_error(
          "derived_morphism: prefix too short to close the rule set");
    Word rhs;
    for (std::size_t idx : *images[c]) rhs.push_back(names[idx]);
    rules.emplace_back(names[c], std::move(rhs));
  }
  return Morphism(std::move(rules));
}

MorphicCover decoration_to_morphic(const Morphism& m, const Symbol& seed,
                                   const Decoration& d,
                                   std::size_t verify_len) {
  // Split letters: one per decoration position, in rule order.
  struct Split {
    Symbol base;
    std::size_t pos;
    Symbol name;
    Symbol out;  // coding value
  };
  std::vector<Split> splits;
  std::unordered_map<Symbol, std::size_t> first_split;  // base -> index
  std::unordered_map<Symbol, std::size_t> width;
  for (const auto& [letter, image] : m.rules()) {
    (void)image;
    const Word& deco = d.image(letter);
    first_split.emplace(letter, splits.size());
    width.emplace(letter, deco.size());
    for (std::size_t p = 0; p < deco.size(); ++p)
      splits.push_back({letter, p, letter + "_" + std::to_string(p + 1),
                        deco[p]});
  }

  auto block_of = [&](const Symbol& letter) {
    std::vector<std::size_t> ids;
    std::size_t base = first_split.at(letter);
    for (std::size_t p = 0; p < width.at(letter); ++p) ids.push_back(base + p);
    return ids;
  };

  // Distribute each block image over the block's letters: trailing letters
  // take whole blocks from the end, the first letter absorbs what remains;
  // when there are more letters than blocks the leading block is split with
  // everything beyond single letters pushed into the first one.
  std::vector<std::vector<std::size_t>> images(splits.size());
  for (const auto& [letter, image] : m.rules()) {
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& u : image) blocks.push_back(block_of(u));
    auto letters = block_of(letter);
    std::size_t k = letters.size(), t = blocks.size();
    std::vector<std::vector<std::size_t>> cut(k);
    if (t >= k) {
      for (std::size_t j = 1; j < k; ++j) cut[k - j] = blocks[t - j];
      for (std::size_t j = 0; j + k <= t; ++j)
        cut[0].insert(cut[0].end(), blocks[j].begin(), blocks[j].end());
    } else {
      for (std::size_t j = 1; j < t; ++j) cut[k - t + j] = blocks[j];
      const auto& head = blocks[0];
      std::size_t shared = k - t + 1;  // letters splitting the head block
      if (head.size() < shared)
        throw std::domain_error(
            "decoration_to_morphic: block image too short to distribute");
      std::size_t lead = head.size() - (shared - 1);
      cut[0].assign(head.begin(), head.begin() + lead);
      for (std::size_t j = 1; j < shared; ++j)
        cut[j].assign(head.begin() + lead + j - 1, head.begin() + lead + j);
    }
    for (std::size_t j = 0; j < k; ++j) images[letters[j]] = std::move(cut[j]);
  }

  // Greedy merge, in rule order, of letters with identical coding values and
  // identical images up to the merge itself; repeat until stable.
  std::vector<std::size_t> rep(splits.size());
  for (std::size_t i = 0; i < splits.size(); ++i) rep[i] = i;
  auto find = [&](std::size_t i) {
    while (rep[i] != i) i = rep[i] = rep[rep[i]];
    return i;
  };
  auto canon = [&](const std::vector<std::size_t>& img) {
    std::vector<std::size_t> out;
    out.reserve(img.size());
    for (std::size_t v : img) out.push_back(find(v));
    return out;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < splits.size(); ++i) {
      if (find(i) != i) continue;
      for (std::size_t j = i + 1; j < splits.size(); ++j) {
        if (find(j) != j) continue;
        if (splits[i].out != splits[j].out) continue;
        if (canon(images[i]) != canon(images[j])) continue;
        rep[j] = i;
        changed = true;
      }
    }
  }

  std::vector<std::pair<Symbol, Word>> rules;
  std::vector<std::pair<Symbol, Symbol>> coding_rules;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (find(i) != i) continue;
    Word rhs;
    for (std::size_t v : canon(images[i])) rhs.push_back(splits[v].name);
    rules.emplace_back(splits[i].name, std::move(rhs));
    coding_rules.emplace_back(splits[i].name, splits[i].out);
  }
  MorphicCover cover{Morphism(std::move(rules)), Coding(std::move(coding_rules)),
                     splits[find(first_split.at(seed))].name};

  if (verify_len > 0) {
    std::size_t base_len = verify_len;  // decoration only lengthens words
    Word decorated = d.apply(fixed_point(m, seed, base_len));
    if (decorated.size() > verify_len) decorated.resize(verify_len);
    Word lifted = cover.coding.apply(
        fixed_point(cover.morphism, cover.seed, decorated.size()));
    if (decorated != lifted)
      throw std::logic_error(
          "decoration_to_morphic: round trip mismatch within verify length");
  }
  return cover;
}

bool morphisms_isomorphic(const Morphism& m1, const Symbol& seed1,
                          const Morphism& m2, const Symbol& seed2) {
  if (m1.rules().size() != m2.rules().size()) return false;
  std::unordered_map<Symbol, Symbol> fwd, bwd;
  std::vector<Symbol> stack{seed1};
  fwd[seed1] = seed2;
  bwd[seed2] = seed1;
  while (!stack.empty()) {
    Symbol s = stack.back();
    stack.pop_back();
    if (!m1.has_rule(s) || !m2.has_rule(fwd[s])) return false;
    const Word& im1 = m1.image(s);
    const Word& im2 = m2.image(fwd[s]);
    if (im1.size() != im2.size()) return false;
    for (std::size_t i = 0; i < im1.size(); ++i) {
      auto it = fwd.find(im1[i]);
      if (it != fwd.end()) {
        if (it->second != im2[i]) return false;
        continue;
      }
      if (bwd.count(im2[i])) return false;
      fwd[im1[i]] = im2[i];
      bwd[im2[i]] = im1[i];
      stack.push_back(im1[i]);
    }
  }
  // Only full-alphabet matches count.
  return fwd.size() == m1.rules().size();
}

}  // namespace phikit
