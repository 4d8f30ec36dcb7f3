#include "asrqe/text_norm.hpp"

#include <algorithm>
#include <iterator>

#include "asrqe/utf8.hpp"

namespace asrqe {
namespace {

#include "unicode_tables.inc"

bool in_ranges(const CpRange* table, size_t n, char32_t cp) {
  const CpRange* end = table + n;
  auto it = std::upper_bound(table, end, cp, [](char32_t v, const CpRange& r) { return v < r.lo; });
  return it != table && cp <= (it - 1)->hi;
}

bool is_punct(char32_t cp) {
  return in_ranges(kPunctRanges, std::size(kPunctRanges), cp);
}

bool is_space(char32_t cp) {
  return in_ranges(kSpaceRanges, std::size(kSpaceRanges), cp);
}

void append_lower(std::string& out, char32_t cp) {
  const LowerPair* end = kLowerMap + std::size(kLowerMap);
  auto it = std::lower_bound(kLowerMap, end, cp,
                             [](const LowerPair& p, char32_t v) { return p.cp < v; });
  if (it != end && it->cp == cp) {
    utf8::append(out, it->lower);
    return;
  }
  for (const auto& exp : kLowerExpansions) {
    if (exp.cp == cp) {
      for (char32_t e : exp.out) {
        if (e != 0) utf8::append(out, e);
      }
      return;
    }
  }
  utf8::append(out, cp);
}

}  // namespace

std::string NormalizedText::joined() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

NormalizedText normalize(std::string_view text) {
  NormalizedText result;
  std::string word;
  size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::decode_next(text, pos);
    if (is_space(cp)) {
      if (!word.empty()) {
        result.tokens.push_back(std::move(word));
        word.clear();
      }
    } else if (!is_punct(cp)) {
      append_lower(word, cp);
    }
  }
  if (!word.empty()) result.tokens.push_back(std::move(word));
  return result;
}

}  // namespace asrqe
