#include "aak/text.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace aak {

namespace {

struct LowerPair {
  std::uint32_t upper;
  std::uint32_t lower;
};

#include "unicode_lowercase.inc"

std::uint32_t lower_codepoint(std::uint32_t cp) {
  const LowerPair* begin = kLowerTable;
  const LowerPair* end = kLowerTable + sizeof(kLowerTable) / sizeof(LowerPair);
  const LowerPair* it = std::lower_bound(
      begin, end, cp,
      [](const LowerPair& p, std::uint32_t c) { return p.upper < c; });
  if (it != end && it->upper == cp) return it->lower;
  return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::string lowercase(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  const std::size_t n = utf8.size();
  while (i < n) {
    unsigned char b0 = static_cast<unsigned char>(utf8[i]);
    if (b0 < 0x80) {
      char c = static_cast<char>(b0);
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      out.push_back(c);
      ++i;
      continue;
    }
    // Decode one multi-byte sequence; invalid bytes copied verbatim.
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    }
    bool valid = len > 0 && i + len <= n;
    for (std::size_t k = 1; valid && k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(utf8[i + k]);
      if ((bk & 0xC0) != 0x80) {
        valid = false;
      } else {
        cp = (cp << 6) | (bk & 0x3F);
      }
    }
    if (!valid) {
      out.push_back(static_cast<char>(b0));
      ++i;
      continue;
    }
    append_utf8(out, lower_codepoint(cp));
    i += len;
  }
  return out;
}

bool is_punctuation_token(std::string_view token) {
  if (token.empty()) return false;
  static const std::string_view kPunct = ".,;:!?'\"`-()[]";
  for (char c : token) {
    if (kPunct.find(c) == std::string_view::npos) return false;
  }
  return true;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace aak
