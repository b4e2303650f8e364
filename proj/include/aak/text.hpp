#ifndef AAK_TEXT_HPP
#define AAK_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace aak {

// Locale-independent lowercase of UTF-8 text. Covers every codepoint with a
// single-codepoint lowercase mapping in the Unicode database; everything else
// (including malformed byte sequences) passes through unchanged.
std::string lowercase(std::string_view utf8);

// True when every character of the token is in `.,;:!?'"`-()[]
bool is_punctuation_token(std::string_view token);

std::vector<std::string> split_whitespace(std::string_view text);

std::string join_tokens(const std::vector<std::string>& tokens);

}  // namespace aak

#endif  // AAK_TEXT_HPP
