#ifndef AAK_ERRORS_HPP
#define AAK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aak {

// Malformed input text (bracketed trees, config files, JSONL records).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Violated precondition or API contract (caller bug, not bad data).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Tensor shape mismatch; message names both shapes.
class DimError : public std::invalid_argument {
 public:
  explicit DimError(const std::string& what) : std::invalid_argument(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aak

#endif  // AAK_ERRORS_HPP
