#pragma once

#include "commprob/group.hpp"

#include <stdexcept>

namespace commprob {

// Error from the descriptor mini-language, carrying the byte offset of the
// failure and what was expected there.
class DescriptorError : public std::invalid_argument {
 public:
  DescriptorError(std::size_t offset, const std::string& expected, const std::string& text);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (case-sensitive, no whitespace, left-associative):
//   expr   := atom { 'x' atom | "/Z" | "/G'" }*
//   atom   := 'C' int | 'D' int | 'S' int | 'E' '(' int ',' int ')'
// 'x' forms a direct product, "/Z" quotients by the centre, "/G'" by the
// commutator subgroup. Examples: "D4", "D3xD3", "E(2,2)xC3", "D4/Z".
Group parse_descriptor(const std::string& text, const Limits& lim = {});

}  // namespace commprob
