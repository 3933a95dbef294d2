#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flagphase/rational.hpp"

namespace flagphase::cli {

// Malformed command-line text; maps to exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "1,3" -> {1, 3}; "" -> {}. Indices stay 1-based here.
std::vector<int> parse_index_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);
// "a,b;c,d" -> {{a,b},{c,d}}
std::vector<std::vector<Rational>> parse_bundle(std::string_view text);
Integer parse_integer(std::string_view text);

std::string format_index_list(const std::vector<int>& xs);
std::string format_rational_list(const std::vector<Rational>& xs);
std::string format_bundle(const std::vector<std::vector<Rational>>& summands);

struct FlagSpec {
  std::string type;            // "A2"
  std::vector<int> parabolic;  // 1-based simple-root indices in I
  std::vector<Rational> omega; // over Delta \ I

  static FlagSpec parse(std::string_view type, std::string_view parabolic, std::string_view omega);
  std::string format() const;  // "A2|1,3|2,2"
  static FlagSpec parse_formatted(std::string_view text);
};

}  // namespace flagphase::cli
