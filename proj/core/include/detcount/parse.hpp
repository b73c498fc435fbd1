#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "detcount/poly.hpp"

namespace detcount {

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& msg);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct ParsedPoly {
  IntPoly poly;
  VarStyle style = VarStyle::X;
};

/// Parses the polynomial text grammar: variables x0..xN or t1..tN, integer
/// coefficients, + - * ^ and parentheses. Without `num_vars` the ring is as
/// small as the variables used allow.
ParsedPoly parse_poly(std::string_view text,
                      std::optional<std::size_t> num_vars = std::nullopt);

}  // namespace detcount
