#ifndef HALG_PARSER_HPP
#define HALG_PARSER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "halg/presentation.hpp"

namespace halg {

/// Parse failure with 1-based position information.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::uint32_t line, std::uint32_t col, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                             ": " + what),
          line_(line),
          col_(col) {}
    std::uint32_t line() const { return line_; }
    std::uint32_t col() const { return col_; }

  private:
    std::uint32_t line_, col_;
};

/// Reads the declarative presentation grammar:
///
///   # comment
///   flavor commutative | noncommutative | lie
///   prime 2147483647            (optional, before the first rel)
///   vars x, y, z
///   rel x*x + 2*y*z - z*z
///
/// Coefficients are integers or fractions a/b (b invertible mod p);
/// `[a,b]` bracket atoms are accepted in lie flavor and expand to
/// ab + ba. Commutative monomials are normalized; noncommutative
/// words keep their written order.
Presentation parse_presentation(const std::string& text);

/// Inverse of parse_presentation up to whitespace and term order;
/// lie relations are printed with bracket tokens, coefficients with
/// balanced representatives.
std::string serialize_presentation(const Presentation& p);

bool operator==(const Presentation& a, const Presentation& b);

}  // namespace halg

#endif
