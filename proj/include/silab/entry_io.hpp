#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "silab/matrix.hpp"

namespace silab {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        raw(message),
        pos(position) {}
  std::string raw;  // message without the position suffix
  size_t pos;
};

/// Parses one matrix entry. Grammar (whitespace-insensitive):
///   SIGN? INT("/"INT)? (("+"|"-") INT("/"INT)? "i")?
/// | SIGN? INT("/"INT)? "i"
/// | SIGN? "i"
/// Examples: "3/5", "4/5+3/5i", "-i", "2i", "1-i".
GaussianRational parse_entry(const std::string& text);

/// Parses a plain rational: SIGN? INT("/"INT)?.
Rational parse_rational(const std::string& text);

/// print_entry is GaussianRational::str(); parse_entry(print_entry(z)) == z.
inline std::string print_entry(const GaussianRational& z) { return z.str(); }

/// A named matrix as read from the CLI: {"name": str?, "rows": [[entry,...],...]}.
struct MatrixDocument {
  std::optional<std::string> name;
  ExactMatrix matrix;
};

MatrixDocument parse_matrix_document(const std::string& json_text);
std::string matrix_document_json(const MatrixDocument& doc);

}  // namespace silab
