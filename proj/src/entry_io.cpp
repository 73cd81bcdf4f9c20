#include "silab/entry_io.hpp"

#include <cctype>
#include <vector>

#include <json.hpp>

namespace silab {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }

  int optional_sign() {
    char c = peek();
    if (c == '+' || c == '-') {
      take();
      return c == '-' ? -1 : 1;
    }
    return 1;
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (digits.empty()) throw ParseError("expected digits", start);
    return mpz_class(digits, 10);  // base 0 would reject leading zeros as bad octal
  }

  // INT("/"INT)?
  Rational number() {
    mpz_class num = integer();
    if (peek() == '/') {
      take();
      size_t den_pos = pos;
      skip_ws();
      den_pos = pos;
      mpz_class den = integer();
      if (den == 0) throw ParseError("zero denominator", den_pos);
      return Rational(num, den);
    }
    return Rational(num, mpz_class(1));
  }
};

// One signed term: either a real rational or a rational multiple of i.
struct Term {
  Rational value;
  bool imaginary;
};

Term parse_term(Scanner& sc) {
  int sign = sc.optional_sign();
  Term t{Rational(0), false};
  if (sc.peek() == 'i') {
    sc.take();
    t.value = Rational(sign);
    t.imaginary = true;
    return t;
  }
  t.value = sc.number();
  if (sign < 0) t.value = -t.value;
  if (sc.peek() == 'i') {
    sc.take();
    t.imaginary = true;
  }
  return t;
}

}  // namespace

GaussianRational parse_entry(const std::string& text) {
  Scanner sc{text};
  if (sc.eof()) throw ParseError("empty entry", 0);

  Term first = parse_term(sc);
  Rational re(0), im(0);
  (first.imaginary ? im : re) = first.value;

  if (!sc.eof()) {
    size_t second_pos = sc.pos;
    char c = sc.peek();
    if (c != '+' && c != '-') throw ParseError("unexpected character", sc.pos);
    Term second = parse_term(sc);
    if (!second.imaginary) throw ParseError("second term must be imaginary", second_pos);
    if (first.imaginary) throw ParseError("duplicate imaginary term", second_pos);
    im = second.value;
    if (!sc.eof()) throw ParseError("trailing characters", sc.pos);
  }
  return {re, im};
}

Rational parse_rational(const std::string& text) {
  Scanner sc{text};
  if (sc.eof()) throw ParseError("empty value", 0);
  int sign = sc.optional_sign();
  Rational v = sc.number();
  if (sign < 0) v = -v;
  if (!sc.eof()) throw ParseError("trailing characters", sc.pos);
  return v;
}

MatrixDocument parse_matrix_document(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
    throw ParseError("matrix document requires a non-empty \"rows\" array", 0);

  std::optional<std::string> name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string", 0);
    name = j["name"].get<std::string>();
  }

  std::vector<GaussianRational> entries;
  const auto& rows = j["rows"];
  size_t cols = 0;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].empty())
      throw ParseError("row " + std::to_string(r) + " must be a non-empty array", 0);
    if (r == 0)
      cols = rows[r].size();
    else if (rows[r].size() != cols)
      throw ParseError("row " + std::to_string(r) + " has inconsistent length", 0);
    for (size_t c = 0; c < rows[r].size(); ++c) {
      const auto& cell = rows[r][c];
      std::string text;
      if (cell.is_string())
        text = cell.get<std::string>();
      else if (cell.is_number_integer())
        text = std::to_string(cell.get<long long>());
      else
        throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") must be a string or integer",
                         0);
      try {
        entries.push_back(parse_entry(text));
      } catch (const ParseError& e) {
        throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") \"" + text +
                             "\": " + e.raw,
                         e.pos);
      }
    }
  }
  return {name, ExactMatrix(static_cast<int>(rows.size()), static_cast<int>(cols), entries)};
}

std::string matrix_document_json(const MatrixDocument& doc) {
  ordered_json j;
  if (doc.name) j["name"] = *doc.name;
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < doc.matrix.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < doc.matrix.cols(); ++c) row.push_back(doc.matrix.at(r, c).str());
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump();
}

}  // namespace silab
