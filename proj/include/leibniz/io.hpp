#ifndef LEIBNIZ_IO_HPP
#define LEIBNIZ_IO_HPP

// Interchange formats.
//
//   algebra:      {"dim": 8, "basis": ["y1", ...],
//                  "products": [{"left": "y1", "right": "y1", "result": [["y2", "1"]]}, ...]}
//   weights:      {"weights": {"y1": 1, ...}}
//   certificate:  {"source": <algebra>, "target": <algebra>, "map": [[scalar, ...], ...]}
//
// Coefficients are strings in the scalar grammar. Omitted products are zero.

#include <stdexcept>
#include <string>
#include <string_view>

#include "leibniz/algebra.hpp"

namespace leibniz {

struct WeightAssignment;
struct IsoCertificate;

/// Input that cannot be read; the message names the source, line and token.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& source, int line, const std::string& token, const std::string& why);

  const std::string& source() const noexcept { return source_; }
  int line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::string source_;
  int line_;
  std::string token_;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

Algebra parse_algebra(std::string_view text, const std::string& source = "<string>");
Algebra load_algebra(const std::string& path);
/// Canonical rendering: products ordered by (left, right), zero terms omitted.
std::string algebra_to_json(const Algebra& a);

WeightAssignment parse_weights(std::string_view text, const Algebra& a, const std::string& source = "<string>");
WeightAssignment load_weights(const std::string& path, const Algebra& a);
std::string weights_to_json(const Algebra& a, const WeightAssignment& w);

/// Square matrix, either a bare array of rows or {"map": [...]}.
Matrix parse_matrix(std::string_view text, const std::string& source = "<string>");
std::string matrix_to_json(const Matrix& m);

IsoCertificate parse_certificate(std::string_view text, const std::string& source = "<string>");
IsoCertificate load_certificate(const std::string& path);
std::string certificate_to_json(const IsoCertificate& c);

}  // namespace leibniz

#endif  // LEIBNIZ_IO_HPP
