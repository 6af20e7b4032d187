#include "leibniz/scalar.hpp"

#include <cctype>
#include <optional>

namespace leibniz {

GaussianRational GaussianRational::from_fractions(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw std::domain_error("zero denominator");
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (sgn(im_) == 0) {
    GaussianRational r;
    r.re_ = 1 / re_;
    return r;
  }
  mpq_class norm = re_ * re_ + im_ * im_;
  return {mpq_class(re_ / norm), mpq_class(-im_ / norm)};
}

namespace {

std::string frac_text(const mpq_class& q) {
  // mpq_class::get_str yields "a" or "a/b" on canonical values
  return q.get_str();
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos == text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
};

[[noreturn]] void fail(std::string_view text, std::string_view why) {
  throw ParseError("malformed scalar '" + std::string(text) + "': " + std::string(why), std::string(text));
}

std::optional<mpq_class> read_frac(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) return std::nullopt;
  std::string num(c.text.substr(start, c.pos - start));
  std::string den = "1";
  if (c.peek() == '/') {
    ++c.pos;
    std::size_t dstart = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == dstart) fail(c.text, "missing denominator");
    den = std::string(c.text.substr(dstart, c.pos - dstart));
  }
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) fail(c.text, "zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  Cursor c{text};
  if (text.empty()) fail(text, "empty");

  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    ++c.pos;
  }
  auto first = read_frac(c);
  if (!first) fail(text, "expected a number");
  if (neg) *first = -*first;

  if (c.done()) return {*first, 0};
  if (c.peek() == 'i') {
    ++c.pos;
    if (!c.done()) fail(text, "trailing characters");
    return {0, *first};
  }
  if (c.peek() != '+' && c.peek() != '-') fail(text, "unexpected character");
  bool im_neg = c.peek() == '-';
  ++c.pos;
  auto second = read_frac(c);
  if (!second) fail(text, "expected imaginary part");
  if (c.peek() != 'i') fail(text, "imaginary part must end with 'i'");
  ++c.pos;
  if (!c.done()) fail(text, "trailing characters");
  if (im_neg) *second = -*second;
  return {*first, *second};
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return frac_text(re_);
  if (sgn(re_) == 0) return frac_text(im_) + "i";
  std::string out = frac_text(re_);
  out += sgn(im_) > 0 ? "+" : "-";
  out += frac_text(abs(im_));
  out += "i";
  return out;
}

}  // namespace leibniz
