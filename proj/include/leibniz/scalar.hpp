#ifndef LEIBNIZ_SCALAR_HPP
#define LEIBNIZ_SCALAR_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

/// Raised when text does not follow the scalar grammar
///   [-] frac [ (+|-) frac "i" ] | [-] frac "i"     frac = int | int "/" posint
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string token)
      : std::runtime_error(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Exact element of Q(i): re + im*i with both parts reduced rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: Eigen needs Scalar(0), Scalar(1)
  GaussianRational(int value) : re_(value) {}   // NOLINT
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational from_fractions(long re_num, long re_den, long im_num = 0, long im_den = 1);
  static GaussianRational parse(std::string_view text);

  const mpq_class& real() const noexcept { return re_; }
  const mpq_class& imag() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  GaussianRational inverse() const;
  GaussianRational conj() const { return {re_, -im_}; }

  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    GaussianRational r;
    r.re_ = -a.re_;
    r.im_ = -a.im_;
    return r;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& s) { return os << s.to_string(); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using Scalar = GaussianRational;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

}  // namespace leibniz

namespace Eigen {

template <>
struct NumTraits<leibniz::GaussianRational> : GenericNumTraits<leibniz::GaussianRational> {
  using Real = leibniz::GaussianRational;
  using NonInteger = leibniz::GaussianRational;
  using Literal = leibniz::GaussianRational;
  using Nested = leibniz::GaussianRational;

  enum {
    IsComplex = 0,  // conjugation is never applied implicitly
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LEIBNIZ_SCALAR_HPP
