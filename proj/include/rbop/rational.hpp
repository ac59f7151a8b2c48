#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace rbop {

/// Exact rational scalar over arbitrary-precision integers.
///
/// Values are always canonical: lowest terms, positive denominator, sign on
/// the numerator. Arithmetic never rounds. The textual form is "p/q", or
/// just "p" when the denominator is 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses canonical or non-canonical "p/q" / "p"; rejects anything else.
  static std::optional<Rat> parse(std::string_view text);

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.abs(); }

}  // namespace rbop

namespace Eigen {

template <>
struct NumTraits<rbop::Rat> : GenericNumTraits<rbop::Rat> {
  typedef rbop::Rat Real;
  typedef rbop::Rat NonInteger;
  typedef rbop::Rat Nested;
  static inline Real epsilon() { return rbop::Rat(0); }
  static inline Real dummy_precision() { return rbop::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 150,
    MulCost = 150
  };
};

}  // namespace Eigen
