#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cyclord {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a comparison of decimal-specified data falls below the
// certification margin; carries the precision that would resolve it.
struct PrecisionExhausted : std::runtime_error {
  int suggested_precision;
  PrecisionExhausted(const std::string& what, int suggested)
      : std::runtime_error(what), suggested_precision(suggested) {}
};

int sign(const Rat& x);
Int floor_div(const Int& num, const Int& den);  // den > 0
Int rat_floor(const Rat& x);
Rat pow10(int digits);
Rat parse_decimal(const std::string& text, int max_fraction_digits);
std::string rat_to_decimal(const Rat& x, int digits);  // truncated toward -inf

// Exact element of the field generated over Q by sqrt(2) and sqrt(5):
//
//   value = q + r2*sqrt(2) + r5*sqrt(5),  q, r2, r5 rational.
//
// The rotation engine only ever adds such numbers and scales them by
// rationals, so this representation is closed under everything it does.
// {1, sqrt2, sqrt5} are linearly independent over Q: if
// r2*sqrt2 + r5*sqrt5 were rational, squaring forces r2*r5*sqrt10 to be
// rational, so r2*r5 = 0, and a single nonzero radical term is never
// rational. Hence the value is zero iff all three components are zero,
// and every nonzero value gets a definite sign by interval refinement.
class Real {
 public:
  Real() = default;
  explicit Real(Rat q) : q_(std::move(q)) {}
  explicit Real(long q) : q_(q) {}
  Real(Rat q, Rat r2, Rat r5)
      : q_(std::move(q)), r2_(std::move(r2)), r5_(std::move(r5)) {}

  static Real sqrt2() { return Real(0, 1, 0); }
  static Real sqrt5() { return Real(0, 0, 1); }
  static Real golden() { return Real(Rat(-1, 2), 0, Rat(1, 2)); }  // (sqrt5-1)/2
  static Real sqrt2_minus_1() { return Real(-1, 1, 0); }

  const Rat& rat_part() const { return q_; }
  const Rat& sqrt2_part() const { return r2_; }
  const Rat& sqrt5_part() const { return r5_; }

  bool is_zero() const { return q_ == 0 && r2_ == 0 && r5_ == 0; }
  bool is_rational() const { return r2_ == 0 && r5_ == 0; }

  Real operator+(const Real& o) const {
    return Real(q_ + o.q_, r2_ + o.r2_, r5_ + o.r5_);
  }
  Real operator-(const Real& o) const {
    return Real(q_ - o.q_, r2_ - o.r2_, r5_ - o.r5_);
  }
  Real operator-() const { return Real(-q_, -r2_, -r5_); }
  Real scaled(const Rat& c) const { return Real(q_ * c, r2_ * c, r5_ * c); }

  bool operator==(const Real& o) const {
    return q_ == o.q_ && r2_ == o.r2_ && r5_ == o.r5_;
  }

  int sign() const;        // exact: -1, 0, +1
  Int floor() const;       // exact
  Real fractional() const { return *this - Real(Rat(floor())); }
  Real abs() const { return sign() < 0 ? -*this : *this; }

  // Rigorous rational enclosure [lo, hi] with hi - lo <= 3 * 2^-bits.
  void enclose(unsigned bits, Rat& lo, Rat& hi) const;

  // Truncated decimal expansion (exact to `digits` places, value >= 0).
  std::string decimal(int digits) const;

  double to_double() const;  // approximation for reports only

 private:
  Rat q_{0}, r2_{0}, r5_{0};
};

inline int compare(const Real& a, const Real& b) { return (a - b).sign(); }

}  // namespace cyclord
