#include "cyclord/exact.hpp"

#include <stdexcept>

namespace cyclord {

int sign(const Rat& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  if ((num % den) != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}

Int rat_floor(const Rat& x) {
  return floor_div(numerator(x), denominator(x));
}

Rat pow10(int digits) {
  Int p = 1;
  for (int i = 0; i < (digits < 0 ? -digits : digits); ++i) p *= 10;
  return digits >= 0 ? Rat(p) : Rat(1, p);
}

Rat parse_decimal(const std::string& text, int max_fraction_digits) {
  std::string s = text;
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = (s[i] == '-');
    ++i;
  }
  // fraction syntax p/q is accepted alongside plain decimals
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string p = s.substr(i, slash - i), q = s.substr(slash + 1);
    if (p.empty() || q.empty() ||
        p.find_first_not_of("0123456789") != std::string::npos ||
        q.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad rational literal: " + text);
    Rat r{Int(p), Int(q)};
    return negative ? -r : r;
  }
  Int int_part = 0;
  bool any = false;
  for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
    int_part = int_part * 10 + (s[i] - '0');
    any = true;
  }
  Int frac_num = 0, frac_den = 1;
  if (i < s.size() && s[i] == '.') {
    ++i;
    int taken = 0;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
      if (taken < max_fraction_digits) {
        frac_num = frac_num * 10 + (s[i] - '0');
        frac_den *= 10;
        ++taken;
      }
      any = true;  // extra digits beyond the precision are truncated
    }
  }
  if (!any || i != s.size()) throw InputError("bad decimal literal: " + text);
  Rat r = Rat(int_part) + Rat(frac_num, frac_den);
  return negative ? -r : r;
}

std::string rat_to_decimal(const Rat& x, int digits) {
  Rat scale = pow10(digits);
  Int n = rat_floor(x * scale);
  bool neg = n < 0;
  Int a = neg ? -n : n;
  std::string raw = a.str();
  std::string pad(digits + 1 > (int)raw.size() ? digits + 1 - raw.size() : 0, '0');
  raw = pad + raw;
  std::string out = raw.substr(0, raw.size() - digits) + "." + raw.substr(raw.size() - digits);
  if (neg) out = "-" + out;  // note: truncation toward -inf already applied
  return out;
}

namespace {

// floor(sqrt(d) * 2^bits) for small d; enclosure endpoints are a/2^bits
Int sqrt_scaled(unsigned d, unsigned bits) {
  Int x = Int(d) << (2 * bits);
  return boost::multiprecision::sqrt(x);
}

struct RatInterval {
  Rat lo, hi;
  void add_scaled(const Rat& c, const Rat& slo, const Rat& shi) {
    if (c >= 0) {
      lo += c * slo;
      hi += c * shi;
    } else {
      lo += c * shi;
      hi += c * slo;
    }
  }
};

RatInterval enclose_impl(const Rat& q, const Rat& r2, const Rat& r5, unsigned bits) {
  RatInterval iv{q, q};
  Rat den = Rat(Int(1) << bits);
  if (r2 != 0) {
    Int a = sqrt_scaled(2, bits);
    iv.add_scaled(r2, Rat(a) / den, Rat(a + 1) / den);
  }
  if (r5 != 0) {
    Int a = sqrt_scaled(5, bits);
    iv.add_scaled(r5, Rat(a) / den, Rat(a + 1) / den);
  }
  return iv;
}

constexpr unsigned kMaxBits = 1u << 22;

}  // namespace

void Real::enclose(unsigned bits, Rat& lo, Rat& hi) const {
  RatInterval iv = enclose_impl(q_, r2_, r5_, bits);
  lo = iv.lo;
  hi = iv.hi;
}

int Real::sign() const {
  if (is_zero()) return 0;
  if (is_rational()) return cyclord::sign(q_);
  for (unsigned bits = 64; bits <= kMaxBits; bits *= 2) {
    RatInterval iv = enclose_impl(q_, r2_, r5_, bits);
    if (iv.lo > 0) return 1;
    if (iv.hi < 0) return -1;
  }
  // unreachable: the value is a nonzero element of Q(sqrt2, sqrt5)
  throw std::logic_error("sign refinement exceeded separation bound");
}

Int Real::floor() const {
  if (is_rational()) return rat_floor(q_);
  for (unsigned bits = 64; bits <= kMaxBits; bits *= 2) {
    RatInterval iv = enclose_impl(q_, r2_, r5_, bits);
    Int fl = rat_floor(iv.lo), fh = rat_floor(iv.hi);
    if (fl == fh) return fl;
  }
  // unreachable: an irrational value is never an integer
  throw std::logic_error("floor refinement exceeded separation bound");
}

std::string Real::decimal(int digits) const {
  Real scaled_value = scaled(pow10(digits));
  Int n = scaled_value.floor();
  if (n < 0) throw std::logic_error("decimal() expects a nonnegative value");
  std::string raw = n.str();
  std::string pad(digits + 1 > (int)raw.size() ? digits + 1 - raw.size() : 0, '0');
  raw = pad + raw;
  return raw.substr(0, raw.size() - digits) + "." + raw.substr(raw.size() - digits);
}

double Real::to_double() const {
  Rat lo, hi;
  enclose(80, lo, hi);
  return lo.convert_to<double>();
}

}  // namespace cyclord
