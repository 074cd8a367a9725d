#pragma once

// Certified arbitrary-precision real arithmetic on midpoint-radius balls,
// stored internally as outward-rounded [inf, sup] MPFR endpoints.  Every
// operation returns an enclosure of the exact image, so strict-inequality
// answers obtained through certify_lt/certify_le are unconditionally correct.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bakerkit {

enum class Tristate { yes, no, unknown };

struct PrecisionPolicy {
  mpfr_prec_t initial = 192;
  mpfr_prec_t cap = 4096;
};

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionExhausted : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

namespace detail {

// RAII holder for a single mpfr value.
class Raw {
 public:
  explicit Raw(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Raw(const Raw& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);  // same precision: exact
  }
  Raw(Raw&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Raw& operator=(const Raw& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Raw& operator=(Raw&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Raw() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Exact dyadic decomposition m * 2^e of a finite mpfr value.
inline std::pair<mpz_class, long> dyadic_parts(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return {mpz_class(0), 0};
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  return {m, static_cast<long>(e)};
}

// Exact decimal string "<mantissa>e<exp10>" for m * 2^e (value = mantissa * 10^exp10).
inline std::string dyadic_to_decimal(const mpz_class& m, long e) {
  if (m == 0) return "0";
  mpz_class mant = m;
  long exp10 = 0;
  if (e >= 0) {
    mpz_class two = 1;
    mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(e));
    mant *= two;
  } else {
    mpz_class five;
    mpz_ui_pow_ui(five.get_mpz_t(), 5, static_cast<unsigned long>(-e));
    mant *= five;
    exp10 = e;
  }
  // strip trailing decimal zeros to keep the representation canonical
  while (mant != 0 && mpz_divisible_ui_p(mant.get_mpz_t(), 10)) {
    mant /= 10;
    ++exp10;
  }
  std::string s = mant.get_str();
  if (exp10 != 0) s += "e" + std::to_string(exp10);
  return s;
}

}  // namespace detail

// Parses "<int>", "<int>e<exp>", "<int>.<frac>", "<int>.<frac>e<exp>" or
// "p/q" into an exact rational.  Throws std::invalid_argument on junk.
inline mpq_class parse_exact_number(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty number");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    mpz_class p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in " + text);
    mpq_class r(p, q);
    r.canonicalize();
    return r;
  }
  long exp10 = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    s = s.substr(0, epos);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    s = s.substr(0, dot) + frac;
    exp10 -= static_cast<long>(frac.size());
  }
  if (s.empty() || s == "-" || s == "+") throw std::invalid_argument("bad number: " + text);
  mpz_class digits;
  if (mpz_set_str(digits.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad number: " + text);
  mpq_class r(digits);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0)
    r *= mpq_class(pow10);
  else
    r /= mpq_class(pow10);
  r.canonicalize();
  return r;
}

class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {}

  static Ball from_int(long v, mpfr_prec_t prec) {
    Ball b(prec);
    mpfr_set_si(b.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(b.hi_.get(), v, MPFR_RNDU);
    return b;
  }

  static Ball from_integer(const mpz_class& v, mpfr_prec_t prec) {
    Ball b(prec);
    mpfr_set_z(b.lo_.get(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(b.hi_.get(), v.get_mpz_t(), MPFR_RNDU);
    return b;
  }

  // Enclosure of p/q; exact (zero radius) whenever p/q is dyadic and fits.
  static Ball from_rational(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec) {
    if (q == 0) throw std::invalid_argument("Ball::from_rational: zero denominator");
    mpq_class r(p, q);
    r.canonicalize();
    return from_rational(r, prec);
  }

  static Ball from_rational(const mpq_class& r, mpfr_prec_t prec) {
    Ball b(prec);
    mpfr_set_q(b.lo_.get(), r.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b.hi_.get(), r.get_mpq_t(), MPFR_RNDU);
    return b;
  }

  static Ball from_endpoints(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
    if (lo > hi) throw std::invalid_argument("Ball::from_endpoints: inverted interval");
    Ball b(prec);
    mpfr_set_q(b.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
    return b;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_.get()); }
  mpfr_srcptr inf() const { return lo_.get(); }
  mpfr_srcptr sup() const { return hi_.get(); }

  bool is_exact() const { return mpfr_equal_p(lo_.get(), hi_.get()); }
  bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }
  bool is_strictly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_strictly_negative() const { return mpfr_sgn(hi_.get()) < 0; }

  bool contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_.get(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), v.get_mpq_t()) >= 0;
  }
  bool contains(const mpz_class& v) const {
    return mpfr_cmp_z(lo_.get(), v.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_.get(), v.get_mpz_t()) >= 0;
  }
  bool contains(const Ball& inner) const {
    return mpfr_lessequal_p(lo_.get(), inner.lo_.get()) &&
           mpfr_greaterequal_p(hi_.get(), inner.hi_.get());
  }
  bool overlaps(const Ball& o) const {
    return !(mpfr_less_p(hi_.get(), o.lo_.get()) || mpfr_greater_p(lo_.get(), o.hi_.get()));
  }
  bool same_enclosure(const Ball& o) const {
    return mpfr_equal_p(lo_.get(), o.lo_.get()) && mpfr_equal_p(hi_.get(), o.hi_.get());
  }

  friend Ball operator+(const Ball& a, const Ball& b) {
    Ball r(join_prec(a, b));
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Ball operator-(const Ball& a, const Ball& b) {
    Ball r(join_prec(a, b));
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
  }

  friend Ball operator-(const Ball& a) {
    Ball r(a.precision());
    mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
    return r;
  }

  friend Ball operator*(const Ball& a, const Ball& b) {
    Ball r(join_prec(a, b));
    detail::Raw t(r.precision()), best(r.precision());
    const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
    const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
    bool first = true;
    for (auto x : as)
      for (auto y : bs) {
        mpfr_mul(t.get(), x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t.get(), best.get())) mpfr_set(best.get(), t.get(), MPFR_RNDN);
        first = false;
      }
    mpfr_set(r.lo_.get(), best.get(), MPFR_RNDN);
    first = true;
    for (auto x : as)
      for (auto y : bs) {
        mpfr_mul(t.get(), x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t.get(), best.get())) mpfr_set(best.get(), t.get(), MPFR_RNDN);
        first = false;
      }
    mpfr_set(r.hi_.get(), best.get(), MPFR_RNDN);
    return r;
  }

  friend Ball operator/(const Ball& a, const Ball& b) {
    if (b.contains_zero()) throw std::domain_error("Ball division by interval containing zero");
    Ball r(join_prec(a, b));
    detail::Raw t(r.precision()), best(r.precision());
    const mpfr_srcptr as[2] = {a.lo_.get(), a.hi_.get()};
    const mpfr_srcptr bs[2] = {b.lo_.get(), b.hi_.get()};
    bool first = true;
    for (auto x : as)
      for (auto y : bs) {
        mpfr_div(t.get(), x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t.get(), best.get())) mpfr_set(best.get(), t.get(), MPFR_RNDN);
        first = false;
      }
    mpfr_set(r.lo_.get(), best.get(), MPFR_RNDN);
    first = true;
    for (auto x : as)
      for (auto y : bs) {
        mpfr_div(t.get(), x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t.get(), best.get())) mpfr_set(best.get(), t.get(), MPFR_RNDN);
        first = false;
      }
    mpfr_set(r.hi_.get(), best.get(), MPFR_RNDN);
    return r;
  }

  Ball abs() const {
    Ball r(precision());
    if (mpfr_sgn(lo_.get()) >= 0) return *this;
    if (mpfr_sgn(hi_.get()) <= 0) return -*this;
    mpfr_set_zero(r.lo_.get(), 1);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    if (mpfr_less_p(r.hi_.get(), hi_.get())) mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
  }

  // Natural logarithm; the whole interval must be strictly positive.
  friend Ball log(const Ball& x) {
    if (!x.is_strictly_positive())
      throw std::domain_error("Ball log: interval touches or crosses zero");
    Ball r(x.precision());
    mpfr_log(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Ball exp(const Ball& x) {
    Ball r(x.precision());
    mpfr_exp(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
    return r;
  }

  friend Ball sqrt(const Ball& x) {
    if (mpfr_sgn(x.lo_.get()) < 0)
      throw std::domain_error("Ball sqrt: interval extends below zero");
    Ball r(x.precision());
    mpfr_sqrt(r.lo_.get(), x.lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), x.hi_.get(), MPFR_RNDU);
    return r;
  }

  // x^n for integer n.  Negative n requires an interval not containing zero.
  Ball pow_int(long n) const {
    Ball r(precision());
    if (n == 0) {
      mpfr_set_si(r.lo_.get(), 1, MPFR_RNDD);
      mpfr_set_si(r.hi_.get(), 1, MPFR_RNDU);
      return r;
    }
    if (n < 0 && contains_zero())
      throw std::domain_error("Ball pow_int: negative power of interval containing zero");
    const bool even = (n % 2 == 0);
    if (n > 0) {
      if (!even || mpfr_sgn(lo_.get()) >= 0) {
        // odd powers are monotone everywhere; even powers monotone on x >= 0
        mpfr_pow_si(r.lo_.get(), lo_.get(), n, MPFR_RNDD);
        mpfr_pow_si(r.hi_.get(), hi_.get(), n, MPFR_RNDU);
      } else if (mpfr_sgn(hi_.get()) <= 0) {
        mpfr_pow_si(r.lo_.get(), hi_.get(), n, MPFR_RNDD);
        mpfr_pow_si(r.hi_.get(), lo_.get(), n, MPFR_RNDU);
      } else {  // straddles zero, even n
        mpfr_set_zero(r.lo_.get(), 1);
        detail::Raw t(precision());
        mpfr_pow_si(t.get(), lo_.get(), n, MPFR_RNDU);
        mpfr_pow_si(r.hi_.get(), hi_.get(), n, MPFR_RNDU);
        if (mpfr_greater_p(t.get(), r.hi_.get())) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDN);
      }
      return r;
    }
    // n < 0, interval strictly one-signed
    if (mpfr_sgn(lo_.get()) > 0) {  // decreasing on positives
      mpfr_pow_si(r.lo_.get(), hi_.get(), n, MPFR_RNDD);
      mpfr_pow_si(r.hi_.get(), lo_.get(), n, MPFR_RNDU);
    } else if (!even) {  // negative base, odd exponent: decreasing
      mpfr_pow_si(r.lo_.get(), hi_.get(), n, MPFR_RNDD);
      mpfr_pow_si(r.hi_.get(), lo_.get(), n, MPFR_RNDU);
    } else {  // negative base, even exponent: increasing
      mpfr_pow_si(r.lo_.get(), lo_.get(), n, MPFR_RNDD);
      mpfr_pow_si(r.hi_.get(), hi_.get(), n, MPFR_RNDU);
    }
    return r;
  }

  static Ball min(const Ball& a, const Ball& b) {
    Ball r(join_prec(a, b));
    mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_min(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  static Ball max(const Ball& a, const Ball& b) {
    Ball r(join_prec(a, b));
    mpfr_max(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  // Smallest interval containing both operands.
  static Ball hull(const Ball& a, const Ball& b) {
    Ball r(join_prec(a, b));
    mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }

  std::optional<Ball> intersect(const Ball& o) const {
    Ball r(join_prec(*this, o));
    mpfr_max(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_min(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    if (mpfr_greater_p(r.lo_.get(), r.hi_.get())) return std::nullopt;
    return r;
  }

  // TRUE iff sup(x) < inf(y); FALSE iff inf(x) > sup(y); otherwise UNKNOWN.
  friend Tristate certify_lt(const Ball& x, const Ball& y) {
    if (mpfr_less_p(x.hi_.get(), y.lo_.get())) return Tristate::yes;
    if (mpfr_greater_p(x.lo_.get(), y.hi_.get())) return Tristate::no;
    return Tristate::unknown;
  }

  friend Tristate certify_le(const Ball& x, const Ball& y) {
    if (mpfr_lessequal_p(x.hi_.get(), y.lo_.get())) return Tristate::yes;
    if (mpfr_greater_p(x.lo_.get(), y.hi_.get())) return Tristate::no;
    return Tristate::unknown;
  }

  // Exact comparisons against rationals and big integers (no rounding at all).
  Tristate less_than(const mpq_class& v) const {
    if (mpfr_cmp_q(hi_.get(), v.get_mpq_t()) < 0) return Tristate::yes;
    if (mpfr_cmp_q(lo_.get(), v.get_mpq_t()) > 0) return Tristate::no;
    return Tristate::unknown;
  }
  Tristate greater_than(const mpq_class& v) const {
    if (mpfr_cmp_q(lo_.get(), v.get_mpq_t()) > 0) return Tristate::yes;
    if (mpfr_cmp_q(hi_.get(), v.get_mpq_t()) < 0) return Tristate::no;
    return Tristate::unknown;
  }
  Tristate le_integer(const mpz_class& v) const {
    if (mpfr_cmp_z(hi_.get(), v.get_mpz_t()) <= 0) return Tristate::yes;
    if (mpfr_cmp_z(lo_.get(), v.get_mpz_t()) > 0) return Tristate::no;
    return Tristate::unknown;
  }
  Tristate ge_integer(const mpz_class& v) const {
    if (mpfr_cmp_z(lo_.get(), v.get_mpz_t()) >= 0) return Tristate::yes;
    if (mpfr_cmp_z(hi_.get(), v.get_mpz_t()) < 0) return Tristate::no;
    return Tristate::unknown;
  }

  // Integer n with n <= x < n+1 for every point of the interval, when determined.
  std::optional<mpz_class> certified_floor() const {
    mpz_class fl, fh;
    mpfr_get_z(fl.get_mpz_t(), lo_.get(), MPFR_RNDD);
    mpfr_get_z(fh.get_mpz_t(), hi_.get(), MPFR_RNDD);
    if (fl == fh && mpfr_cmp_z(hi_.get(), fh.get_mpz_t()) != 0) return fl;
    if (fl == fh && is_exact()) return fl;  // exact integer endpoint
    return std::nullopt;
  }

  mpz_class floor_upper() const {
    mpz_class f;
    mpfr_get_z(f.get_mpz_t(), hi_.get(), MPFR_RNDD);
    return f;
  }
  mpz_class ceil_upper() const {
    mpz_class f;
    mpfr_get_z(f.get_mpz_t(), hi_.get(), MPFR_RNDU);
    return f;
  }

  // Exact rational value of an endpoint (endpoints are dyadic).
  mpq_class inf_rational() const { return endpoint_rational(lo_.get()); }
  mpq_class sup_rational() const { return endpoint_rational(hi_.get()); }

  // Enclosure of min_{z in Z} |x - z| over the whole interval.
  static Ball nearest_int_distance(const Ball& x) {
    const mpfr_prec_t p = x.precision();
    Ball r(p);
    mpq_class half(1, 2);
    detail::Raw width(p);
    mpfr_sub(width.get(), x.hi_.get(), x.lo_.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(width.get(), 1) >= 0) {
      mpfr_set_zero(r.lo_.get(), 1);
      mpfr_set_q(r.hi_.get(), half.get_mpq_t(), MPFR_RNDU);
      return r;
    }
    mpz_class base;
    mpfr_get_z(base.get_mpz_t(), x.lo_.get(), MPFR_RNDD);
    // shift into [0, 2): exact integer subtraction, outward rounded
    detail::Raw ylo(p), yhi(p);
    mpfr_sub_z(ylo.get(), x.lo_.get(), base.get_mpz_t(), MPFR_RNDD);
    mpfr_sub_z(yhi.get(), x.hi_.get(), base.get_mpz_t(), MPFR_RNDU);
    auto point_dist = [&](mpfr_srcptr t, mpfr_rnd_t rnd, mpfr_ptr out) {
      // distance of t in [0, 2] to {0, 1, 2}
      detail::Raw d1(p), d2(p);
      mpfr_ui_sub(d1.get(), 1, t, rnd);
      mpfr_abs(d1.get(), d1.get(), rnd);
      mpfr_ui_sub(d2.get(), 2, t, rnd);
      mpfr_abs(d2.get(), d2.get(), rnd);
      mpfr_set(out, t, rnd);
      mpfr_abs(out, out, rnd);
      mpfr_min(out, out, d1.get(), rnd);
      mpfr_min(out, out, d2.get(), rnd);
    };
    detail::Raw dlo_a(p), dlo_b(p), dhi_a(p), dhi_b(p);
    point_dist(ylo.get(), MPFR_RNDD, dlo_a.get());
    point_dist(yhi.get(), MPFR_RNDD, dlo_b.get());
    point_dist(ylo.get(), MPFR_RNDU, dhi_a.get());
    point_dist(yhi.get(), MPFR_RNDU, dhi_b.get());
    // lower bound: zero if an integer lies inside, else min of endpoint distances
    bool integer_inside =
        (mpfr_sgn(ylo.get()) <= 0) ||
        (mpfr_cmp_ui(ylo.get(), 1) <= 0 && mpfr_cmp_ui(yhi.get(), 1) >= 0) ||
        (mpfr_cmp_ui(yhi.get(), 2) >= 0);
    if (integer_inside)
      mpfr_set_zero(r.lo_.get(), 1);
    else
      mpfr_min(r.lo_.get(), dlo_a.get(), dlo_b.get(), MPFR_RNDD);
    // upper bound: 1/2 if a half-integer lies inside, else max of endpoint distances
    mpq_class half3(3, 2);
    bool half_inside = (mpfr_cmp_q(ylo.get(), half.get_mpq_t()) <= 0 &&
                        mpfr_cmp_q(yhi.get(), half.get_mpq_t()) >= 0) ||
                       (mpfr_cmp_q(ylo.get(), half3.get_mpq_t()) <= 0 &&
                        mpfr_cmp_q(yhi.get(), half3.get_mpq_t()) >= 0);
    if (half_inside)
      mpfr_set_q(r.hi_.get(), half.get_mpq_t(), MPFR_RNDU);
    else
      mpfr_max(r.hi_.get(), dhi_a.get(), dhi_b.get(), MPFR_RNDU);
    return r;
  }

  // Exact dyadic midpoint and radius as decimal strings (lossless round-trip).
  struct DecimalParts {
    std::string midpoint;
    std::string radius;
    long precision;
  };

  DecimalParts to_decimal_parts() const {
    auto [ml, el] = detail::dyadic_parts(lo_.get());
    auto [mh, eh] = detail::dyadic_parts(hi_.get());
    long g = std::min(el, eh);
    if (ml == 0) g = eh;
    if (mh == 0) g = el;
    if (ml == 0 && mh == 0) g = 0;
    mpz_class nl = ml, nh = mh;
    mpz_mul_2exp(nl.get_mpz_t(), nl.get_mpz_t(), static_cast<unsigned long>(el - g));
    mpz_mul_2exp(nh.get_mpz_t(), nh.get_mpz_t(), static_cast<unsigned long>(eh - g));
    // midpoint = (nl + nh) * 2^(g-1), radius = (nh - nl) * 2^(g-1): both exact
    mpz_class sum = nl + nh, diff = nh - nl;
    return {detail::dyadic_to_decimal(sum, g - 1), detail::dyadic_to_decimal(diff, g - 1),
            static_cast<long>(precision())};
  }

  static Ball from_decimal_parts(const DecimalParts& parts) {
    mpq_class mid = parse_exact_number(parts.midpoint);
    mpq_class rad = parse_exact_number(parts.radius);
    if (rad < 0) throw std::invalid_argument("negative radius");
    mpq_class lo = mid - rad, hi = mid + rad;
    // endpoints are dyadic by construction; choose enough precision for exactness
    mpfr_prec_t need = static_cast<mpfr_prec_t>(parts.precision);
    auto bits = [](const mpq_class& v) {
      return mpz_sizeinbase(v.get_num().get_mpz_t(), 2) +
             mpz_sizeinbase(v.get_den().get_mpz_t(), 2);
    };
    need = std::max<mpfr_prec_t>(need, static_cast<mpfr_prec_t>(std::max(bits(lo), bits(hi))) + 4);
    Ball b(need);
    mpfr_set_q(b.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(b.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
    return b;
  }

  // Human-readable "m ± r" with the midpoint shown to `digits` decimals.
  std::string display(int digits = 20) const {
    detail::Raw mid(precision()), rad(precision());
    mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    mpfr_sub(rad.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_div_2ui(rad.get(), rad.get(), 1, MPFR_RNDU);
    char* ms = nullptr;
    char* rs = nullptr;
    mpfr_asprintf(&ms, "%.*Rg", digits, mid.get());
    mpfr_asprintf(&rs, "%.3Rg", rad.get());
    std::string out = std::string(ms) + " +/- " + rs;
    mpfr_free_str(ms);
    mpfr_free_str(rs);
    return out;
  }

  double radius_double() const {
    detail::Raw rad(precision());
    mpfr_sub(rad.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_div_2ui(rad.get(), rad.get(), 1, MPFR_RNDU);
    return mpfr_get_d(rad.get(), MPFR_RNDU);
  }

  double midpoint_double() const {
    detail::Raw mid(precision());
    mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    return mpfr_get_d(mid.get(), MPFR_RNDN);
  }

 private:
  static mpfr_prec_t join_prec(const Ball& a, const Ball& b) {
    return std::max(a.precision(), b.precision());
  }

  static mpq_class endpoint_rational(mpfr_srcptr x) {
    auto [m, e] = detail::dyadic_parts(x);
    mpq_class r(m);
    if (e >= 0) {
      mpz_class two = 1;
      mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(e));
      r *= mpq_class(two);
    } else {
      mpz_class two = 1;
      mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(-e));
      r /= mpq_class(two);
    }
    r.canonicalize();
    return r;
  }

  friend class BallBuilder;
  detail::Raw lo_, hi_;
};

// Escalation driver: runs `attempt` at doubling precision until it returns a
// value or the cap is exhausted.
template <typename F>
auto with_precision_escalation(const PrecisionPolicy& policy, F&& attempt)
    -> typename std::invoke_result_t<F, mpfr_prec_t>::value_type {
  mpfr_prec_t p = policy.initial;
  for (;;) {
    if (auto r = attempt(p)) return *r;
    if (p >= policy.cap)
      throw PrecisionExhausted("certification failed up to precision cap " +
                               std::to_string(policy.cap));
    p = std::min<mpfr_prec_t>(p * 2, policy.cap);
  }
}

inline const char* to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "TRUE";
    case Tristate::no: return "FALSE";
    default: return "UNKNOWN";
  }
}

}  // namespace bakerkit
