#pragma once

// Integer polynomials, exact Sturm-chain root counting and certified real
// root isolation.  Isolation runs entirely over exact rational arithmetic;
// the resulting intervals are polished to the requested bit precision with
// an interval-Newton iteration on Balls (with exact bisection as fallback).

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bakerkit/ball.hpp"

namespace bakerkit {

class IntPolynomial {
 public:
  IntPolynomial() = default;

  // Coefficients constant-term first; trailing zeros are stripped.
  explicit IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static IntPolynomial from_ints(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coefficients() const { return c_; }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }

  mpz_class content() const {
    mpz_class g = 0;
    for (const auto& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
  }

  IntPolynomial primitive_part() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (leading() < 0) g = -g;
    std::vector<mpz_class> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c / g);
    return IntPolynomial(std::move(out));
  }

  IntPolynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<mpz_class> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
    return IntPolynomial(std::move(out));
  }

  mpq_class eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
  }

  int sign_at(const mpq_class& x) const { return sgn(eval(x)); }

  Ball eval(const Ball& x) const {
    Ball acc = Ball::from_int(0, x.precision());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + Ball::from_integer(*it, x.precision());
    return acc;
  }

  // 1 + max |c_i| / |c_d|, rounded up to an integer: all real roots lie in
  // (-bound, bound).
  mpz_class cauchy_root_bound() const {
    mpz_class m = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      mpz_class a = ::abs(c_[i]);
      if (a > m) m = a;
    }
    mpz_class lead = ::abs(leading());
    mpz_class q = m / lead + 1;  // >= ceil(m/lead)
    return q + 1;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += (c_[i] > 0 ? " + " : " - ");
      else if (c_[i] < 0) s += "-";
      mpz_class a = ::abs(c_[i]);
      if (a != 1 || i == 0) s += a.get_str();
      if (i > 0) s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  std::vector<mpz_class> c_;  // constant first
};

namespace detail {

using QPoly = std::vector<mpq_class>;  // constant first, normalized (no trailing zeros)

inline void q_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly q_from(const IntPolynomial& p) {
  QPoly out;
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

inline mpq_class q_eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// remainder of a by b (degree(b) >= 0)
inline QPoly q_rem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    q_trim(a);
  }
  return a;
}

inline std::vector<QPoly> sturm_chain(const IntPolynomial& p) {
  std::vector<QPoly> chain;
  chain.push_back(q_from(p));
  chain.push_back(q_from(p.derivative()));
  q_trim(chain[0]);
  q_trim(chain[1]);
  while (!chain.back().empty() && chain.back().size() > 1) {
    QPoly r = q_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  int variations = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.empty()) continue;
    int s = sgn(q_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace detail

// Number of distinct real roots in (a, b] for squarefree p.
inline int count_roots_in(const IntPolynomial& p, const mpq_class& a, const mpq_class& b) {
  auto chain = detail::sturm_chain(p);
  return detail::sign_variations(chain, a) - detail::sign_variations(chain, b);
}

inline bool is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  detail::QPoly a = detail::q_from(p), b = detail::q_from(p.derivative());
  while (!b.empty()) {
    detail::QPoly r = detail::q_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

// One Ball per real root, pairwise disjoint, sorted ascending, each certified
// to contain exactly one root of p.
inline std::vector<Ball> isolate_real_roots(const IntPolynomial& poly, mpfr_prec_t prec) {
  if (poly.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  IntPolynomial p = poly.primitive_part();
  if (!is_squarefree(p))
    throw std::invalid_argument("isolate_real_roots: polynomial is not squarefree (gcd with derivative is nonconstant)");
  if (p.degree() == 0) return {};

  auto chain = detail::sturm_chain(p);
  mpz_class bound = p.cauchy_root_bound();
  mpq_class lo(-bound), hi(bound);

  struct Segment {
    mpq_class a, b;
    int count;
  };
  std::vector<Segment> isolated;
  std::vector<Segment> work;
  int total = detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
  if (total > 0) work.push_back({lo, hi, total});
  while (!work.empty()) {
    Segment s = work.back();
    work.pop_back();
    if (s.count == 1) {
      isolated.push_back(s);
      continue;
    }
    mpq_class mid = (s.a + s.b) / 2;
    int left = detail::sign_variations(chain, s.a) - detail::sign_variations(chain, mid);
    int right = s.count - left;
    if (left > 0) work.push_back({s.a, mid, left});
    if (right > 0) work.push_back({mid, s.b, right});
  }
  std::sort(isolated.begin(), isolated.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });

  IntPolynomial dp = p.derivative();
  std::vector<Ball> roots;
  roots.reserve(isolated.size());
  for (auto& seg : isolated) {
    // roots counted in (a, b]: an exact rational root can only sit at b
    if (p.sign_at(seg.b) == 0) {
      roots.push_back(Ball::from_rational(seg.b, prec + 32));
      continue;
    }
    // shrink by exact bisection until the enclosure is comfortably small
    mpq_class a = seg.a, b = seg.b;
    int sb = p.sign_at(b);
    for (int i = 0; i < 48; ++i) {
      mpq_class mid = (a + b) / 2;
      int sm = p.sign_at(mid);
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == sb)
        b = mid;
      else
        a = mid;
    }
    if (a == b) {
      roots.push_back(Ball::from_rational(a, prec + 32));
      continue;
    }
    // Interval-Newton polish at working precision.  The center is always an
    // exact dyadic inside the current enclosure, so the mean-value point of
    // the Newton step is covered by the derivative enclosure.
    const mpfr_prec_t wp = prec + 32;
    Ball enc = Ball::from_endpoints(a, b, wp);
    mpq_class target(1);
    target >>= static_cast<unsigned long>(prec);
    for (int iter = 0; iter < 64; ++iter) {
      Ball deriv = dp.eval(enc);
      if (deriv.contains_zero()) break;  // fall back to whatever we have
      mpq_class cmid = (enc.inf_rational() + enc.sup_rational()) / 2;
      Ball center = Ball::from_rational(cmid, wp);
      Ball candidate = center - p.eval(center) / deriv;
      auto next = enc.intersect(candidate);
      if (!next) break;
      if (next->same_enclosure(enc)) break;
      enc = *next;
      Ball width = enc - enc;  // symmetric interval of twice the width
      if (width.abs().less_than(target) == Tristate::yes) break;
    }
    roots.push_back(enc);
  }
  return roots;
}

}  // namespace bakerkit
