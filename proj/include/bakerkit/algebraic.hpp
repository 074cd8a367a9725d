#pragma once

// Algebraic numbers (minimal polynomial + isolated real root + conjugate
// moduli), absolute logarithmic Weil heights, and the table of constants
// shared by the whole pipeline.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bakerkit/ball.hpp"
#include "bakerkit/polynomial.hpp"

namespace bakerkit {

namespace detail {

// Rational-root irreducibility test, sufficient for degree <= 3: a cubic or
// quadratic is reducible over Q iff it has a rational root p/q with
// p | constant and q | leading.
inline bool has_rational_root(const IntPolynomial& p) {
  mpz_class c0 = p[0], cd = p.leading();
  if (c0 == 0) return true;
  auto divisors = [](const mpz_class& v) {
    std::vector<mpz_class> out;
    mpz_class a = ::abs(v);
    if (a > 1000000)
      throw std::invalid_argument("irreducibility check limited to small coefficients");
    for (mpz_class d = 1; d * d <= a; ++d)
      if (a % d == 0) {
        out.push_back(d);
        out.push_back(a / d);
      }
    return out;
  };
  for (const auto& num : divisors(c0))
    for (const auto& den : divisors(cd)) {
      mpq_class r(num, den);
      r.canonicalize();
      if (p.eval(r) == 0 || p.eval(-r) == 0) return true;
    }
  return false;
}

inline bool is_irreducible(const IntPolynomial& p) {
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  if (p.degree() > 3)
    throw std::invalid_argument("irreducibility check supports degree <= 3 only");
  return !has_rational_root(p);
}

}  // namespace detail

struct AlgebraicNumber {
  IntPolynomial minpoly;             // primitive, positive leading, irreducible
  Ball root_box;                     // the selected real root
  int degree = 0;
  std::vector<Ball> conjugate_moduli;  // |eta^(i)| for all degree conjugates
};

// Builds the algebraic number given by the real root of `poly` with ascending
// index `root_index`.  Conjugate moduli come from the isolated real roots
// plus, for a single complex pair, the modulus via the product of all roots.
inline AlgebraicNumber make_algebraic(const IntPolynomial& poly, std::size_t root_index,
                                      mpfr_prec_t prec) {
  IntPolynomial p = poly.primitive_part();
  if (!detail::is_irreducible(p))
    throw std::invalid_argument("make_algebraic: reducible minimal polynomial " + p.to_string());
  auto real_roots = isolate_real_roots(p, prec);
  if (root_index >= real_roots.size())
    throw std::invalid_argument("make_algebraic: no real root with that index");
  const int d = p.degree();
  const int complex_count = d - static_cast<int>(real_roots.size());
  if (complex_count != 0 && complex_count != 2)
    throw std::invalid_argument("make_algebraic: unsupported conjugate structure");

  AlgebraicNumber out;
  out.minpoly = p;
  out.root_box = real_roots[root_index];
  out.degree = d;
  for (const auto& r : real_roots) out.conjugate_moduli.push_back(r.abs());
  if (complex_count == 2) {
    // |pair|^2 * prod |real roots| = |c_0 / c_d|
    Ball prod = Ball::from_integer(::abs(p[0]), prec) / Ball::from_integer(::abs(p.leading()), prec);
    for (const auto& r : real_roots) prod = prod / r.abs();
    out.conjugate_moduli.push_back(sqrt(prod));
    out.conjugate_moduli.push_back(out.conjugate_moduli.back());
  }
  return out;
}

// h(eta) = (1/d) (log|a_d| + sum_i max{0, log|eta^(i)|}).
inline Ball weil_height(const AlgebraicNumber& eta) {
  const mpfr_prec_t prec = eta.root_box.precision();
  Ball acc = log(Ball::from_integer(::abs(eta.minpoly.leading()), prec));
  Ball zero = Ball::from_int(0, prec);
  for (const auto& mod : eta.conjugate_moduli) acc = acc + Ball::max(zero, log(mod));
  return acc / Ball::from_int(eta.degree, prec);
}

// h(p/q) = max(log|p|, log|q|) for coprime p, q.
inline Ball height_of_rational(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec) {
  if (p == 0) throw std::invalid_argument("height_of_rational: zero numerator");
  if (q == 0) throw std::invalid_argument("height_of_rational: zero denominator");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::invalid_argument("height_of_rational: arguments must be coprime");
  Ball lp = log(Ball::from_integer(::abs(p), prec).abs());
  Ball lq = log(Ball::from_integer(::abs(q), prec).abs());
  return Ball::max(Ball::max(lp, lq), Ball::from_int(0, prec));
}

enum class HeightRule { sum, product, power };

// Upper-bound combination: h(x+y) <= h(x)+h(y)+log 2, h(xy) <= h(x)+h(y),
// h(x^s) = |s| h(x).
inline Ball height_combine(HeightRule rule, const std::vector<Ball>& inputs, long exponent = 0) {
  if (inputs.empty()) throw std::invalid_argument("height_combine: no inputs");
  const mpfr_prec_t prec = inputs.front().precision();
  switch (rule) {
    case HeightRule::sum: {
      Ball acc = Ball::from_int(0, prec);
      for (const auto& h : inputs) acc = acc + h;
      return acc + log(Ball::from_int(2, prec)) *
                       Ball::from_int(static_cast<long>(inputs.size()) - 1, prec);
    }
    case HeightRule::product: {
      Ball acc = Ball::from_int(0, prec);
      for (const auto& h : inputs) acc = acc + h;
      return acc;
    }
    case HeightRule::power:
      return inputs.front() * Ball::from_int(exponent < 0 ? -exponent : exponent, prec);
  }
  throw std::logic_error("height_combine: bad rule");
}

// Constants of the two sequences, certified at construction.
struct ConstantsTable {
  mpfr_prec_t precision = 0;
  AlgebraicNumber alpha;  // real root of x^3 - x^2 - 1
  AlgebraicNumber gamma;  // positive root of x^2 - x - 1
  AlgebraicNumber a;      // real root of 31x^3 - 3x - 1
  Ball abs_beta;          // = alpha^(-1/2), common modulus of the complex pair
  Ball abs_b;             // modulus of the complex Binet coefficients
  Ball delta;             // (1 - sqrt 5)/2
  Ball sqrt5;
  Ball log_alpha;
  Ball log_gamma;
  Ball tau;    // log alpha / log gamma
  Ball ratio;  // log gamma / log alpha
  Ball h_alpha, h_gamma, h_a;  // Weil heights
};

namespace detail {

inline Tristate all_yes(std::initializer_list<Tristate> checks) {
  bool unknown = false;
  for (Tristate t : checks) {
    if (t == Tristate::no) return Tristate::no;
    if (t == Tristate::unknown) unknown = true;
  }
  return unknown ? Tristate::unknown : Tristate::yes;
}

}  // namespace detail

// Single-precision attempt; returns nullopt when a certification is
// undecided at this precision (the escalating overload retries).
inline std::optional<ConstantsTable> try_build_constants(mpfr_prec_t prec) {
  ConstantsTable t;
  t.precision = prec;
  t.alpha = make_algebraic(IntPolynomial::from_ints({-1, 0, -1, 1}), 0, prec);
  t.gamma = make_algebraic(IntPolynomial::from_ints({-1, -1, 1}), 1, prec);
  t.a = make_algebraic(IntPolynomial::from_ints({-1, -3, 0, 31}), 0, prec);
  t.abs_beta = sqrt(t.alpha.root_box).pow_int(-1);
  t.abs_b = t.a.conjugate_moduli.at(1);
  t.sqrt5 = sqrt(Ball::from_int(5, prec));
  t.delta = (Ball::from_int(1, prec) - t.sqrt5) / Ball::from_int(2, prec);
  t.log_alpha = log(t.alpha.root_box);
  t.log_gamma = log(t.gamma.root_box);
  t.tau = t.log_alpha / t.log_gamma;
  t.ratio = t.log_gamma / t.log_alpha;
  t.h_alpha = weil_height(t.alpha);
  t.h_gamma = weil_height(t.gamma);
  t.h_a = weil_height(t.a);

  // a both from its minimal polynomial and from alpha^2/(alpha^3+2)
  Ball a_expr = t.alpha.root_box.pow_int(2) /
                (t.alpha.root_box.pow_int(3) + Ball::from_int(2, prec));
  if (!t.a.root_box.overlaps(a_expr))
    throw CertificationError("constants: the two routes to `a` do not overlap");

  auto q = [](long num, long den) { return mpq_class(num, den); };
  Ball half = Ball::from_rational(mpz_class(1), mpz_class(2), prec);
  Tristate ok = detail::all_yes({
      t.alpha.root_box.greater_than(q(1465, 1000)),
      t.alpha.root_box.less_than(q(1466, 1000)),
      t.abs_beta.greater_than(q(826, 1000)),
      t.abs_beta.less_than(q(827, 1000)),
      t.a.root_box.greater_than(q(417, 1000)),
      t.a.root_box.less_than(q(418, 1000)),
      t.abs_b.greater_than(q(278, 1000)),
      t.abs_b.less_than(q(279, 1000)),
      certify_lt(Ball::max(t.a.root_box.abs(), t.abs_b.abs()), half),
      // |beta|^2 * alpha = 1 and gamma*delta = -1 hold within tolerance
      (t.abs_beta.pow_int(2) * t.alpha.root_box).contains(mpq_class(1)) ? Tristate::yes
                                                                        : Tristate::unknown,
      (t.gamma.root_box * t.delta).contains(mpq_class(-1)) ? Tristate::yes : Tristate::unknown,
  });
  if (ok == Tristate::no) throw CertificationError("constants: a certified range check failed");
  if (ok == Tristate::unknown) return std::nullopt;
  return t;
}

inline ConstantsTable build_constants(mpfr_prec_t prec) {
  auto t = try_build_constants(prec);
  if (!t)
    throw CertificationError("constants: certification undecided at precision " +
                             std::to_string(prec));
  return *t;
}

inline ConstantsTable build_constants(const PrecisionPolicy& policy) {
  return with_precision_escalation(policy, [](mpfr_prec_t p) { return try_build_constants(p); });
}

}  // namespace bakerkit
