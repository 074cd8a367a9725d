#pragma once

// Exact big-integer generators and membership tests for the Narayana's cows
// sequence (N_0=0, N_1=N_2=1, N_{m+3}=N_{m+2}+N_m) and the Fibonacci
// sequence, plus certified growth and Binet-error envelopes.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "bakerkit/ball.hpp"
#include "bakerkit/polynomial.hpp"

namespace bakerkit {

enum class SequenceKind { narayana, fibonacci };

struct SequenceSpec {
  int order;
  std::vector<mpz_class> initial_terms;
  std::vector<mpz_class> recurrence;  // next = sum recurrence[i] * term[len-1-i]
};

inline SequenceSpec sequence_spec(SequenceKind kind) {
  if (kind == SequenceKind::narayana)
    return {3, {mpz_class(0), mpz_class(1), mpz_class(1)},
            {mpz_class(1), mpz_class(0), mpz_class(1)}};
  return {2, {mpz_class(0), mpz_class(1)}, {mpz_class(1), mpz_class(1)}};
}

inline mpz_class sequence_term(SequenceKind kind, unsigned long index) {
  SequenceSpec spec = sequence_spec(kind);
  if (index < spec.initial_terms.size()) return spec.initial_terms[index];
  std::vector<mpz_class> window = spec.initial_terms;
  for (unsigned long i = window.size(); i <= index; ++i) {
    mpz_class next = 0;
    for (int j = 0; j < spec.order; ++j)
      next += spec.recurrence[j] * window[window.size() - 1 - j];
    for (std::size_t j = 0; j + 1 < window.size(); ++j) window[j] = window[j + 1];
    window.back() = next;
  }
  return window.back();
}

inline mpz_class narayana(unsigned long m) { return sequence_term(SequenceKind::narayana, m); }
inline mpz_class fibonacci(unsigned long n) { return sequence_term(SequenceKind::fibonacci, n); }

// F_1 .. F_count as a table (index 0 unused slot holds F_0 = 0).
inline std::vector<mpz_class> fibonacci_table(unsigned long count) {
  std::vector<mpz_class> f(count + 1);
  if (count >= 1) f[1] = 1;
  for (unsigned long i = 2; i <= count; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

// Smallest n >= 1 with F_n = v, or absent.  F_1 = F_2 = 1 resolves to 1.
inline std::optional<unsigned long> fibonacci_index(const mpz_class& v) {
  if (v < 1) throw std::invalid_argument("fibonacci_index: argument must be >= 1");
  mpz_class a = 1, b = 1;  // F_1, F_2
  unsigned long n = 1;
  while (a < v) {
    mpz_class next = a + b;
    a = b;
    b = next;
    ++n;
  }
  if (a == v) return n;
  return std::nullopt;
}

namespace detail {

struct SequenceConstants {
  Ball alpha;   // dominant root of x^3 - x^2 - 1
  Ball a;       // Binet coefficient of the Narayana sequence, root of 31x^3 - 3x - 1
  Ball gamma;   // golden ratio
};

// Local root extraction; the algebraic module offers the richer interface.
inline SequenceConstants sequence_constants(mpfr_prec_t prec) {
  auto alpha_roots = isolate_real_roots(IntPolynomial::from_ints({-1, 0, -1, 1}), prec);
  auto a_roots = isolate_real_roots(IntPolynomial::from_ints({-1, -3, 0, 31}), prec);
  Ball gamma = (Ball::from_int(1, prec) + sqrt(Ball::from_int(5, prec))) /
               Ball::from_int(2, prec);
  return {alpha_roots.at(0), a_roots.at(0), gamma};
}

}  // namespace detail

// Certifies |N_m - a*alpha^m| < 0.558 * alpha^(-m/2).  UNKNOWN after
// escalation is reported as a certification failure, not as falsity.
inline Tristate binet_error_check(unsigned long m, const PrecisionPolicy& policy) {
  if (m < 1) throw std::invalid_argument("binet_error_check: m must be >= 1");
  mpz_class nm = narayana(m);
  // the difference cancels ~0.83*m leading bits, so start high enough
  PrecisionPolicy local = policy;
  local.initial = std::max<mpfr_prec_t>(policy.initial,
                                        static_cast<mpfr_prec_t>(m) * 5 / 6 + 64);
  if (local.initial > local.cap) local.cap = local.initial;
  return with_precision_escalation(local, [&](mpfr_prec_t prec) -> std::optional<Tristate> {
    auto c = detail::sequence_constants(prec);
    Ball err = (Ball::from_integer(nm, prec) - c.a * c.alpha.pow_int(static_cast<long>(m))).abs();
    Ball bound = Ball::from_rational(mpz_class(558), mpz_class(1000), prec) *
                 sqrt(c.alpha).pow_int(-static_cast<long>(m));
    Tristate t = certify_lt(err, bound);
    if (t == Tristate::unknown) return std::nullopt;
    return t;
  });
}

// Certified growth sandwich.  Fibonacci: gamma^(i-2) <= F_i <= gamma^(i-1).
// Narayana: alpha^(i-3) <= N_i <= alpha^(i-1); the lower exponent reflects
// the true envelope a > alpha^(-3) of this indexing (a < alpha^(-2), so an
// (i-2) lower exponent would fail from i = 3 on).
inline Tristate growth_bounds_check(SequenceKind kind, unsigned long i,
                                    const PrecisionPolicy& policy) {
  if (i < 2) throw std::invalid_argument("growth_bounds_check: index must be >= 2");
  mpz_class term = sequence_term(kind, i);
  return with_precision_escalation(policy, [&](mpfr_prec_t prec) -> std::optional<Tristate> {
    auto c = detail::sequence_constants(prec);
    const Ball& root = (kind == SequenceKind::narayana) ? c.alpha : c.gamma;
    long lower_exp = (kind == SequenceKind::narayana) ? static_cast<long>(i) - 3
                                                      : static_cast<long>(i) - 2;
    Ball lower = root.pow_int(lower_exp);
    Ball upper = root.pow_int(static_cast<long>(i) - 1);
    Tristate lo = lower.le_integer(term);
    Tristate hi = upper.ge_integer(term);
    if (lo == Tristate::unknown || hi == Tristate::unknown) return std::nullopt;
    if (lo == Tristate::yes && hi == Tristate::yes) return Tristate::yes;
    return Tristate::no;
  });
}

}  // namespace bakerkit
