#pragma once

// Evaluators for the two quoted auxiliary results that drive the exponent
// bounds: the Matveev-type lower bound for linear forms in logarithms
// (log|Lambda| > -C * (1 + log B) with C = 1.4 * 30^(t+3) * t^4.5 * d^2 *
// (1 + log d) * A_1...A_t) and the Guzman-Luca fixed-point lemma
// (H > (4l^2)^l and H > L/(log L)^l imply L < 2^l H (log H)^l).

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "bakerkit/ball.hpp"

namespace bakerkit {

struct LinearFormInstance {
  int t = 0;             // number of logarithms
  int field_degree = 0;  // degree of the ambient real number field
  std::optional<Ball> B;  // >= max |b_i|; may stay symbolic
  std::vector<Ball> A;    // A_i >= max{d h(eta_i), |log eta_i|, 0.16}

  LinearFormInstance(int t_, int field_degree_, std::optional<Ball> B_, std::vector<Ball> A_)
      : t(t_), field_degree(field_degree_), B(std::move(B_)), A(std::move(A_)) {
    if (t < 1 || static_cast<std::size_t>(t) != A.size())
      throw std::invalid_argument("LinearFormInstance: need exactly t entries in A");
    if (field_degree < 1) throw std::invalid_argument("LinearFormInstance: bad field degree");
    mpq_class floor016(16, 100);
    for (const auto& a : A)
      if (a.less_than(floor016) == Tristate::yes)
        throw std::invalid_argument("LinearFormInstance: A_i below the 0.16 floor");
    if (B && B->less_than(mpq_class(1)) == Tristate::yes)
      throw std::invalid_argument("LinearFormInstance: B must be >= 1");
  }
};

// C(inst) such that log|Lambda| > -C * (1 + log B); callers use the upper
// endpoint.
inline Ball matveev_coefficient(const LinearFormInstance& inst, mpfr_prec_t prec) {
  Ball c = Ball::from_rational(mpz_class(14), mpz_class(10), prec);
  c = c * Ball::from_int(30, prec).pow_int(inst.t + 3);
  // t^4.5 = sqrt(t^9)
  c = c * sqrt(Ball::from_int(inst.t, prec).pow_int(9));
  Ball d = Ball::from_int(inst.field_degree, prec);
  c = c * d.pow_int(2) * (Ball::from_int(1, prec) + log(d));
  for (const auto& a : inst.A) c = c * a;
  return c;
}

// 2^l * H * (log H)^l.  Contract: if additionally H > L/(log L)^l, then L is
// below the returned bound.
inline Ball guzman_luca_bound(long l, const Ball& H, mpfr_prec_t prec) {
  if (l < 1) throw std::invalid_argument("guzman_luca_bound: l must be >= 1");
  mpz_class threshold;  // (4 l^2)^l
  mpz_class base = 4 * mpz_class(l) * mpz_class(l);
  mpz_pow_ui(threshold.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(l));
  Tristate above = H.greater_than(mpq_class(threshold));
  if (above != Tristate::yes)
    throw std::domain_error("guzman_luca_bound: requires H > (4 l^2)^l = " + threshold.get_str() +
                            (above == Tristate::unknown ? " (undecided at this precision)" : ""));
  return Ball::from_int(2, prec).pow_int(l) * H * log(H).pow_int(l);
}

// Certified upper bound for k subject to k < c * log^l(2k): substitute
// L = 2k, H = 2c and divide the Guzman-Luca bound on L by two.
inline Ball log_inequality_solve(const Ball& c, long l, mpfr_prec_t prec) {
  Ball H = c * Ball::from_int(2, prec);
  Ball L = guzman_luca_bound(l, H, prec);
  return L / Ball::from_int(2, prec);
}

}  // namespace bakerkit
