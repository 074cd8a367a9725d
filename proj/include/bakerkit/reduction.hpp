#pragma once

// Certified continued-fraction expansion of Ball-valued irrationals and the
// Dujella-Petho reduction: for a convergent p/q of tau with q > 6M and
// epsilon := ||mu q|| - M ||tau q|| > 0 there is no solution of
// 0 < |u tau - v + mu| < A B^{-w} with u <= M and w >= log(A q / epsilon) / log B.

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bakerkit/ball.hpp"

namespace bakerkit {

// A recipe producing enclosures of one real number at any requested
// precision; re-evaluated whenever certification needs to escalate.
struct RealSpec {
  std::function<Ball(mpfr_prec_t)> eval;
  std::string description;

  Ball operator()(mpfr_prec_t prec) const { return eval(prec); }

  static RealSpec exact(const mpq_class& v, std::string name = {}) {
    return {[v](mpfr_prec_t p) { return Ball::from_rational(v, p); },
            name.empty() ? v.get_str() : std::move(name)};
  }
};

struct ContinuedFraction {
  std::vector<mpz_class> partial_quotients;
  struct Convergent {
    mpz_class p, q;
  };
  std::vector<Convergent> convergents;  // convergents[i] built from quotients [0..i]
  mpfr_prec_t certified_precision = 0;
};

// Expands `terms` certified partial quotients of value; every floor is
// certified (the argument interval never straddles an integer) with
// automatic precision escalation.
inline ContinuedFraction continued_fraction(const RealSpec& value, int terms,
                                            const PrecisionPolicy& policy) {
  if (terms < 1) throw std::invalid_argument("continued_fraction: need at least one term");
  auto attempt = [&](mpfr_prec_t prec) -> std::optional<ContinuedFraction> {
    ContinuedFraction cf;
    cf.certified_precision = prec;
    Ball x = value(prec);
    for (int i = 0; i < terms; ++i) {
      auto a = x.certified_floor();
      if (!a) return std::nullopt;
      cf.partial_quotients.push_back(*a);
      if (i + 1 == terms) break;
      Ball frac = x - Ball::from_integer(*a, prec);
      if (!frac.is_strictly_positive()) {
        if (frac.is_exact() && frac.contains_zero())
          throw CertificationError("continued_fraction: value appears rational after " +
                                   std::to_string(i + 1) + " terms");
        return std::nullopt;
      }
      x = Ball::from_int(1, prec) / frac;
    }
    mpz_class pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;  // p_{-1}, p_{-2}, q_{-1}, q_{-2}
    for (const auto& a : cf.partial_quotients) {
      mpz_class p = a * pm1 + pm2;
      mpz_class q = a * qm1 + qm2;
      cf.convergents.push_back({p, q});
      pm2 = pm1;
      pm1 = p;
      qm2 = qm1;
      qm1 = q;
    }
    return cf;
  };
  return with_precision_escalation(policy, attempt);
}

struct ReductionInstance {
  RealSpec tau;
  RealSpec mu;
  RealSpec A;  // > 0
  RealSpec B;  // > 1
  mpz_class M;  // positive integer bound on u
};

enum class ReductionStatus { success, epsilon_nonpositive, precision_exhausted };

inline const char* to_string(ReductionStatus s) {
  switch (s) {
    case ReductionStatus::success: return "SUCCESS";
    case ReductionStatus::epsilon_nonpositive: return "EPSILON_NONPOSITIVE";
    default: return "PRECISION_EXHAUSTED";
  }
}

struct ReductionResult {
  ReductionStatus status = ReductionStatus::precision_exhausted;
  int convergent_index = -1;
  mpz_class q;
  Ball epsilon;
  Ball w_bound;  // log(A q / epsilon) / log B
  mpfr_prec_t precision_used = 0;

  // Largest integer w NOT excluded, i.e. ceil(sup(w_bound)) - 1.
  mpz_class max_admissible_w() const { return w_bound.ceil_upper() - 1; }
};

struct ReductionOptions {
  // Scan convergents in increasing index starting from the first with
  // q > 6M; a forced index pins the reduction to that convergent alone.
  std::optional<int> forced_index;
};

inline ReductionResult dp_reduce(const ReductionInstance& inst, const ContinuedFraction& cf,
                                 const PrecisionPolicy& policy, ReductionOptions options = {}) {
  if (inst.M <= 0) throw std::invalid_argument("dp_reduce: M must be positive");
  const mpz_class six_m = 6 * inst.M;
  auto attempt = [&](mpfr_prec_t prec) -> std::optional<ReductionResult> {
    Ball tau = inst.tau(prec);
    Ball mu = inst.mu(prec);
    Ball A = inst.A(prec);
    Ball B = inst.B(prec);
    if (!A.is_strictly_positive())
      throw CertificationError("dp_reduce: A > 0 not certified");
    if (B.greater_than(mpq_class(1)) != Tristate::yes)
      throw CertificationError("dp_reduce: B > 1 not certified");
    bool saw_unknown = false;
    for (int idx = 0; idx < static_cast<int>(cf.convergents.size()); ++idx) {
      if (options.forced_index && idx != *options.forced_index) continue;
      const auto& conv = cf.convergents[idx];
      if (conv.q <= six_m) {
        if (options.forced_index)
          throw std::invalid_argument("dp_reduce: forced convergent has q <= 6M");
        continue;
      }
      Ball qb = Ball::from_integer(conv.q, prec);
      Ball eps = Ball::nearest_int_distance(mu * qb) -
                 Ball::from_integer(inst.M, prec) * Ball::nearest_int_distance(tau * qb);
      Tristate positive;
      if (eps.greater_than(mpq_class(0)) == Tristate::yes)
        positive = Tristate::yes;
      else if (mpfr_sgn(eps.sup()) <= 0)  // no point of the enclosure is positive
        positive = Tristate::no;
      else
        positive = Tristate::unknown;
      if (positive == Tristate::unknown) {
        saw_unknown = true;
        break;  // sharper enclosures needed before any verdict
      }
      if (positive == Tristate::no) {
        if (options.forced_index) {
          ReductionResult r;
          r.status = ReductionStatus::epsilon_nonpositive;
          r.convergent_index = idx;
          r.q = conv.q;
          r.epsilon = eps;
          r.precision_used = prec;
          return r;
        }
        continue;  // certified nonpositive: advance to the next convergent
      }
      ReductionResult r;
      r.status = ReductionStatus::success;
      r.convergent_index = idx;
      r.q = conv.q;
      r.epsilon = eps;
      r.w_bound = log(A * qb / eps) / log(B);
      r.precision_used = prec;
      return r;
    }
    if (saw_unknown) return std::nullopt;
    ReductionResult r;
    r.status = ReductionStatus::epsilon_nonpositive;
    r.precision_used = prec;
    return r;
  };
  try {
    return with_precision_escalation(policy, attempt);
  } catch (const PrecisionExhausted&) {
    ReductionResult r;
    r.status = ReductionStatus::precision_exhausted;
    r.precision_used = policy.cap;
    return r;
  }
}

}  // namespace bakerkit
