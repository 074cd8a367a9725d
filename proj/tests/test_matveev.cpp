#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bakerkit/matveev.hpp"
#include "oracle.hpp"

using namespace bakerkit;

namespace {
Ball q_ball(const char* s, mpfr_prec_t prec = 192) {
  return Ball::from_rational(oracle::q(s), prec);
}
}  // namespace

TEST_CASE("coefficient for the first linear form") {
  LinearFormInstance inst(3, 6, std::nullopt,
                          {q_ball("0.768"), q_ball("1.446"), q_ball("16.53")});
  Ball c = matveev_coefficient(inst, 192);
  CHECK(oracle::agrees_with(c, oracle::kMatveevC1, 2));
  CHECK(c.less_than(oracle::q("2.65e14")) == Tristate::yes);
}

TEST_CASE("coefficient with A3 = 12 n log gamma at n = 1") {
  const mpfr_prec_t prec = 192;
  Ball log_gamma = log((Ball::from_int(1, prec) + sqrt(Ball::from_int(5, prec))) /
                       Ball::from_int(2, prec));
  Ball a3 = Ball::from_int(12, prec) * log_gamma;
  LinearFormInstance inst(3, 6, std::nullopt, {q_ball("0.768"), q_ball("1.446"), a3});
  Ball c = matveev_coefficient(inst, prec);
  // proportionality: C / (12 log gamma) recovers the two-entry coefficient
  LinearFormInstance base(3, 6, std::nullopt,
                          {q_ball("0.768"), q_ball("1.446"), Ball::from_int(1, prec)});
  Ball ratio = c / a3;
  CHECK(ratio.overlaps(matveev_coefficient(base, prec)));
  // and stays below the published folded coefficient for this form
  CHECK(certify_lt(c, q_ball("2.018e14") * log_gamma) == Tristate::yes);
}

TEST_CASE("single-log instance evaluates exactly") {
  LinearFormInstance inst(1, 1, std::nullopt, {q_ball("0.16")});
  Ball c = matveev_coefficient(inst, 192);
  CHECK(c.contains(oracle::q("181440")));
  CHECK(c.sup_rational() - c.inf_rational() < oracle::q("1e-30"));
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(LinearFormInstance(2, 6, std::nullopt, {q_ball("1")}), std::invalid_argument);
  CHECK_THROWS_AS(LinearFormInstance(1, 6, std::nullopt, {q_ball("0.15")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LinearFormInstance(1, 0, std::nullopt, {q_ball("1")}), std::invalid_argument);
  CHECK_THROWS_AS(LinearFormInstance(1, 6, q_ball("0.5"), {q_ball("1")}), std::invalid_argument);
  CHECK_NOTHROW(LinearFormInstance(1, 6, q_ball("1"), {q_ball("0.16")}));
}

TEST_CASE("guzman-luca bound") {
  Ball b1 = guzman_luca_bound(2, q_ball("1.264e29"), 192);
  CHECK(b1.greater_than(oracle::q("2.26e33")) == Tristate::yes);
  CHECK(b1.less_than(oracle::q("2.28e33")) == Tristate::yes);
  CHECK((b1 / Ball::from_int(2, 192)).less_than(oracle::q("1.136e33")) == Tristate::yes);

  Ball b2 = guzman_luca_bound(1, q_ball("100"), 192);
  CHECK(oracle::agrees_with(b2, "921.03403719761827360719658", 18));

  CHECK_THROWS_AS(guzman_luca_bound(1, q_ball("4"), 192), std::domain_error);
  CHECK_THROWS_AS(guzman_luca_bound(1, q_ball("3"), 192), std::domain_error);
  CHECK_THROWS_AS(guzman_luca_bound(0, q_ball("10"), 192), std::invalid_argument);
}

TEST_CASE("log inequality solve") {
  Ball k1 = log_inequality_solve(q_ball("6.317e28"), 2, 192);
  CHECK(k1.less_than(oracle::q("1.136e33")) == Tristate::yes);

  Ball k2 = log_inequality_solve(q_ball("1.778e16"), 1, 192);
  CHECK(k2.less_than(oracle::q("5.165e19")) == Tristate::yes);

  Ball k3 = log_inequality_solve(q_ball("10"), 1, 192);
  CHECK(oracle::agrees_with(k3, "59.914645471079817", 10));
  // the bound is an upper envelope for every integer satisfying the inequality
  long best = 0;
  for (long k = 1; k <= 300; ++k) {
    Ball lhs = Ball::from_int(k, 96);
    Ball rhs = Ball::from_int(10, 96) * log(Ball::from_int(2 * k, 96));
    if (certify_lt(lhs, rhs) == Tristate::yes) best = k;
  }
  CHECK(mpq_class(best) <= k3.sup_rational());
}

TEST_CASE("guzman-luca bound dominates H") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> lpick(1, 3);
  std::uniform_real_distribution<double> hexp(3.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    long l = lpick(rng);
    mpz_class threshold = 4 * l * l;
    mpz_pow_ui(threshold.get_mpz_t(), threshold.get_mpz_t(), static_cast<unsigned long>(l));
    mpz_class h_int = threshold + mpz_class(1) + mpz_class(static_cast<long>(hexp(rng) * 1000));
    Ball H = Ball::from_integer(h_int, 128) * Ball::from_int(7, 128);
    Ball bound = guzman_luca_bound(l, H, 128);
    CHECK(certify_lt(H, bound) == Tristate::yes);
  }
}

TEST_CASE("coefficient is monotone in its parameters") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> tpick(1, 4), dpick(1, 8), apick(1, 50);
  for (int i = 0; i < 200; ++i) {
    int t = tpick(rng), d = dpick(rng);
    std::vector<Ball> A;
    for (int j = 0; j < t; ++j)
      A.push_back(Ball::from_rational(mpz_class(16 + apick(rng)), mpz_class(100), 128));
    Ball c0 = matveev_coefficient(LinearFormInstance(t, d, std::nullopt, A), 128);
    // bump one A_i upward
    std::vector<Ball> A2 = A;
    A2[static_cast<std::size_t>(i) % A2.size()] =
        A2[static_cast<std::size_t>(i) % A2.size()] + Ball::from_rational(mpz_class(1), mpz_class(10), 128);
    Ball c1 = matveev_coefficient(LinearFormInstance(t, d, std::nullopt, A2), 128);
    CHECK(c0.inf_rational() <= c1.sup_rational());
    CHECK(certify_lt(c1, c0) != Tristate::yes);
    // larger field degree can only grow the coefficient
    Ball c2 = matveev_coefficient(LinearFormInstance(t, d + 1, std::nullopt, A), 128);
    CHECK(certify_lt(c2, c0) != Tristate::yes);
    // one extra logarithm with the smallest admissible A grows it as well
    std::vector<Ball> A3 = A;
    A3.push_back(Ball::from_rational(mpz_class(16), mpz_class(100), 128));
    Ball c3 = matveev_coefficient(LinearFormInstance(t + 1, d, std::nullopt, A3), 128);
    CHECK(certify_lt(c3, c0) != Tristate::yes);
  }
}
