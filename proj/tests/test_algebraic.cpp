#include <catch2/catch_amalgamated.hpp>

#include "bakerkit/algebraic.hpp"
#include "oracle.hpp"

using namespace bakerkit;

TEST_CASE("weil heights of the three core constants") {
  auto gamma = make_algebraic(IntPolynomial::from_ints({-1, -1, 1}), 1, 192);
  Ball hg = weil_height(gamma);
  CHECK(hg.greater_than(oracle::q("0.240")) == Tristate::yes);
  CHECK(hg.less_than(oracle::q("0.241")) == Tristate::yes);
  CHECK(oracle::agrees_with(hg, oracle::kHGamma, 40));

  auto alpha = make_algebraic(IntPolynomial::from_ints({-1, 0, -1, 1}), 0, 192);
  Ball ha = weil_height(alpha);
  CHECK(ha.greater_than(oracle::q("0.127")) == Tristate::yes);
  CHECK(ha.less_than(oracle::q("0.128")) == Tristate::yes);
  CHECK(oracle::agrees_with(ha, oracle::kHAlpha, 40));

  // all conjugates of `a` stay inside the unit circle, so h(a) = (1/3) log 31
  auto a = make_algebraic(IntPolynomial::from_ints({-1, -3, 0, 31}), 0, 192);
  for (const auto& mod : a.conjugate_moduli)
    CHECK(mod.less_than(mpq_class(1)) == Tristate::yes);
  Ball haa = weil_height(a);
  Ball log31_third = log(Ball::from_int(31, 512)) / Ball::from_int(3, 512);
  CHECK(haa.contains(log31_third));
  CHECK(oracle::agrees_with(haa, oracle::kHA, 40));
}

TEST_CASE("height of rationals") {
  Ball h5 = height_of_rational(5, 1, 192);
  Ball log5 = log(Ball::from_int(5, 512));
  CHECK(h5.contains(log5));
  CHECK(height_of_rational(1, 1, 192).contains(mpq_class(0)));
  Ball h132 = height_of_rational(13, 2, 192);
  CHECK(h132.contains(log(Ball::from_int(13, 512))));
  CHECK_THROWS_AS(height_of_rational(6, 4, 192), std::invalid_argument);
  CHECK_THROWS_AS(height_of_rational(0, 1, 192), std::invalid_argument);
}

TEST_CASE("height combination rules") {
  const mpfr_prec_t prec = 192;
  auto a = make_algebraic(IntPolynomial::from_ints({-1, -3, 0, 31}), 0, prec);
  Ball h5a = height_combine(HeightRule::product, {height_of_rational(5, 1, prec), weil_height(a)});
  CHECK(h5a.less_than(oracle::q("2.755")) == Tristate::yes);
  CHECK(oracle::agrees_with(h5a, oracle::kH5aBound, 40));

  CHECK(height_combine(HeightRule::power, {h5a}, 0).contains(mpq_class(0)));
  Ball doubled = height_combine(HeightRule::power, {h5a}, -2);
  CHECK(doubled.contains(h5a.inf_rational() + h5a.sup_rational()));

  Ball hsum = height_combine(HeightRule::sum, {height_of_rational(5, 1, prec),
                                               height_of_rational(3, 1, prec)});
  Ball expect = log(Ball::from_int(5, prec)) + log(Ball::from_int(3, prec)) +
                log(Ball::from_int(2, prec));
  CHECK(hsum.overlaps(expect));

  // h(sqrt5 a / F_n) bound at n = 86 stays below 2 n log gamma
  auto sqrt5 = make_algebraic(IntPolynomial::from_ints({-5, 0, 1}), 1, prec);
  Ball log_gamma = log((Ball::from_int(1, prec) + sqrt(Ball::from_int(5, prec))) /
                       Ball::from_int(2, prec));
  Ball family = height_combine(HeightRule::product, {weil_height(sqrt5), weil_height(a)}) +
                Ball::from_int(85, prec) * log_gamma;
  CHECK(certify_lt(family, Ball::from_int(2 * 86, prec) * log_gamma) == Tristate::yes);
}

TEST_CASE("reducible or unsupported minimal polynomials are rejected") {
  CHECK_THROWS_AS(make_algebraic(IntPolynomial::from_ints({-1, 0, 1}), 0, 96),
                  std::invalid_argument);  // x^2 - 1 = (x-1)(x+1)
  CHECK_THROWS_AS(make_algebraic(IntPolynomial::from_ints({1, -2, 1}), 0, 96),
                  std::invalid_argument);  // (x-1)^2
  CHECK_THROWS_AS(make_algebraic(IntPolynomial::from_ints({-2, 1, 0, 0, 1}), 0, 96),
                  std::invalid_argument);  // degree 4 unsupported
}

TEST_CASE("constants table certifications") {
  ConstantsTable t = build_constants(mpfr_prec_t(192));
  CHECK(oracle::agrees_with(t.alpha.root_box, oracle::kAlpha, 48));
  CHECK(oracle::agrees_with(t.gamma.root_box, oracle::kGamma, 48));
  CHECK(oracle::agrees_with(t.a.root_box, oracle::kA, 48));
  CHECK(oracle::agrees_with(t.abs_beta, oracle::kAbsBeta, 45));
  CHECK(oracle::agrees_with(t.abs_b, oracle::kAbsB, 45));
  CHECK(oracle::agrees_with(t.log_alpha, oracle::kLogAlpha, 45));
  CHECK(oracle::agrees_with(t.log_gamma, oracle::kLogGamma, 45));
  CHECK(oracle::agrees_with(t.tau, oracle::kTau, 45));
  CHECK(oracle::agrees_with(t.ratio, oracle::kRatio, 45));
  CHECK(oracle::agrees_with(t.sqrt5, oracle::kSqrt5, 45));

  CHECK((t.abs_beta.pow_int(2) * t.alpha.root_box).contains(mpq_class(1)));
  CHECK((t.gamma.root_box * t.delta).contains(mpq_class(-1)));
  CHECK(Ball::max(t.a.root_box.abs(), t.abs_b).less_than(mpq_class(1, 2)) == Tristate::yes);

  // 31 a^3 - 3a - 1 = 0 within the enclosure
  Ball identity = Ball::from_int(31, 192) * t.a.root_box.pow_int(3) -
                  Ball::from_int(3, 192) * t.a.root_box - Ball::from_int(1, 192);
  CHECK(identity.contains(mpq_class(0)));

  // a also equals alpha^2/(alpha^3 + 2)
  Ball expr = t.alpha.root_box.pow_int(2) /
              (t.alpha.root_box.pow_int(3) + Ball::from_int(2, 192));
  CHECK(t.a.root_box.overlaps(expr));
}

TEST_CASE("heights nest under refinement") {
  auto coarse = weil_height(make_algebraic(IntPolynomial::from_ints({-1, 0, -1, 1}), 0, 128));
  auto fine = weil_height(make_algebraic(IntPolynomial::from_ints({-1, 0, -1, 1}), 0, 512));
  CHECK(coarse.contains(fine));
}

TEST_CASE("constants escalate under a policy") {
  ConstantsTable t = build_constants(PrecisionPolicy{64, 1024});
  CHECK(t.precision >= 64);
  CHECK(t.alpha.root_box.greater_than(oracle::q("1.465")) == Tristate::yes);
}
