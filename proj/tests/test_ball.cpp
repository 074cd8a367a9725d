#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <vector>

#include "bakerkit/ball.hpp"
#include "oracle.hpp"

using namespace bakerkit;

TEST_CASE("ball_from_rational basics") {
  Ball half = Ball::from_rational(mpz_class(1), mpz_class(2), 64);
  CHECK(half.is_exact());
  CHECK(half.contains(mpq_class(1, 2)));

  Ball third = Ball::from_rational(mpz_class(1), mpz_class(3), 64);
  CHECK_FALSE(third.is_exact());
  CHECK(third.contains(mpq_class(1, 3)));
  // radius stays within one unit in the last place
  mpq_class width = third.sup_rational() - third.inf_rational();
  mpq_class ulp_bound(1);
  ulp_bound >>= 62;
  CHECK(width <= ulp_bound);

  mpz_class p72(oracle::kP72), q72(oracle::kQ72);
  Ball conv = Ball::from_rational(p72, q72, 256);
  CHECK(conv.contains(mpq_class(p72, q72)));

  CHECK_THROWS_AS(Ball::from_rational(mpz_class(1), mpz_class(0), 64), std::invalid_argument);
}

TEST_CASE("ball log") {
  Ball one = Ball::from_int(1, 96);
  Ball l1 = log(one);
  CHECK(l1.contains(mpq_class(0)));
  CHECK(l1.sup_rational() - l1.inf_rational() <= oracle::q("1e-20"));

  Ball gamma = (Ball::from_int(1, 128) + sqrt(Ball::from_int(5, 128))) / Ball::from_int(2, 128);
  CHECK(oracle::agrees_with(log(gamma), oracle::kLogGamma, 35));
  // independent higher-precision evaluation nests inside
  Ball gamma_hi =
      (Ball::from_int(1, 512) + sqrt(Ball::from_int(5, 512))) / Ball::from_int(2, 512);
  CHECK(log(gamma).contains(log(gamma_hi)));

  // log alpha lies strictly inside (log 1.465, log 1.466)
  Ball alpha = Ball::from_decimal_parts({"1.4655712318767680266567312252", "1e-28", 128});
  Ball la = log(alpha);
  CHECK(certify_lt(log(Ball::from_rational(mpz_class(1465), mpz_class(1000), 128)), la) ==
        Tristate::yes);
  CHECK(certify_lt(la, log(Ball::from_rational(mpz_class(1466), mpz_class(1000), 128))) ==
        Tristate::yes);

  CHECK_THROWS_AS(log(Ball::from_int(0, 64)), std::domain_error);
  CHECK_THROWS_AS(log(Ball::from_endpoints(mpq_class(-1), mpq_class(2), 64)), std::domain_error);
}

TEST_CASE("certify_lt tri-state") {
  Ball a = Ball::from_endpoints(oracle::q("0.259"), oracle::q("0.261"), 64);
  Ball b = Ball::from_endpoints(oracle::q("0.269"), oracle::q("0.271"), 64);
  CHECK(certify_lt(a, b) == Tristate::yes);
  Ball c = Ball::from_endpoints(oracle::q("0.3"), oracle::q("0.7"), 64);
  Ball d = Ball::from_endpoints(oracle::q("0.3"), oracle::q("0.7"), 64);
  CHECK(certify_lt(c, d) == Tristate::unknown);
  Ball e = Ball::from_endpoints(oracle::q("1"), oracle::q("2"), 64);
  Ball f = Ball::from_endpoints(oracle::q("0"), oracle::q("0.5"), 64);
  CHECK(certify_lt(e, f) == Tristate::no);
}

TEST_CASE("pow_int case analysis") {
  Ball x = Ball::from_endpoints(oracle::q("-2"), oracle::q("3"), 96);
  Ball sq = x.pow_int(2);
  CHECK(sq.contains(mpq_class(0)));
  CHECK(sq.contains(mpq_class(9)));
  CHECK(sq.contains(mpq_class(4)));
  CHECK_FALSE(sq.contains(mpq_class(10)));

  Ball cu = x.pow_int(3);
  CHECK(cu.contains(mpq_class(-8)));
  CHECK(cu.contains(mpq_class(27)));

  CHECK(x.pow_int(0).contains(mpq_class(1)));
  CHECK(x.pow_int(0).is_exact());

  Ball pos = Ball::from_endpoints(oracle::q("0.5"), oracle::q("2"), 96);
  Ball inv = pos.pow_int(-2);
  CHECK(inv.contains(mpq_class(4)));
  CHECK(inv.contains(mpq_class(1, 4)));
  Ball neg = Ball::from_endpoints(oracle::q("-2"), oracle::q("-1"), 96);
  CHECK(neg.pow_int(-1).contains(mpq_class(-1, 2)));
  CHECK(neg.pow_int(-2).contains(mpq_class(1, 4)));
  CHECK_THROWS_AS(x.pow_int(-1), std::domain_error);
}

TEST_CASE("nearest integer distance") {
  Ball five = Ball::from_int(5, 96);
  Ball d0 = Ball::nearest_int_distance(five);
  CHECK(d0.contains(mpq_class(0)));
  CHECK(d0.less_than(mpq_class(1, 1000000)) == Tristate::yes);

  Ball half = Ball::from_rational(mpz_class(7), mpz_class(2), 96);
  CHECK(Ball::nearest_int_distance(half).contains(mpq_class(1, 2)));

  Ball x = Ball::from_endpoints(oracle::q("3.2499"), oracle::q("3.2501"), 96);
  Ball dx = Ball::nearest_int_distance(x);
  CHECK(dx.contains(mpq_class(1, 4)));
  CHECK(dx.greater_than(mpq_class(24, 100)) == Tristate::yes);

  Ball spanning = Ball::from_endpoints(oracle::q("3.9"), oracle::q("4.1"), 96);
  Ball ds = Ball::nearest_int_distance(spanning);
  CHECK(ds.contains(mpq_class(0)));
  CHECK(ds.less_than(mpq_class(11, 100)) == Tristate::yes);

  Ball wide = Ball::from_endpoints(oracle::q("0"), oracle::q("7"), 96);
  Ball dw = Ball::nearest_int_distance(wide);
  CHECK(dw.contains(mpq_class(0)));
  CHECK(dw.contains(mpq_class(1, 2)));
}

TEST_CASE("certified floor") {
  CHECK(*Ball::from_endpoints(oracle::q("2.2"), oracle::q("2.4"), 64).certified_floor() == 2);
  CHECK(*Ball::from_int(5, 64).certified_floor() == 5);
  CHECK_FALSE(
      Ball::from_endpoints(oracle::q("1.9"), oracle::q("2.1"), 64).certified_floor().has_value());
  CHECK(*Ball::from_endpoints(oracle::q("-2.5"), oracle::q("-2.4"), 64).certified_floor() == -3);
}

namespace {

// random positive expression tree, evaluated at any precision
struct Expr {
  std::function<Ball(mpfr_prec_t)> eval;
};

Expr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> leaf_num(1, 1000), leaf_den(1, 1000), op(0, 5);
  if (depth == 0 || op(rng) == 5) {
    mpz_class p = leaf_num(rng), q = leaf_den(rng);
    return {[p, q](mpfr_prec_t prec) { return Ball::from_rational(p, q, prec); }};
  }
  Expr a = random_expr(rng, depth - 1);
  Expr b = random_expr(rng, depth - 1);
  switch (op(rng)) {
    case 0:
      return {[a, b](mpfr_prec_t p) { return a.eval(p) + b.eval(p); }};
    case 1:
      return {[a, b](mpfr_prec_t p) { return a.eval(p) * b.eval(p); }};
    case 2:
      return {[a, b](mpfr_prec_t p) { return a.eval(p) / b.eval(p); }};
    case 3:
      return {[a](mpfr_prec_t p) { return sqrt(a.eval(p)); }};
    default:
      return {[a](mpfr_prec_t p) { return log(a.eval(p) + Ball::from_int(1, p)); }};
  }
}

}  // namespace

TEST_CASE("containment under refinement, randomized") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 250; ++trial) {
    Expr e = random_expr(rng, 4);
    Ball low = e.eval(64);
    Ball mid = e.eval(128);
    Ball high = e.eval(512);
    CHECK(low.contains(mid));
    CHECK(mid.contains(high));
    // soundness of comparisons under refinement: never contradictory
    Expr f = random_expr(rng, 3);
    Ball flow = f.eval(64), fhigh = f.eval(512);
    Tristate t1 = certify_lt(low, flow);
    Tristate t2 = certify_lt(high, fhigh);
    if (t1 != Tristate::unknown && t2 != Tristate::unknown) CHECK(t1 == t2);
  }
}

TEST_CASE("exp(log(x)) contains x for positive rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 100000), den(1, 100000);
  for (int i = 0; i < 200; ++i) {
    mpz_class p = num(rng), q = den(rng);
    Ball x = Ball::from_rational(p, q, 128);
    CHECK(exp(log(x)).contains(mpq_class(p, q)));
  }
}

TEST_CASE("decimal parts round-trip exactly") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-100000, 100000), den(1, 100000);
  for (int i = 0; i < 100; ++i) {
    Ball x = Ball::from_rational(mpz_class(num(rng)), mpz_class(den(rng)), 96);
    Ball y = log(x.abs() + Ball::from_int(1, 96)) - x * x;
    Ball back = Ball::from_decimal_parts(y.to_decimal_parts());
    CHECK(back.same_enclosure(y));
  }
}

TEST_CASE("interval min max hull intersect") {
  Ball a = Ball::from_endpoints(oracle::q("1"), oracle::q("3"), 64);
  Ball b = Ball::from_endpoints(oracle::q("2"), oracle::q("5"), 64);
  CHECK(Ball::max(a, b).contains(mpq_class(5)));
  CHECK(Ball::min(a, b).contains(mpq_class(1)));
  CHECK(Ball::hull(a, b).contains(mpq_class(1)));
  CHECK(Ball::hull(a, b).contains(mpq_class(5)));
  auto isect = a.intersect(b);
  REQUIRE(isect.has_value());
  CHECK(isect->contains(mpq_class(5, 2)));
  Ball far = Ball::from_endpoints(oracle::q("10"), oracle::q("11"), 64);
  CHECK_FALSE(a.intersect(far).has_value());
}
