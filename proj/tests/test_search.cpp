#include <catch2/catch_amalgamated.hpp>

#include "bakerkit/search.hpp"

using namespace bakerkit;

namespace {
const std::vector<std::array<unsigned long, 3>> kExpected{
    {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 1, 1}, {2, 1, 2}, {2, 2, 2},
    {3, 1, 1}, {3, 1, 2}, {3, 2, 2}, {4, 1, 3}, {4, 2, 3}, {5, 1, 4},
    {5, 2, 4}, {6, 3, 3}, {7, 3, 4}, {8, 4, 4}, {9, 1, 7}, {9, 2, 7}};
}

TEST_CASE("the full search reproduces the eighteen solutions") {
  auto sols = find_products(438, 86, 174);
  REQUIRE(sols.size() == kExpected.size());
  for (std::size_t i = 0; i < sols.size(); ++i) {
    CHECK(sols[i].m == kExpected[i][0]);
    CHECK(sols[i].n == kExpected[i][1]);
    CHECK(sols[i].k == kExpected[i][2]);
    CHECK(sols[i].value == fibonacci(sols[i].n) * fibonacci(sols[i].k));
  }
  auto values = distinct_values(sols);
  std::vector<mpz_class> want{1, 2, 3, 4, 6, 9, 13};
  CHECK(values == want);
}

TEST_CASE("tiny ranges") {
  auto sols = find_products(3, 2, 2);
  CHECK(sols.size() == 9);  // N_1 = N_2 = N_3 = 1 and all index pairs over F_1 = F_2 = 1
  for (const auto& s : sols) CHECK(s.value == 1);
  auto single = find_products(1, 1, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == SolutionTriple{1, 1, 1, 1});
}

TEST_CASE("squares") {
  auto sols = find_squares(438, 86);
  auto values = distinct_values(sols);
  std::vector<mpz_class> want{1, 4, 9};
  CHECK(values == want);
  bool has633 = false, has844 = false;
  for (const auto& s : sols) {
    CHECK(s.n == s.k);
    if (s.m == 6 && s.n == 3) has633 = true;
    if (s.m == 8 && s.n == 4) has844 = true;
  }
  CHECK(has633);
  CHECK(has844);
}

TEST_CASE("both orders expansion") {
  auto sols = find_products(438, 86, 174, {.both_orders = true});
  CHECK(sols.size() == 28);  // 18 canonical + 10 mirrored pairs with n != k
  bool mirrored = false;
  for (const auto& s : sols)
    if (s.m == 9 && s.n == 7 && s.k == 1) mirrored = true;
  CHECK(mirrored);
}

TEST_CASE("oracle equivalence with the naive triple loop") {
  const unsigned long m_lim = 60, nk_lim = 30;
  std::vector<SolutionTriple> naive;
  auto fib = fibonacci_table(nk_lim);
  for (unsigned long m = 1; m <= m_lim; ++m) {
    mpz_class nm = narayana(m);
    for (unsigned long n = 1; n <= nk_lim; ++n)
      for (unsigned long k = n; k <= nk_lim; ++k)
        if (nm == fib[n] * fib[k]) naive.push_back({m, n, k, nm});
  }
  std::sort(naive.begin(), naive.end());
  auto fast = find_products(m_lim, nk_lim, nk_lim);
  REQUIRE(fast.size() == naive.size());
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == naive[i]);
}

TEST_CASE("bad bounds are rejected") {
  CHECK_THROWS_AS(find_products(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_products(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_products(1, 1, 0), std::invalid_argument);
}
