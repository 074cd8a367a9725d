#pragma once

// Exhaustive verification of N_m = F_n * F_k inside given index ranges:
// for each m, every n with F_n <= N_m is tried by exact divisibility, and
// the quotient is tested for Fibonacci membership.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "bakerkit/sequences.hpp"

namespace bakerkit {

struct SolutionTriple {
  unsigned long m = 0, n = 0, k = 0;  // n <= k unless both orders requested
  mpz_class value;                    // N_m = F_n * F_k

  friend bool operator==(const SolutionTriple& a, const SolutionTriple& b) {
    return a.m == b.m && a.n == b.n && a.k == b.k;
  }
  friend bool operator<(const SolutionTriple& a, const SolutionTriple& b) {
    return std::tie(a.m, a.n, a.k) < std::tie(b.m, b.n, b.k);
  }
};

struct SearchOptions {
  bool squares_only = false;  // keep only n == k
  bool both_orders = false;   // also emit (m, k, n) for n != k
};

inline std::vector<SolutionTriple> find_products(unsigned long m_max, unsigned long n_max,
                                                 unsigned long k_max, SearchOptions opts = {}) {
  if (m_max < 1 || n_max < 1 || k_max < 1)
    throw std::invalid_argument("find_products: bounds must be >= 1");
  auto fib = fibonacci_table(std::max(n_max, k_max));
  // indices of every Fibonacci value up to F_{k_max} (value 1 has indices 1, 2)
  std::map<mpz_class, std::vector<unsigned long>> fib_indices;
  for (unsigned long i = 1; i <= k_max; ++i) fib_indices[fib[i]].push_back(i);

  std::vector<SolutionTriple> out;
  mpz_class n0 = 0, n1 = 1, n2 = 1;  // N_0, N_1, N_2
  for (unsigned long m = 1; m <= m_max; ++m) {
    mpz_class nm = (m == 1) ? n1 : (m == 2) ? n2 : [&] {
      mpz_class next = n2 + n0;
      n0 = n1;
      n1 = n2;
      n2 = next;
      return next;
    }();
    if (nm == 0) continue;
    for (unsigned long n = 1; n <= n_max && fib[n] <= nm; ++n) {
      if (!mpz_divisible_p(nm.get_mpz_t(), fib[n].get_mpz_t())) continue;
      mpz_class quotient = nm / fib[n];
      auto it = fib_indices.find(quotient);
      if (it == fib_indices.end()) continue;
      for (unsigned long k : it->second) {
        if (k < n) continue;  // canonical order n <= k
        if (opts.squares_only && k != n) continue;
        out.push_back({m, n, k, nm});
      }
    }
  }
  // every returned triple re-verifies the defining identity exactly
  for (const auto& s : out)
    if (narayana(s.m) != fibonacci(s.n) * fibonacci(s.k) || s.value != narayana(s.m))
      throw std::logic_error("find_products: output failed exact re-verification");
  if (opts.both_orders) {
    std::vector<SolutionTriple> widened;
    for (const auto& s : out) {
      widened.push_back(s);
      if (s.n != s.k) widened.push_back({s.m, s.k, s.n, s.value});
    }
    out = std::move(widened);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<SolutionTriple> find_squares(unsigned long m_max, unsigned long n_max) {
  return find_products(m_max, n_max, n_max, {.squares_only = true});
}

inline std::vector<mpz_class> distinct_values(const std::vector<SolutionTriple>& sols) {
  std::vector<mpz_class> vals;
  for (const auto& s : sols) vals.push_back(s.value);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

}  // namespace bakerkit
