#pragma once

// The single versioned table of published reference values for the
// Narayana-equals-Fibonacci-product analysis.  Every pipeline run certifies
// its own computed enclosures against these one-sidedly (computed <= value)
// and then publishes the table value downstream, so the certificate chain
// reproduces the published derivation while staying sound.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bakerkit/ball.hpp"

namespace bakerkit {

struct ReferenceBounds {
  std::string version;

  // height bounds
  mpq_class h_alpha_max, h_gamma_max, h_5a_max;
  // Matveev parameters for both linear forms
  mpq_class A1, A2, A3;
  // folded tail constants of the two residual bounds
  mpq_class lambda1_fold, lambda2_fold;
  // coefficients of the reduction inequalities (1.5 * fold / log gamma)
  mpq_class reduction1_A, reduction2_A;
  // stage coefficients and absolute bounds
  mpq_class c1, c2, c_combined;
  mpq_class k_absolute, m_absolute;
  mpq_class c_intermediate, k_intermediate, m_intermediate;
  // reduced index bounds
  long n_reduced, k_reduced, m_reduced;
  // published round-1 reduction data
  int round1_convergent_index;
  mpz_class round1_p, round1_q;
  std::string round1_epsilon;  // decimal digits as published
  // published round-2 reduction data
  int round2_convergent_index;
  mpz_class round2_p, round2_q;
  std::string round2_epsilon;
  // final solution contract
  std::vector<long> solution_values;
  std::vector<long> square_values;
  std::size_t solution_count;
};

inline const ReferenceBounds& reference_bounds() {
  static const ReferenceBounds table = [] {
    ReferenceBounds t;
    t.version = "1";
    t.h_alpha_max = parse_exact_number("0.128");
    t.h_gamma_max = parse_exact_number("0.241");
    t.h_5a_max = parse_exact_number("2.755");
    t.A1 = parse_exact_number("0.768");
    t.A2 = parse_exact_number("1.446");
    t.A3 = parse_exact_number("16.53");
    t.lambda1_fold = parse_exact_number("4.91");
    t.lambda2_fold = parse_exact_number("2.637");
    t.reduction1_A = parse_exact_number("15.306");
    t.reduction2_A = parse_exact_number("8.22");
    t.c1 = parse_exact_number("1.471e14");
    t.c2 = parse_exact_number("4.294e14");
    t.c_combined = parse_exact_number("6.317e28");
    t.k_absolute = parse_exact_number("1.136e33");
    t.m_absolute = parse_exact_number("2.864e33");
    t.c_intermediate = parse_exact_number("1.778e16");
    t.k_intermediate = parse_exact_number("5.165e19");
    t.m_intermediate = parse_exact_number("1.302e20");
    t.n_reduced = 86;
    t.k_reduced = 174;
    t.m_reduced = 438;
    t.round1_convergent_index = 72;
    t.round1_p = mpz_class("29721909555760487844132538948692737");
    t.round1_q = mpz_class("37417183036250693833016580755802629");
    t.round1_epsilon = "0.260885028864365";
    t.round2_convergent_index = 71;
    t.round2_p = mpz_class("3194055037246978157952257926560636");
    t.round2_q = mpz_class("4021025019685037142147505686136939");
    t.round2_epsilon = "0.0109970619096576";
    t.solution_values = {1, 2, 3, 4, 6, 9, 13};
    t.square_values = {1, 4, 9};
    t.solution_count = 18;
    return t;
  }();
  return table;
}

}  // namespace bakerkit
