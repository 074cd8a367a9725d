#pragma once

// JSON serialization of certificates, reduction results, continued fractions
// and the constants table.  Enclosures are serialized as exact decimal
// midpoint + radius + bit precision, so parse(emit(x)) reproduces the
// enclosure bit for bit; object keys are emitted in sorted order, making
// bodies byte-identical across runs.

#include <json.hpp>

#include <string>
#include <vector>

#include "bakerkit/pipeline.hpp"
#include "bakerkit/reduction.hpp"

namespace bakerkit {

using json = nlohmann::json;

inline json to_json(const Ball& b) {
  auto parts = b.to_decimal_parts();
  return json{{"mid", parts.midpoint}, {"rad", parts.radius}, {"prec", parts.precision}};
}

inline Ball ball_from_json(const json& j) {
  return Ball::from_decimal_parts(
      {j.at("mid").get<std::string>(), j.at("rad").get<std::string>(), j.at("prec").get<long>()});
}

// Exact decimal when the denominator is 2^a 5^b, else "p/q".
inline std::string rational_to_string(const mpq_class& v) {
  mpz_class den = v.get_den();
  unsigned long twos = 0, fives = 0;
  mpz_class d = den;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) {
    d /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return v.get_str();
  unsigned long digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class mantissa = v.get_num() * (scale / den);
  std::string s = mantissa.get_str();
  if (digits == 0) return s;
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s = s.substr(1);
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

inline json to_json(const PublishedBound& p) {
  return json{{"name", p.name},
              {"computed", to_json(p.computed)},
              {"published", rational_to_string(p.published)}};
}

inline json to_json(const ContinuedFraction& cf) {
  json quotients = json::array();
  for (const auto& a : cf.partial_quotients) quotients.push_back(a.get_str());
  json convergents = json::array();
  for (std::size_t i = 0; i < cf.convergents.size(); ++i)
    convergents.push_back(json{{"index", i},
                               {"p", cf.convergents[i].p.get_str()},
                               {"q", cf.convergents[i].q.get_str()}});
  return json{{"partial_quotients", quotients},
              {"convergents", convergents},
              {"certified_precision", static_cast<long>(cf.certified_precision)}};
}

inline json to_json(const ReductionResult& r) {
  json j{{"status", to_string(r.status)},
         {"precision_used", static_cast<long>(r.precision_used)}};
  if (r.convergent_index >= 0) {
    j["convergent_index"] = r.convergent_index;
    j["q"] = r.q.get_str();
    j["epsilon"] = to_json(r.epsilon);
  }
  if (r.status == ReductionStatus::success) {
    j["w_bound"] = to_json(r.w_bound);
    j["max_admissible_w"] = r.max_admissible_w().get_str();
  }
  return j;
}

inline json to_json(const SolutionTriple& s) {
  return json{{"m", s.m}, {"n", s.n}, {"k", s.k}, {"value", s.value.get_str()}};
}

inline json solutions_to_json(const std::vector<SolutionTriple>& sols) {
  json arr = json::array();
  for (const auto& s : sols) arr.push_back(to_json(s));
  return arr;
}

inline json values_to_json(const std::vector<mpz_class>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

inline json to_json(const ConstantsTable& c) {
  return json{{"precision", static_cast<long>(c.precision)},
              {"alpha", to_json(c.alpha.root_box)},
              {"gamma", to_json(c.gamma.root_box)},
              {"a", to_json(c.a.root_box)},
              {"abs_beta", to_json(c.abs_beta)},
              {"abs_b", to_json(c.abs_b)},
              {"delta", to_json(c.delta)},
              {"sqrt5", to_json(c.sqrt5)},
              {"log_alpha", to_json(c.log_alpha)},
              {"log_gamma", to_json(c.log_gamma)},
              {"tau", to_json(c.tau)},
              {"ratio", to_json(c.ratio)}};
}

inline json to_json(const Certificate& cert) {
  json j;
  j["status"] = cert.ok ? "ok" : "failed";
  if (!cert.ok) {
    j["failed_stage"] = cert.failed_stage;
    j["message"] = cert.failure_message;
  }
  j["precision"] = json{{"initial", static_cast<long>(cert.policy.initial)},
                        {"cap", static_cast<long>(cert.policy.cap)},
                        {"working", static_cast<long>(cert.working_precision)}};
  if (cert.constants) {
    j["constants"] = to_json(*cert.constants);
    j["heights"] = json{{"h_alpha", to_json(cert.constants->h_alpha)},
                        {"h_gamma", to_json(cert.constants->h_gamma)},
                        {"h_a", to_json(cert.constants->h_a)}};
  }
  if (cert.stage1) {
    const auto& s = *cert.stage1;
    j["heights"]["h_5a"] = to_json(s.h_5a);
    j["stage1"] = json{{"A", json::array({rational_to_string(s.A1), rational_to_string(s.A2),
                                          rational_to_string(s.A3)})},
                       {"matveev_c", to_json(s.matveev_c)},
                       {"lambda1_fold", to_json(s.lambda1_fold)},
                       {"c1", to_json(s.c1)},
                       {"s_min", s.s_min}};
  }
  if (cert.stage2) {
    const auto& s = *cert.stage2;
    j["heights"]["h_sqrt5"] = to_json(s.h_sqrt5);
    j["stage2"] = json{{"lambda2_fold", to_json(s.lambda2_fold)},
                       {"a3_base", to_json(s.a3_base)},
                       {"c2", to_json(s.c2)},
                       {"c_combined", to_json(s.c_combined)},
                       {"k0_log2", s.k0_log2},
                       {"small_branch_k", s.small_branch_k.get_str()},
                       {"k_absolute", to_json(s.k_absolute)},
                       {"m_absolute", to_json(s.m_absolute)}};
  }
  if (cert.reductions) {
    const auto& r = *cert.reductions;
    j["reduction1"] = to_json(r.round1);
    j["reduction1"]["A_computed"] = to_json(r.reduction1_A);
    j["reduction1"]["n_bound_raw"] = r.n_bound_raw.get_str();
    j["reduction1"]["n_bound"] = r.n_bound;
    json entries = json::array();
    for (const auto& e : r.round2) {
      json je = to_json(e.result);
      je["n"] = e.n;
      je["k_bound"] = e.k_bound.get_str();
      entries.push_back(je);
    }
    j["reduction2"] = json{{"A_computed", to_json(r.reduction2_A)},
                           {"entries", entries},
                           {"k_bound_raw", r.k_bound_raw.get_str()},
                           {"k_bound", r.k_bound},
                           {"m_bound_raw", r.m_bound_raw.get_str()},
                           {"m_bound", r.m_bound}};
    j["intermediate"] = json{{"c", to_json(r.c_intermediate)},
                             {"k", to_json(r.k_intermediate)},
                             {"m", to_json(r.m_intermediate)}};
  }
  if (cert.ok) {
    j["search_ranges"] = json{{"m_max", cert.m_max}, {"n_max", cert.n_max}, {"k_max", cert.k_max}};
    j["solutions"] = solutions_to_json(cert.solutions);
    j["distinct_values"] = values_to_json(cert.values);
    j["squares"] = solutions_to_json(cert.squares);
    j["square_values"] = values_to_json(cert.square_vals);
  }
  json assumptions = json::array();
  for (const auto& a : cert.assumptions)
    assumptions.push_back(json{{"name", a.name}, {"statement", a.statement}});
  j["assumptions"] = assumptions;
  json spots = json::array();
  for (const auto& s : cert.spot_checks)
    spots.push_back(json{{"form", s.form},
                         {"m", s.m},
                         {"n", s.n},
                         {"k", s.k},
                         {"residual", to_json(s.residual)},
                         {"nonzero_certified", s.nonzero_certified}});
  j["spot_checks"] = spots;
  j["verdict"] = cert.verdict();
  return j;
}

// ---------------------------------------------------------------------------
// report envelope

struct ReportDocument {
  std::string schema_version = "1";
  std::string command;
  json inputs = json::object();
  json body = json::object();
  json timings = json::object();

  json to_json() const {
    return json{{"schema_version", schema_version},
                {"command", command},
                {"inputs", inputs},
                {"body", body},
                {"timings", timings}};
  }

  static ReportDocument from_json(const json& j) {
    ReportDocument d;
    d.schema_version = j.at("schema_version").get<std::string>();
    d.command = j.at("command").get<std::string>();
    d.inputs = j.at("inputs");
    d.body = j.at("body");
    d.timings = j.at("timings");
    return d;
  }

  std::string dump() const { return to_json().dump(2) + "\n"; }
};

}  // namespace bakerkit
