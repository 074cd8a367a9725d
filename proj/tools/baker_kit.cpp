// baker-kit: certified pipeline for the equation N_m = F_n * F_k
// (Narayana's cows number equal to a product of two Fibonacci numbers).
//
// Subcommands: prove, search, cf, reduce, constants.
// Exit codes: 0 success, 1 mathematical/certification failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "bakerkit/report.hpp"

namespace {

using namespace bakerkit;
using Clock = std::chrono::steady_clock;

struct CommonFlags {
  long precision = 192;
  long precision_cap = 4096;
  std::string out;
  std::string format = "text";
};

long default_precision() {
  if (const char* env = std::getenv("BAKER_KIT_PRECISION")) {
    try {
      long p = std::stol(env);
      if (p > 1) return p;
    } catch (...) {
    }
  }
  return 192;
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  flags.precision = default_precision();
  cmd->add_option("--precision", flags.precision, "working precision in bits")
      ->check(CLI::Range(2L, 1L << 24));
  cmd->add_option("--precision-cap", flags.precision_cap,
                  "escalation ceiling in bits (certification fails beyond it)")
      ->check(CLI::Range(2L, 1L << 24));
  cmd->add_option("--out", flags.out, "write the report to this path instead of stdout");
  cmd->add_option("--format", flags.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
}

PrecisionPolicy policy_of(const CommonFlags& f) {
  PrecisionPolicy p;
  p.initial = static_cast<mpfr_prec_t>(f.precision);
  p.cap = static_cast<mpfr_prec_t>(std::max(f.precision, f.precision_cap));
  return p;
}

void emit(const CommonFlags& flags, const ReportDocument& doc, const std::string& text) {
  std::string payload = (flags.format == "json") ? doc.dump() : text;
  if (flags.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(flags.out);
    if (!f) throw std::runtime_error("cannot write " + flags.out);
    f << payload;
  }
}

std::string render_ball(const Ball& b, int digits = 25) { return b.display(digits); }

// ---------------------------------------------------------------------------

int cmd_prove(const CommonFlags& flags) {
  auto t0 = Clock::now();
  Certificate cert = prove_main(policy_of(flags));
  double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  ReportDocument doc;
  doc.command = "prove";
  doc.inputs = json{{"precision", flags.precision}, {"precision_cap", flags.precision_cap}};
  doc.body = to_json(cert);
  doc.timings = json{{"total_ms", total_ms}, {"stages_ms", cert.stage_ms}};

  std::string text;
  if (cert.ok) {
    text += "verdict: " + std::string(cert.verdict() ? "TRUE" : "FALSE") + "\n";
    text += "the nonzero Narayana numbers that are products of two Fibonacci numbers:\n  ";
    for (const auto& v : cert.values) text += v.get_str() + " ";
    text += "\nsquares of a Fibonacci number among them: ";
    for (const auto& v : cert.square_vals) text += v.get_str() + " ";
    text += "\nsolutions (m, n, k) with N_m = F_n F_k, n <= k:\n";
    for (const auto& s : cert.solutions)
      text += "  (" + std::to_string(s.m) + ", " + std::to_string(s.n) + ", " +
              std::to_string(s.k) + ")  value " + s.value.get_str() + "\n";
    const auto& r = *cert.reductions;
    text += "bounds: n <= " + std::to_string(r.n_bound) + ", k <= " + std::to_string(r.k_bound) +
            ", m <= " + std::to_string(r.m_bound) + "\n";
    text += "round-1 convergent " + std::to_string(r.round1.convergent_index) +
            ", epsilon = " + render_ball(r.round1.epsilon, 18) + "\n";
    text += "working precision: " + std::to_string(cert.working_precision) + " bits, " +
            std::to_string(static_cast<long>(total_ms)) + " ms\n";
  } else {
    text += "FAILED at stage '" + cert.failed_stage + "': " + cert.failure_message + "\n";
  }
  emit(flags, doc, text);
  return cert.ok && cert.verdict() ? 0 : 1;
}

int cmd_search(const CommonFlags& flags, unsigned long m_max, unsigned long n_max,
               unsigned long k_max, bool squares_only, bool both_orders) {
  auto t0 = Clock::now();
  auto sols = find_products(m_max, n_max, k_max,
                            {.squares_only = squares_only, .both_orders = both_orders});
  auto values = distinct_values(sols);
  double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  ReportDocument doc;
  doc.command = "search";
  doc.inputs = json{{"m_max", m_max},
                    {"n_max", n_max},
                    {"k_max", k_max},
                    {"squares_only", squares_only},
                    {"both_orders", both_orders}};
  doc.body = json{{"solutions", solutions_to_json(sols)},
                  {"distinct_values", values_to_json(values)},
                  {"count", sols.size()}};
  doc.timings = json{{"total_ms", total_ms}};

  std::string text = "solutions (m, n, k) with N_m = F_n F_k:\n";
  for (const auto& s : sols)
    text += "  (" + std::to_string(s.m) + ", " + std::to_string(s.n) + ", " +
            std::to_string(s.k) + ")  value " + s.value.get_str() + "\n";
  text += "distinct values: ";
  for (const auto& v : values) text += v.get_str() + " ";
  text += "\n";
  emit(flags, doc, text);
  return 0;
}

int cmd_cf(const CommonFlags& flags, const std::string& value, int terms) {
  RealSpec spec;
  if (value == "tau" || !std::filesystem::exists(value)) {
    spec = parse_real_spec(value);
  } else {
    auto kv = parse_key_value_file(value);
    if (!kv.count("value")) throw std::invalid_argument("spec file needs a 'value' field");
    spec = parse_real_spec(kv["value"]);
  }
  auto t0 = Clock::now();
  ContinuedFraction cf = continued_fraction(spec, terms, policy_of(flags));
  double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  ReportDocument doc;
  doc.command = "cf";
  doc.inputs = json{{"value", value}, {"terms", terms}, {"precision", flags.precision}};
  doc.body = to_json(cf);
  doc.timings = json{{"total_ms", total_ms}};

  std::string text = "value: " + spec.description + "\npartial quotients:";
  for (const auto& a : cf.partial_quotients) text += " " + a.get_str();
  text += "\nconvergents:\n";
  for (std::size_t i = 0; i < cf.convergents.size(); ++i)
    text += "  " + std::to_string(i) + ": " + cf.convergents[i].p.get_str() + " / " +
            cf.convergents[i].q.get_str() + "\n";
  emit(flags, doc, text);
  return 0;
}

int cmd_reduce(const CommonFlags& flags, const std::string& instance_path, int terms,
               int forced_index) {
  ReductionInstance inst = parse_reduction_instance(instance_path);
  auto t0 = Clock::now();
  ContinuedFraction cf = continued_fraction(inst.tau, terms, policy_of(flags));
  ReductionOptions opts;
  if (forced_index >= 0) opts.forced_index = forced_index;
  ReductionResult res = dp_reduce(inst, cf, policy_of(flags), opts);
  double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  ReportDocument doc;
  doc.command = "reduce";
  doc.inputs = json{{"instance", instance_path},
                    {"terms", terms},
                    {"M", inst.M.get_str()},
                    {"tau", inst.tau.description},
                    {"mu", inst.mu.description}};
  if (forced_index >= 0) doc.inputs["convergent_index"] = forced_index;
  doc.body = to_json(res);
  doc.timings = json{{"total_ms", total_ms}};

  std::string text = std::string("status: ") + to_string(res.status) + "\n";
  if (res.convergent_index >= 0) {
    text += "convergent index: " + std::to_string(res.convergent_index) +
            "\nq: " + res.q.get_str() + "\nepsilon: " + render_ball(res.epsilon, 18) + "\n";
  }
  if (res.status == ReductionStatus::success)
    text += "w bound: " + render_ball(res.w_bound, 12) +
            "\nmax admissible w: " + res.max_admissible_w().get_str() + "\n";
  emit(flags, doc, text);
  return res.status == ReductionStatus::success ? 0 : 1;
}

int cmd_constants(const CommonFlags& flags) {
  auto t0 = Clock::now();
  ConstantsTable table = build_constants(policy_of(flags));
  double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  ReportDocument doc;
  doc.command = "constants";
  doc.inputs = json{{"precision", flags.precision}};
  doc.body = to_json(table);
  doc.body["heights"] = json{{"h_alpha", to_json(table.h_alpha)},
                             {"h_gamma", to_json(table.h_gamma)},
                             {"h_a", to_json(table.h_a)}};
  doc.timings = json{{"total_ms", total_ms}};

  auto line = [&](const char* name, const Ball& b) {
    return std::string(name) + " = " + render_ball(b, 30) + "\n";
  };
  std::string text;
  text += line("alpha    ", table.alpha.root_box);
  text += line("gamma    ", table.gamma.root_box);
  text += line("a        ", table.a.root_box);
  text += line("|beta|   ", table.abs_beta);
  text += line("|b|      ", table.abs_b);
  text += line("delta    ", table.delta);
  text += line("log alpha", table.log_alpha);
  text += line("log gamma", table.log_gamma);
  text += line("tau      ", table.tau);
  text += line("h(alpha) ", table.h_alpha);
  text += line("h(gamma) ", table.h_gamma);
  text += line("h(a)     ", table.h_a);
  text += "certified at " + std::to_string(static_cast<long>(table.precision)) + " bits\n";
  emit(flags, doc, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified solver for the Narayana = Fibonacci-product equation"};
  app.require_subcommand(1);

  CommonFlags prove_flags;
  auto* prove = app.add_subcommand("prove", "run the full certified pipeline");
  add_common(prove, prove_flags);

  CommonFlags search_flags;
  unsigned long m_max = 0, n_max = 0, k_max = 0;
  bool squares_only = false, both_orders = false;
  auto* search = app.add_subcommand("search", "enumerate solutions in given index ranges");
  search->add_option("--m-max", m_max, "largest Narayana index")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_option("--n-max", n_max, "largest first Fibonacci index")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_option("--k-max", k_max, "largest second Fibonacci index")
      ->required()
      ->check(CLI::PositiveNumber);
  search->add_flag("--squares-only", squares_only, "only solutions with n = k");
  search->add_flag("--both-orders", both_orders, "emit (m,k,n) alongside (m,n,k)");
  add_common(search, search_flags);

  CommonFlags cf_flags;
  std::string cf_value = "tau";
  int cf_terms = 0;
  auto* cf = app.add_subcommand("cf", "certified continued-fraction expansion");
  cf->add_option("--value", cf_value, "named constant, inline spec, or spec file");
  cf->add_option("--terms", cf_terms, "number of partial quotients")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(cf, cf_flags);

  CommonFlags reduce_flags;
  std::string instance_path;
  int reduce_terms = 80;
  int forced_index = -1;
  auto* reduce = app.add_subcommand("reduce", "run one Dujella-Petho reduction instance");
  reduce->add_option("--instance", instance_path, "instance file (tau, mu, A, B, M)")
      ->required();
  reduce->add_option("--terms", reduce_terms, "continued-fraction depth to scan")
      ->check(CLI::PositiveNumber);
  reduce->add_option("--convergent-index", forced_index,
                     "pin the reduction to this convergent instead of scanning");
  add_common(reduce, reduce_flags);

  CommonFlags const_flags;
  auto* constants = app.add_subcommand("constants", "print the certified constants table");
  add_common(constants, const_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (prove->parsed()) return cmd_prove(prove_flags);
    if (search->parsed())
      return cmd_search(search_flags, m_max, n_max, k_max, squares_only, both_orders);
    if (cf->parsed()) return cmd_cf(cf_flags, cf_value, cf_terms);
    if (reduce->parsed()) return cmd_reduce(reduce_flags, instance_path, reduce_terms, forced_index);
    if (constants->parsed()) return cmd_constants(const_flags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
