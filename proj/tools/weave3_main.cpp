// weave3 command line tool: exact Alexander/Jones invariants of 3-braid
// closures, closed forms for weaving links, and the identity verify suite.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weave3/invariants.hpp"
#include "weave3/output.hpp"
#include "weave3/shape.hpp"
#include "weave3/verify.hpp"
#include "weave3/weaving.hpp"

namespace {

using namespace weave3;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(const OutputRecord& record, const std::string& format) {
  std::cout << render_record(record, parse_format(format));
}

unsigned threads_from_env() {
  const char* env = std::getenv("WEAVE_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 0;
}

CoeffRow alexander_row_for_route(const std::string& route, long n, long m) {
  if (route == "oracle") {
    return alexander_s_form(alexander(weaving_word({n, m}))).coeffs();
  }
  if (route == "explicit") return alexander_weaving_explicit(n);
  if (route == "division") return alexander_weaving_division(n);
  if (route == "recurrence") return alexander_weaving_recurrence(n);
  throw Error("unknown route '" + route + "'");
}

int cmd_alexander(long n, long m, std::string route, bool check, const std::string& format) {
  if (route.empty()) route = (m == 1) ? "recurrence" : "oracle";
  if (m > 1 && route != "oracle") {
    std::cerr << "alexander: only the oracle route is available for m > 1\n";
    return kExitUsage;
  }
  OutputRecord record;
  record.kind = "alexander";
  record.variable = "s";
  record.extras["n"] = n;
  record.extras["m"] = m;
  record.extras["route"] = route;
  const CoeffRow row = alexander_row_for_route(route, n, m);
  record.coefficients = row_to_strings(row);
  if (check) {
    const std::vector<std::string> routes =
        (m == 1) ? std::vector<std::string>{"explicit", "division", "recurrence", "oracle"}
                 : std::vector<std::string>{"oracle"};
    for (const std::string& other : routes) {
      if (alexander_row_for_route(other, n, m) != row) {
        std::cerr << "alexander: route '" << other << "' disagrees with route '" << route
                  << "' at n=" << n << "\n";
        return kExitCheckFailed;
      }
    }
    record.extras["checked"] = true;
  }
  emit(record, format);
  return kExitOk;
}

int cmd_jones(long n, long m, bool check, const std::string& format) {
  const LaurentPoly closed = jones_weaving({n, m});
  OutputRecord record = record_for_poly("jones", closed, "s");
  record.extras["n"] = n;
  record.extras["m"] = m;
  if (check) {
    const LaurentPoly oracle = jones_in_t(jones(weaving_word({n, m}))).substitute_negate();
    if (oracle != closed) {
      std::cerr << "jones: closed form disagrees with the Burau oracle at n=" << n
                << ", m=" << m << "\n";
      return kExitCheckFailed;
    }
    record.extras["checked"] = true;
  }
  emit(record, format);
  return kExitOk;
}

int cmd_braid(const std::string& word_text, const std::string& which, const std::string& format) {
  const BraidWord3 word = BraidWord3::parse(word_text);
  OutputRecord record;
  if (which == "alexander") {
    record = record_for_poly("alexander", alexander_s_form(alexander(word)), "s");
  } else if (which == "jones") {
    const InvariantValue v = jones(word);
    if (word.exponent_sum() % 2 == 0) {
      record = record_for_poly("jones", jones_in_t(v), "t");
    } else {
      record = record_for_poly("jones", v.poly, "x");
    }
  } else if (which == "det") {
    record.kind = "determinant";
    record.variable = "t";
    record.coefficients = {determinant(word).str()};
  } else {
    throw Error("unknown invariant '" + which + "'");
  }
  record.extras["word"] = word.str();
  record.extras["exponent_sum"] = word.exponent_sum();
  emit(record, format);
  return kExitOk;
}

int cmd_det(const std::string& word_text, long n, long m, bool check,
            const std::string& format) {
  OutputRecord record;
  record.kind = "determinant";
  record.variable = "t";
  BigInt value;
  if (!word_text.empty()) {
    const BraidWord3 word = BraidWord3::parse(word_text);
    value = determinant(word);
    record.extras["word"] = word.str();
  } else {
    value = det_weaving({n, m});
    record.extras["n"] = n;
    record.extras["m"] = m;
    if (check) {
      const BigInt oracle = determinant(weaving_word({n, m}));
      if (oracle != value) {
        std::cerr << "det: closed form " << value.str() << " disagrees with oracle "
                  << oracle.str() << " at n=" << n << ", m=" << m << "\n";
        return kExitCheckFailed;
      }
      record.extras["checked"] = true;
    }
  }
  record.coefficients = {value.str()};
  emit(record, format);
  return kExitOk;
}

int cmd_table(const std::string& family, long max_n, const std::string& format) {
  emit(record_for_table(family, max_n), format);
  return kExitOk;
}

int cmd_zeros(long n, double tol, const std::string& format) {
  OutputRecord record;
  record.kind = "zeros";
  record.variable = "t";
  record.extras["n"] = n;
  record.extras["tol"] = tol;
  nlohmann::json jzeros = nlohmann::json::array();
  bool hoste = true;
  bool cross = true;
  std::string why;
  if (n >= 2) {
    const ZeroSet zs = zeros_closed_form(n);
    for (const ZeroEntry& e : zs.entries) {
      jzeros.push_back({{"k", e.k},
                        {"branch", e.branch},
                        {"re", e.value.real()},
                        {"im", e.value.imag()},
                        {"is_real", e.is_real},
                        {"modulus", std::abs(e.value)}});
    }
    hoste = hoste_check(zs, tol);
    cross = cross_validate_zeros(n, tol, &why);
  }
  record.extras["zeros"] = jzeros;
  record.extras["hoste"] = hoste;
  record.extras["cross_validated"] = cross;
  if (!cross) record.extras["cross_validation_detail"] = why;
  emit(record, format);
  return cross ? kExitOk : kExitCheckFailed;
}

int cmd_verify(long max_n, long max_m, const std::vector<std::string>& suites, bool inject_fault,
               const std::string& format) {
  VerifyOptions options;
  options.max_n = max_n;
  options.max_m = max_m;
  if (!suites.empty()) options.suites = suites;
  options.threads = threads_from_env();
  options.inject_whitney_fault = inject_fault;
  const std::vector<SuiteResult> results = run_verification(options);

  OutputRecord record;
  record.kind = "verify";
  record.variable = "t";
  nlohmann::json jsuites = nlohmann::json::array();
  for (const SuiteResult& r : results) {
    jsuites.push_back({{"suite", r.suite},
                       {"passed", r.passed},
                       {"cases", r.cases},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
  }
  record.extras["suites"] = jsuites;
  record.extras["notes"] = verification_notes();
  record.extras["passed"] = all_passed(results);
  record.extras["max_n"] = max_n;
  record.extras["max_m"] = max_m;
  emit(record, format);
  return all_passed(results) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weave3: exact knot polynomial toolkit for 3-braid closures and weaving links"};
  app.set_version_flag("--version", "weave3 0.1.0");
  app.require_subcommand(1);

  long n = 1, m = 1, max_n = 10, max_m = 4;
  double tol = 1e-9;
  std::string format = "text";
  std::string route;
  std::string word_text;
  std::string invariant = "alexander";
  std::string family = "alexander";
  std::vector<std::string> suites;
  bool check = false;
  bool inject_fault = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  CLI::App* alexander_cmd =
      app.add_subcommand("alexander", "Alexander coefficient row of W(3, n, m)");
  alexander_cmd->add_option("--n", n, "Braid repetitions")->required()->check(CLI::PositiveNumber);
  alexander_cmd->add_option("--m", m, "Generator power")->check(CLI::PositiveNumber);
  alexander_cmd->add_option("--route", route, "Computation route")
      ->check(CLI::IsMember({"explicit", "division", "recurrence", "oracle"}));
  alexander_cmd->add_flag("--check", check, "Run all routes and fail on mismatch");
  add_format(alexander_cmd);

  CLI::App* jones_cmd = app.add_subcommand("jones", "Jones polynomial of W(3, n, m)");
  jones_cmd->add_option("--n", n, "Braid repetitions")->required()->check(CLI::PositiveNumber);
  jones_cmd->add_option("--m", m, "Generator power")->check(CLI::PositiveNumber);
  jones_cmd->add_flag("--check", check, "Compare against the Burau oracle");
  add_format(jones_cmd);

  CLI::App* braid_cmd = app.add_subcommand("braid", "Invariants of an arbitrary 3-braid closure");
  braid_cmd->add_option("--word", word_text, "Braid word, e.g. \"1 -2 1 -2\"")->required();
  braid_cmd->add_option("--invariant", invariant, "Which invariant")
      ->check(CLI::IsMember({"alexander", "jones", "det"}));
  add_format(braid_cmd);

  CLI::App* det_cmd = app.add_subcommand("det", "Link determinant");
  det_cmd->add_option("--word", word_text, "Braid word (oracle route)");
  CLI::Option* det_n = det_cmd->add_option("--n", n, "Weaving repetitions (closed form)")
                           ->check(CLI::PositiveNumber);
  det_cmd->add_option("--m", m, "Generator power")->check(CLI::PositiveNumber);
  det_cmd->add_flag("--check", check, "Compare closed form against the oracle");
  add_format(det_cmd);

  CLI::App* table_cmd = app.add_subcommand("table", "Coefficient triangles as tables");
  table_cmd->add_option("--family", family, "Row family")
      ->check(CLI::IsMember({"alexander", "whitney", "jones"}));
  table_cmd->add_option("--max-n", max_n, "Last row")->required()->check(CLI::NonNegativeNumber);
  add_format(table_cmd);

  CLI::App* zeros_cmd = app.add_subcommand("zeros", "Closed-form Alexander zeros of W(3, n)");
  zeros_cmd->add_option("--n", n, "Braid repetitions")->required()->check(CLI::PositiveNumber);
  zeros_cmd->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  add_format(zeros_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the identity verification suites");
  verify_cmd->add_option("--max-n", max_n, "Largest n")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-m", max_m, "Largest m")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--suite", suites, "Suites to run (repeatable)")
      ->check(CLI::IsMember({"all", "trace", "jones", "alexander-routes", "whitney-routes",
                             "determinant", "zeros", "shape"}));
  verify_cmd->add_flag("--inject-fault", inject_fault, "Corrupt a Whitney seed (test harness)")
      ->group("");  // hidden
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(alexander_cmd)) return cmd_alexander(n, m, route, check, format);
    if (app.got_subcommand(jones_cmd)) return cmd_jones(n, m, check, format);
    if (app.got_subcommand(braid_cmd)) return cmd_braid(word_text, invariant, format);
    if (app.got_subcommand(det_cmd)) {
      if (word_text.empty() && det_n->count() == 0) {
        std::cerr << "det: provide --word or --n\n";
        return kExitUsage;
      }
      return cmd_det(word_text, n, m, check, format);
    }
    if (app.got_subcommand(table_cmd)) return cmd_table(family, max_n, format);
    if (app.got_subcommand(zeros_cmd)) return cmd_zeros(n, tol, format);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(max_n, max_m, suites, inject_fault, format);
  } catch (const WordParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
