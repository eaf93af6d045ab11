#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "littlent/circuit.hpp"
#include "littlent/dilution.hpp"
#include "littlent/experiments.hpp"
#include "littlent/report.hpp"
#include "littlent/types.hpp"
#include "littlent/verifysuite.hpp"

namespace {

using namespace littlent;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternalError = 10;

struct ParseFailure {
  int code;
};

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open '" << path << "'\n";
    throw ParseFailure{kExitParseError};
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ParseResult parsed = parse_circuit(buf.str());
  if (!parsed.ok()) {
    std::cerr << format_diagnostics(parsed.diagnostics, path);
    throw ParseFailure{kExitParseError};
  }
  return *parsed.circuit;
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << content;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

std::vector<Bipartition> parse_bipartitions(const std::string& text, int n) {
  if (text == "all-contiguous") return Bipartition::contiguous(n);
  std::vector<Bipartition> out;
  for (const std::string& part : split(text, ',')) {
    if (part.empty()) continue;
    std::vector<int> a;
    for (const std::string& idx : split(part, '+')) a.push_back(std::stoi(idx));
    out.emplace_back(n, std::move(a));
  }
  if (out.empty())
    throw std::invalid_argument("no bipartitions in '" + text + "'");
  return out;
}

struct DiluteArgs {
  std::string input;
  std::string out;
  double epsilon = 0.0;
};

int run_dilute(const DiluteArgs& args) {
  Circuit base = load_circuit(args.input);
  EpsilonParams eps(args.epsilon);
  DilutedCircuit d = dilute(base, eps);
  std::string text = serialize_circuit(d.transformed);
  double theta = 2.0 * std::asin(eps.epsilon_bar);
  if (args.out.empty()) {
    std::cout << text;
    std::cerr << "gates: " << d.transformed.gates.size()
              << "  theta: " << theta << "\n";
  } else {
    write_output(args.out, text);
    std::cout << "gates: " << d.transformed.gates.size()
              << "  theta: " << theta << "\n";
  }
  return 0;
}

struct DecideArgs {
  std::string input;
  std::string out;
  double epsilon = 0.0;
  double fail_prob = 1e-3;
  long runs = 0;  // 0: derive from (epsilon, fail_prob)
  std::uint64_t seed = 1;
  bool audit = false;
  int threads = 1;
};

int run_decide(const DecideArgs& args) {
  Circuit base = load_circuit(args.input);
  EpsilonParams eps(args.epsilon);
  long n_runs =
      args.runs > 0 ? args.runs : required_runs(args.epsilon, args.fail_prob);
  DecisionReport report = decision_experiment(base, eps, n_runs, args.seed,
                                              args.audit, args.threads);
  write_output(args.out, to_json(report).dump(2) + "\n");
  return 0;
}

struct TraceArgs {
  std::string input;
  std::string out;
  std::optional<double> epsilon;
  std::string bipartitions = "all-contiguous";
  std::string measures = "entropy";
  std::string format = "json";
  std::uint64_t seed = 1;
  int threads = 1;
};

int run_trace(const TraceArgs& args) {
  Circuit circuit = load_circuit(args.input);
  TraceConfig config;
  if (circuit.n >= 2)
    config.bipartitions = parse_bipartitions(args.bipartitions, circuit.n);
  for (const std::string& m : split(args.measures, ','))
    if (!m.empty()) config.measures.push_back(m);
  if (args.epsilon) config.eps_context = EpsilonParams(*args.epsilon);
  config.geo.seed = args.seed;
  config.geo.threads = args.threads;

  std::vector<StepTrace> steps = entanglement_trace(circuit, config);
  if (args.format == "csv")
    write_output(args.out, trace_to_csv(steps));
  else
    write_output(args.out, trace_report(steps, config).dump(2) + "\n");
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string out;
  VerifyConfig cfg;
};

int run_verify(const VerifyArgs& args) {
  std::vector<SuiteResult> results;
  if (args.suite == "all") {
    for (const std::string& name : verify_suite_names())
      results.push_back(run_suite(name, args.cfg));
  } else {
    results.push_back(run_suite(args.suite, args.cfg));
  }
  nlohmann::json report = verify_report(results, args.cfg);
  write_output(args.out, report.dump(2) + "\n");
  return report["all_pass"].get<bool>() ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circuit dilution and entanglement-continuity toolkit"};
  app.set_config("--config", "", "read defaults from an INI/TOML file");
  app.require_subcommand(1);

  DiluteArgs dilute_args;
  CLI::App* cmd_dilute =
      app.add_subcommand("dilute", "transform a circuit to stay near |0>^n");
  cmd_dilute->add_option("input", dilute_args.input, "circuit file")
      ->required();
  cmd_dilute->add_option("--epsilon", dilute_args.epsilon, "branch weight")
      ->required();
  cmd_dilute->add_option("--out", dilute_args.out, "output circuit file");

  DecideArgs decide_args;
  CLI::App* cmd_decide = app.add_subcommand(
      "decide", "estimate the promise-problem answer by sampling");
  cmd_decide->add_option("input", decide_args.input, "circuit file")
      ->required();
  cmd_decide->add_option("--epsilon", decide_args.epsilon, "branch weight")
      ->required();
  cmd_decide->add_option("--fail-prob", decide_args.fail_prob,
                         "target failure probability");
  cmd_decide->add_option("--runs", decide_args.runs,
                         "override the derived repetition count");
  cmd_decide->add_option("--seed", decide_args.seed, "sampling seed")
      ->required();
  cmd_decide->add_flag("--audit", decide_args.audit,
                       "re-run the circuit for every sample");
  cmd_decide->add_option("--threads", decide_args.threads, "worker cap");
  cmd_decide->add_option("--out", decide_args.out, "report file");

  TraceArgs trace_args;
  double trace_eps = -1.0;
  CLI::App* cmd_trace = app.add_subcommand(
      "trace", "per-step entanglement measures and continuity bounds");
  cmd_trace->add_option("input", trace_args.input, "circuit file")->required();
  cmd_trace->add_option("--epsilon", trace_eps,
                        "branch weight; attaches radius sqrt(eps) bounds");
  cmd_trace->add_option("--bipartitions", trace_args.bipartitions,
                        "all-contiguous or e.g. 0+1,0+1+2");
  cmd_trace->add_option("--measures", trace_args.measures,
                        "comma list: entropy,renyi:<a>,schmidt_rank,"
                        "geometric,concurrence,n_tangle");
  cmd_trace->add_option("--format", trace_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_trace->add_option("--seed", trace_args.seed, "optimizer seed");
  cmd_trace->add_option("--threads", trace_args.threads, "worker cap");
  cmd_trace->add_option("--out", trace_args.out, "report file");

  VerifyArgs verify_args;
  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "randomized suites for every continuity inequality");
  cmd_verify->add_option("--suite", verify_args.suite,
                         "all, fannes, entropy_bound, tensor_power, "
                         "polynomial, witness, observation3, counterexample");
  cmd_verify->add_option("--samples", verify_args.cfg.samples, "sample count");
  cmd_verify->add_option("--seed", verify_args.cfg.seed, "sampling seed");
  cmd_verify->add_option("--epsilon", verify_args.cfg.eps,
                         "ball radius for sampled states");
  cmd_verify->add_option("--n", verify_args.cfg.n,
                         "qubit count for sampled states");
  cmd_verify->add_option("--m", verify_args.cfg.counterexample_m,
                         "counterexample half-system size");
  cmd_verify->add_option("--alpha", verify_args.cfg.counterexample_alpha,
                         "counterexample Renyi order");
  cmd_verify->add_option("--threads", verify_args.cfg.threads, "worker cap");
  cmd_verify->add_option("--out", verify_args.out, "report file");
  cmd_verify
      ->add_flag("--inject-violation", verify_args.cfg.inject_violation,
                 "self-test: fabricate one failing check")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_dilute->parsed()) return run_dilute(dilute_args);
    if (cmd_decide->parsed()) return run_decide(decide_args);
    if (cmd_trace->parsed()) {
      if (trace_eps >= 0.0) trace_args.epsilon = trace_eps;
      return run_trace(trace_args);
    }
    if (cmd_verify->parsed()) return run_verify(verify_args);
  } catch (const ParseFailure& f) {
    return f.code;
  } catch (const cap_exceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return 0;
}
