#include "bwcv/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bwcv/bw_gcr.hpp"
#include "bwcv/bw_mes.hpp"
#include "bwcv/core.hpp"
#include "bwcv/gcr.hpp"
#include "bwcv/harness.hpp"
#include "bwcv/io.hpp"
#include "bwcv/mes.hpp"
#include "bwcv/rounding.hpp"

namespace bwcv {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitSizeGuard = 3;

/// Candidate counts above this make the cohesive-group search (and the
/// fjr/ejr checkers) noticeably exponential; runs still proceed.
constexpr int kComfortableCandidates = 12;

struct RunArgs {
  std::string rule;
  std::string in_path;
  std::string out_path;
  std::string completion = "default";
  std::uint64_t seed = 0;
};

IntegralCommittee as_committee(const std::vector<int>& members) {
  IntegralCommittee committee{members};
  std::sort(committee.members.begin(), committee.members.end());
  return committee;
}

RandomizedCommittee degenerate_lottery(const std::vector<int>& members) {
  RandomizedCommittee lottery;
  lottery.entries.push_back({Rational(1), as_committee(members)});
  return lottery;
}

int do_run(const RunArgs& args) {
  const Instance instance = parse_instance(read_file(args.in_path));

  const auto strategy = completion_strategy_from_name(args.completion);
  if (!strategy) {
    throw ValidationError(ValidationError::Code::BadParams,
                          "unknown completion strategy '" + args.completion + "'");
  }
  if ((args.rule == "gcr" || args.rule == "bw-gcr") &&
      instance.num_candidates > kComfortableCandidates) {
    std::cerr << "warning: " << args.rule << " searches all candidate subsets up to size k; "
              << instance.num_candidates << " candidates will be slow\n";
  }

  RunReport report;
  report.rule = args.rule;
  report.digest = instance_digest(instance);
  report.num_voters = instance.num_voters;
  report.num_candidates = instance.num_candidates;
  report.committee_size = instance.committee_size;

  const auto started = std::chrono::steady_clock::now();
  if (args.rule == "random-dictator") {
    std::tie(report.shares, report.lottery) = random_dictator(instance);
  } else if (args.rule == "mes") {
    const MesResult result = run_mes(instance, default_mes_config(instance));
    report.committee = result.selected;
    report.purchase_order = result.selection_order;
    report.lottery = degenerate_lottery(result.selected);
    report.shares = marginals(report.lottery, instance.num_candidates);
  } else if (args.rule == "bw-mes") {
    BwMesOptions options;
    options.completion = *strategy;
    const BwMesOutput output = run_bw_mes(instance, options);
    report.shares = output.shares;
    report.lottery = output.lottery;
    report.committee = output.selected;
    report.completion = args.completion;
  } else if (args.rule == "gcr") {
    const GcrTrace trace = run_gcr(instance);
    report.committee = trace.committee;
    report.trace = trace.steps;
    report.lottery = degenerate_lottery(trace.committee);
    report.shares = marginals(report.lottery, instance.num_candidates);
  } else if (args.rule == "bw-gcr") {
    const BwGcrOutput output = run_bw_gcr(instance, *strategy);
    report.shares = output.shares;
    report.lottery = output.lottery;
    report.committee = output.trace.committee;
    report.trace = output.trace.steps;
    report.budgets = output.budgets;
    report.residual_seats = output.residual_seats;
    report.completion = args.completion;
  } else {
    throw ValidationError(ValidationError::Code::BadParams, "unknown rule '" + args.rule + "'");
  }
  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();

  write_file(args.out_path, write_report(report));
  return kExitOk;
}

int do_verify(const std::string& in_path, const std::string& outcome_path,
              const std::string& axiom_list, const std::string& out_path) {
  const Instance instance = parse_instance(read_file(in_path));
  RunReport report = parse_report(read_file(outcome_path));

  if (report.digest != instance_digest(instance)) {
    throw ValidationError(ValidationError::Code::BadParams,
                          "outcome was produced for a different instance (digest mismatch)");
  }
  if (marginals(report.lottery, instance.num_candidates) != report.shares) {
    throw ValidationError(ValidationError::Code::BadParams,
                          "outcome is inconsistent: fractional committee differs from the "
                          "lottery's marginals");
  }

  std::vector<Axiom> axioms;
  std::stringstream names(axiom_list);
  std::string name;
  while (std::getline(names, name, ',')) {
    if (name.empty()) continue;
    if (name == "all") {
      axioms = all_axioms();
      break;
    }
    const auto axiom = axiom_from_name(name);
    if (!axiom) {
      throw ValidationError(ValidationError::Code::BadParams, "unknown axiom '" + name + "'");
    }
    axioms.push_back(*axiom);
  }

  const SizeLimits limits = size_limits_from_env();
  for (Axiom axiom : axioms) {
    report.verdicts[to_string(axiom)] =
        is_ex_post(axiom) ? check_lottery(axiom, instance, report.lottery, limits)
                          : check_shares(axiom, instance, report.shares, limits);
  }

  const std::string text = write_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Randomized approval-based committee voting: fair lotteries and axiom checks"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a voting rule on an instance file");
  run->add_option("--rule", run_args.rule, "random-dictator | mes | bw-mes | gcr | bw-gcr")
      ->required();
  run->add_option("--in", run_args.in_path, "instance file")->required();
  run->add_option("--out", run_args.out_path, "report file to write")->required();
  run->add_option("--completion", run_args.completion, "default | mes-continuation");
  run->add_option("--seed", run_args.seed, "accepted for interface stability; current rules are deterministic");

  std::string verify_in, verify_outcome, verify_axioms, verify_out;
  auto* verify = app.add_subcommand("verify", "Check axioms against a report");
  verify->add_option("--in", verify_in, "instance file")->required();
  verify->add_option("--outcome", verify_outcome, "report file from `run`")->required();
  verify->add_option("--axioms", verify_axioms,
                     "comma-separated axiom names, or 'all' (may be empty)");
  verify->add_option("--out", verify_out, "write the annotated report here instead of stdout");

  GenParams gen_params;
  std::string gen_density = "1/2", gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_params.num_voters, "voters")->required();
  gen->add_option("--m", gen_params.num_candidates, "candidates")->required();
  gen->add_option("--k", gen_params.committee_size, "committee size")->required();
  gen->add_option("--density", gen_density, "approval probability in (0,1], e.g. 0.5 or 1/2");
  gen->add_option("--seed", gen_params.seed, "generator seed");
  gen->add_option("--out", gen_out, "instance file to write")->required();

  std::string convert_in, convert_out;
  int convert_k = 0, convert_m = 0;
  auto* convert = app.add_subcommand(
      "convert", "Convert 'one ballot per line' approval profiles to the instance format");
  convert->add_option("--in", convert_in, "text file, space-separated 1-based indices per line")
      ->required();
  convert->add_option("--k", convert_k, "committee size")->required();
  convert->add_option("--m", convert_m, "candidate count (default: largest index seen)");
  convert->add_option("--out", convert_out, "instance file to write")->required();

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  std::string program = "bwcv";
  argv.push_back(program.data());
  for (auto& arg : storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (run->parsed()) return do_run(run_args);
    if (verify->parsed()) return do_verify(verify_in, verify_outcome, verify_axioms, verify_out);
    if (gen->parsed()) {
      gen_params.density = parse_density(gen_density);
      write_file(gen_out, write_instance(generate_instance(gen_params)));
      return kExitOk;
    }
    if (convert->parsed()) {
      std::optional<int> m;
      if (convert_m > 0) m = convert_m;
      write_file(convert_out,
                 write_instance(instance_from_ballot_lines(read_file(convert_in), convert_k, m)));
      return kExitOk;
    }
    return kExitFailure;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace bwcv
