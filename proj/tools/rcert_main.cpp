#include <iostream>

#include <CLI11.hpp>

#include "rcert/errors.hpp"
#include "rcert/experiment.hpp"
#include "rcert/task_io.hpp"

namespace {

void add_common(CLI::App* cmd, rcert::ExperimentConfig& cfg) {
  cmd->add_option("--task", cfg.task_path, "task file (JSON)");
  cmd->add_option("--seed", cfg.seed, "master seed");
  cmd->add_option("--trials", cfg.trials, "number of seeded trials");
  cmd->add_option("--out", cfg.out_path, "output report path");
  cmd->add_option("--format", cfg.format, "output format: json|csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robustcert: exact workbench for black-box robustness certification,\n"
               "query-bounded attacks, and robust learners"};
  app.require_subcommand(1);

  rcert::ExperimentConfig cfg;
  std::string export_dir;

  auto* certify = app.add_subcommand("certify", "estimate robust loss through label queries");
  add_common(certify, cfg);
  certify->add_option("--mode", cfg.mode, "witness|l1|tolerant")->required();
  certify->add_option("--eps", cfg.eps, "accuracy target");
  certify->add_option("--delta", cfg.delta, "confidence target");
  certify->add_option("--gamma", cfg.gamma, "tolerance ratio minus one");
  certify->add_option("--m", cfg.m, "sample size (default: hoeffding_size(eps, delta))");

  auto* attack = app.add_subcommand("attack", "run a query-bounded adversary");
  add_common(attack, cfg);
  attack->add_option("--adversary", cfg.mode, "threshold|exhaustive")->required();
  attack->add_option("--sample", cfg.m, "sample size");

  auto* learn = app.add_subcommand("learn", "run a robust learner");
  add_common(learn, cfg);
  learn->add_option("--algo", cfg.mode, "erm|ssl-margin|ssl-unlabeled|ext-oracle|cluster|compress")
      ->required();
  learn->add_option("--m", cfg.m, "labeled sample size");
  learn->add_option("--m-unlabeled", cfg.m_unlabeled, "unlabeled sample size");
  learn->add_option("--eps", cfg.eps, "accuracy target");
  learn->add_option("--delta", cfg.delta, "confidence target");

  auto* game = app.add_subcommand("game", "play an answering oracle against a certifier strategy");
  add_common(game, cfg);
  game->add_option("--kind", cfg.mode, "l2|tolerant")->required();
  game->add_option("--strategy", cfg.strategy, "'random' or a strategy script path");
  game->add_option("--max-queries", cfg.max_queries, "strategy query budget");
  game->add_option("--gamma", cfg.gamma, "tolerance ratio minus one (tolerant game)");

  auto* verify = app.add_subcommand("verify-constructions",
                                    "verify the paired-distribution instances exactly");
  add_common(verify, cfg);
  verify->add_option("--which", cfg.mode, "thm32|thm36|all");
  verify->add_option("--export-tasks", export_dir, "also write the instances as task files here");

  auto* report = app.add_subcommand("report", "reformat an existing report");
  add_common(report, cfg);
  report->add_option("--in", cfg.in_path, "input report (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "verify-constructions" && !export_dir.empty()) {
      for (const auto& ci : {rcert::build_thm32(), rcert::build_thm36()}) {
        const std::string path = export_dir + "/" + ci.name + ".json";
        rcert::write_text_file(path, rcert::construction_to_task_json(ci).dump(2) + "\n");
      }
    }
    const rcert::TrialReport result = rcert::run(cfg);
    if (cfg.out_path.empty()) std::cout << result.to_json().dump(2) << "\n";
    if (!result.ok) {
      std::cerr << "verification failed\n";
      return 4;
    }
    return 0;
  } catch (const rcert::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rcert::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 3;
  } catch (const rcert::InvariantViolation& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 4;
  }
}
