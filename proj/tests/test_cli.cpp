#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rcert/errors.hpp"
#include "rcert/experiment.hpp"
#include "rcert/task_io.hpp"

using namespace rcert;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("/tmp/rcert_test_") + name;
}

Task halfspace_l1_task() {
  Task t;
  t.cls = HalfspaceFamily{};
  t.perturbation = BallPerturbation{Norm::L1, Rat(1, 2)};
  t.target = HalfspaceHypothesis{Rat(1), Rat(0), Rat(-2)};
  std::vector<Atom> atoms;
  const std::vector<std::tuple<Rat, Rat, Label>> spec_pts = {
      {Rat(0), Rat(0), 0},      {Rat(7, 4), Rat(0), 0},  {Rat(9, 4), Rat(1, 2), 1},
      {Rat(4), Rat(-1), 1},     {Rat(2), Rat(3), 1},     {Rat(1), Rat(1), 1},
      {Rat(3), Rat(2), 0},      {Rat(5, 2), Rat(-2), 1}, {Rat(3, 2), Rat(0), 0},
      {Rat(-1), Rat(5), 0}};
  for (const auto& [x, y, l] : spec_pts)
    atoms.push_back({Point::plane(x, y), l, Rat(1, 10)});
  t.distribution = DiscreteDistribution(std::move(atoms));
  return t;
}

}  // namespace

TEST_CASE("task files round-trip") {
  const Task t = halfspace_l1_task();
  const std::string path = temp_path("task.json");
  save_task(t, path);
  const Task back = load_task(path);
  REQUIRE(back.distribution);
  REQUIRE(back.target);
  CHECK(back.distribution->atoms().size() == 10);
  CHECK(task_to_json(back).dump() == task_to_json(t).dump());
  std::remove(path.c_str());
}

TEST_CASE("task validation failures") {
  CHECK_THROWS_AS(load_task("/nonexistent/task.json"), ConfigError);

  const std::string path = temp_path("bad.json");
  write_text_file(path, "{ not json ]");
  CHECK_THROWS_AS(load_task(path), ConfigError);
  write_text_file(path, R"({"distribution":{"atoms":[{"point":"a","label":0,"weight":"1/2"}]}})");
  CHECK_THROWS_AS(load_task(path), ConfigError);  // weights must sum to 1
  std::remove(path.c_str());
}

TEST_CASE("verify-constructions run") {
  ExperimentConfig cfg;
  cfg.command = "verify-constructions";
  cfg.mode = "all";
  const TrialReport rep = run(cfg);
  CHECK(rep.ok);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].at("pass").get<bool>());
  CHECK(rep.rows[1].at("pass").get<bool>());
}

TEST_CASE("reports are byte-identical modulo the volatile fields") {
  const std::string path = temp_path("l1_task.json");
  save_task(halfspace_l1_task(), path);

  ExperimentConfig cfg;
  cfg.command = "certify";
  cfg.mode = "l1";
  cfg.task_path = path;
  cfg.eps = 0.1;
  cfg.delta = 0.1;
  cfg.m = 40;
  cfg.trials = 5;
  cfg.seed = 99;

  auto scrub = [](nlohmann::json j) {
    j.erase("timestamp");
    j.erase("runtime_ms");
    return j.dump();
  };
  const TrialReport a = run(cfg);
  const TrialReport b = run(cfg);
  CHECK(scrub(a.to_json()) == scrub(b.to_json()));

  ExperimentConfig other = cfg;
  other.seed = 100;
  const TrialReport c = run(other);
  CHECK(scrub(a.to_json()) != scrub(c.to_json()));
  CHECK(a.to_json().at("config_hash") != c.to_json().at("config_hash"));
  std::remove(path.c_str());
}

TEST_CASE("certify l1 trial rows carry exact estimates and query counts") {
  const std::string path = temp_path("l1_task2.json");
  save_task(halfspace_l1_task(), path);
  ExperimentConfig cfg;
  cfg.command = "certify";
  cfg.mode = "l1";
  cfg.task_path = path;
  cfg.m = 60;
  cfg.trials = 3;
  const TrialReport rep = run(cfg);
  CHECK(rep.aggregates.at("exact_robust_loss").at("exact").get<std::string>() == "3/5");
  for (const auto& row : rep.rows) CHECK(row.at("q_used").get<uint64_t>() == 300);
  std::remove(path.c_str());
}

TEST_CASE("game runs produce verified refutations through the dispatcher") {
  ExperimentConfig cfg;
  cfg.command = "game";
  cfg.mode = "l2";
  cfg.trials = 5;
  cfg.max_queries = 20;
  const TrialReport rep = run(cfg);
  CHECK(rep.ok);
  CHECK(rep.aggregates.at("verified_fraction").get<double>() == 1.0);

  cfg.mode = "tolerant";
  const TrialReport rep2 = run(cfg);
  CHECK(rep2.ok);
}

TEST_CASE("csv report conversion") {
  ExperimentConfig cfg;
  cfg.command = "verify-constructions";
  cfg.mode = "all";
  cfg.out_path = temp_path("report.json");
  run(cfg);

  ExperimentConfig conv;
  conv.command = "report";
  conv.in_path = cfg.out_path;
  conv.format = "csv";
  conv.out_path = temp_path("report.csv");
  run(conv);

  std::ifstream in(conv.out_path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header.find("instance") != std::string::npos);
  CHECK(header.find("pass") != std::string::npos);
  std::remove(cfg.out_path.c_str());
  std::remove(conv.out_path.c_str());
}

TEST_CASE("shipped task files load and drive the pipelines") {
  const std::string tasks = std::string(RCERT_SOURCE_DIR) + "/tasks/";
  for (const char* name :
       {"thm32.json", "thm36.json", "halfspace_l1.json", "halfspace_tolerant.json",
        "threshold_ball.json", "clusters.json"})
    CHECK_NOTHROW(load_task(tasks + name));

  // attack on the threshold task: 2|S| queries, admissible
  ExperimentConfig attack;
  attack.command = "attack";
  attack.mode = "threshold";
  attack.task_path = tasks + "threshold_ball.json";
  attack.m = 12;
  attack.trials = 4;
  const TrialReport arep = run(attack);
  CHECK(arep.aggregates.at("admissible_fraction").get<double>() == 1.0);
  for (const auto& row : arep.rows) CHECK(row.at("queries").get<uint64_t>() == 24);

  // exhaustive attack on the exported 7-point instance
  ExperimentConfig attack2;
  attack2.command = "attack";
  attack2.mode = "exhaustive";
  attack2.task_path = tasks + "thm32.json";
  attack2.m = 8;
  attack2.trials = 4;
  CHECK(run(attack2).aggregates.at("admissible_fraction").get<double>() == 1.0);

  // compression learner on the threshold task reaches zero loss quickly
  ExperimentConfig learn;
  learn.command = "learn";
  learn.mode = "compress";
  learn.task_path = tasks + "threshold_ball.json";
  learn.m = 120;
  learn.trials = 5;
  const TrialReport lrep = run(learn);
  CHECK(lrep.aggregates.at("mean_true_robust_loss").get<double>() == 0.0);

  // robust erm on the exported 7-point instance picks the 2/6 minimizer
  ExperimentConfig erm;
  erm.command = "learn";
  erm.mode = "erm";
  erm.task_path = tasks + "thm32.json";
  erm.m = 400;
  erm.trials = 3;
  erm.seed = 5;
  const TrialReport erep = run(erm);
  for (const auto& row : erep.rows)
    CHECK(row.at("true_robust_loss").at("exact").get<std::string>() == "1/3");

  // semi-supervised and cluster learners on the realizable cluster task
  for (const char* algo : {"ssl-margin", "ssl-unlabeled", "ext-oracle", "cluster"}) {
    ExperimentConfig ssl;
    ssl.command = "learn";
    ssl.mode = algo;
    ssl.task_path = tasks + "clusters.json";
    ssl.m = 60;
    ssl.m_unlabeled = 60;
    ssl.trials = 3;
    const TrialReport srep = run(ssl);
    CHECK(srep.aggregates.at("mean_true_robust_loss").get<double>() == 0.0);
  }

  // tolerant certification pulls gamma from the restriction pair
  ExperimentConfig tol;
  tol.command = "certify";
  tol.mode = "tolerant";
  tol.task_path = tasks + "halfspace_tolerant.json";
  tol.m = 100;
  tol.trials = 3;
  const TrialReport trep = run(tol);
  CHECK(trep.aggregates.at("polygon_vertices").get<int>() == 8);
  CHECK(trep.aggregates.at("robust_loss_inner").at("exact").get<std::string>() == "1/2");
  CHECK(trep.aggregates.at("robust_loss_outer").at("exact").get<std::string>() == "3/5");
}

TEST_CASE("scripted game strategies load from JSON") {
  const std::string path = temp_path("strategy.json");
  write_text_file(path, R"({"queries": [["2", "0"], ["0", "1"]], "verdict": true})");
  ExperimentConfig cfg;
  cfg.command = "game";
  cfg.mode = "l2";
  cfg.strategy = path;
  cfg.trials = 1;
  const TrialReport rep = run(cfg);
  CHECK(rep.ok);
  CHECK(rep.rows[0].at("queries").get<uint64_t>() == 2);
  CHECK(rep.rows[0].at("verdict_robust").get<bool>());
  std::remove(path.c_str());
}

TEST_CASE("config errors carry exit-code semantics") {
  ExperimentConfig cfg;
  cfg.command = "unknown";
  CHECK_THROWS_AS(run(cfg), ConfigError);

  ExperimentConfig bad_trials;
  bad_trials.command = "game";
  bad_trials.mode = "l2";
  bad_trials.trials = 0;
  CHECK_THROWS_AS(run(bad_trials), ConfigError);

  ExperimentConfig no_task;
  no_task.command = "certify";
  no_task.mode = "l1";
  CHECK_THROWS_AS(run(no_task), ConfigError);
}
