#include "rcert/experiment.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "rcert/adversary.hpp"
#include "rcert/bounds.hpp"
#include "rcert/certify.hpp"
#include "rcert/compression.hpp"
#include "rcert/errors.hpp"
#include "rcert/games.hpp"
#include "rcert/learners.hpp"
#include "rcert/rng.hpp"
#include "rcert/task_io.hpp"

namespace rcert {

using nlohmann::json;

json ExperimentConfig::to_json() const {
  json j;
  j["command"] = command;
  j["task"] = task_path;
  j["mode"] = mode;
  j["eps"] = eps;
  j["delta"] = delta;
  j["gamma"] = gamma;
  j["m"] = m;
  j["m_unlabeled"] = m_unlabeled;
  j["seed"] = seed;
  j["trials"] = trials;
  j["max_queries"] = max_queries;
  j["strategy"] = strategy;
  j["in"] = in_path;
  j["format"] = format;
  return j;
}

std::string ExperimentConfig::hash() const {
  std::ostringstream os;
  os << std::hex << fnv1a(to_json().dump());
  return os.str();
}

json TrialReport::to_json() const {
  json j;
  j["version"] = kArtifactVersion;
  j["config"] = config.to_json();
  j["config_hash"] = config.hash();
  j["ok"] = ok;
  j["trials"] = rows;
  j["aggregates"] = aggregates;
  j["timestamp"] = timestamp;
  j["runtime_ms"] = runtime_ms;
  return j;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string TrialReport::to_csv() const {
  std::set<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, value] : row.items()) {
      (void)value;
      columns.insert(key);
    }
  std::ostringstream os;
  bool first = true;
  for (const auto& c : columns) {
    if (!first) os << ",";
    os << csv_escape(c);
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& c : columns) {
      if (!first) os << ",";
      first = false;
      if (row.contains(c)) {
        const auto& v = row.at(c);
        os << csv_escape(v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string now_iso8601() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

const BallPerturbation& require_ball(const PerturbationType& u, const std::string& where) {
  const auto* b = std::get_if<BallPerturbation>(&u);
  if (!b) throw ConfigError(where + " needs a ball perturbation in the task");
  return *b;
}

struct TolerantSetting {
  Rat radius;
  double gamma;
};

TolerantSetting tolerant_setting(const PerturbationType& u, double config_gamma) {
  if (const auto* pair = std::get_if<RestrictionPairPerturbation>(&u)) {
    const auto& inner = require_ball(restriction_inner(*pair), "tolerant certification");
    const auto& outer = require_ball(restriction_outer(*pair), "tolerant certification");
    if (inner.norm != Norm::L2 || outer.norm != Norm::L2)
      throw ConfigError("tolerant certification needs L2 balls");
    const double g = (outer.radius / inner.radius).to_double() - 1.0;
    if (!(g > 0)) throw ConfigError("outer radius must strictly exceed inner radius");
    return {inner.radius, g};
  }
  const auto& ball = require_ball(u, "tolerant certification");
  if (!(config_gamma > 0)) throw ConfigError("tolerant certification needs --gamma > 0");
  return {ball.radius, config_gamma};
}

json rat_json(const Rat& r) {
  json j;
  j["exact"] = r.str();
  j["value"] = r.to_double();
  return j;
}

// Trials are independent (each owns its oracle and derived seed), so they
// run on a small worker pool; rows land in per-trial slots, keeping reports
// byte-identical regardless of thread count.
template <typename Fn>
json run_trials(long trials, Fn&& body) {
  std::vector<json> rows(trials);
  const unsigned workers = static_cast<unsigned>(
      std::min<long>(trials, std::max(1u, std::thread::hardware_concurrency())));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      while (true) {
        const long t = next.fetch_add(1);
        if (t >= trials) return;
        try {
          rows[t] = body(t);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  json arr = json::array();
  for (auto& r : rows) arr.push_back(std::move(r));
  return arr;
}

json run_verify_constructions(const ExperimentConfig& cfg, bool& ok) {
  json rows = json::array();
  std::vector<ConstructionInstance> instances;
  const std::string which = cfg.mode.empty() ? "all" : cfg.mode;
  if (which == "thm32" || which == "all") instances.push_back(build_thm32());
  if (which == "thm36" || which == "all") instances.push_back(build_thm36());
  if (instances.empty())
    throw ConfigError("unknown construction selector: " + which + " (thm32|thm36|all)");
  for (const auto& ci : instances) {
    const auto rep = verify_indistinguishability(ci);
    json row;
    row["instance"] = rep.instance;
    row["pass"] = rep.pass;
    row["minimizer_p1"] = rep.minimizer_p1;
    row["minimizer_p2"] = rep.minimizer_p2;
    row["gap"] = rep.gap.str();
    row["checks"] = rep.checks;
    row["failures"] = rep.failures;
    rows.push_back(std::move(row));
    ok = ok && rep.pass;
  }
  return rows;
}

struct LoadedTask {
  Task task;
  explicit LoadedTask(const ExperimentConfig& cfg) {
    if (cfg.task_path.empty()) throw ConfigError("--task is required for this command");
    task = load_task(cfg.task_path);
  }
  const DiscreteDistribution& dist() const {
    if (!task.distribution) throw ConfigError("task has no distribution");
    return *task.distribution;
  }
  const Hypothesis& target() const {
    if (!task.target) throw ConfigError("task has no target hypothesis");
    return *task.target;
  }
  const PerturbationType& perturbation() const {
    if (!task.perturbation) throw ConfigError("task has no perturbation type");
    return *task.perturbation;
  }
  const FiniteClass& finite_class() const {
    if (!task.cls) throw ConfigError("task has no hypothesis class");
    const auto* fin = std::get_if<FiniteClass>(&*task.cls);
    if (!fin) throw ConfigError("this command needs a finite class");
    return *fin;
  }
};

json run_certify(const ExperimentConfig& cfg, json& aggregates) {
  LoadedTask lt(cfg);
  const long m = cfg.m > 0 ? cfg.m : hoeffding_size(cfg.eps, cfg.delta);
  json rows;
  const char* flag_key = "within_eps";

  if (cfg.mode == "l1") {
    const auto& ball = require_ball(lt.perturbation(), "l1 certification");
    if (ball.norm != Norm::L1) throw ConfigError("l1 certification needs an L1 ball");
    const Rat exact = true_loss(lt.target(), lt.dist(), lt.perturbation());
    rows = run_trials(cfg.trials, [&](long t) {
      const uint64_t s = derive_seed(cfg.seed, t);
      const LabeledSample sample_s = sample(lt.dist(), m, s);
      BudgetedLabelOracle oracle(lt.target());
      const auto rep = certify_halfspace_l1(oracle, sample_s, ball.radius, cfg.eps, cfg.delta);
      json row;
      row["trial"] = t;
      row["seed"] = s;
      row["estimate"] = rat_json(rep.estimate);
      row["q_used"] = rep.q_used;
      row["within_eps"] = (rep.estimate - exact).abs().to_double() < cfg.eps;
      return row;
    });
    aggregates["exact_robust_loss"] = rat_json(exact);
  } else if (cfg.mode == "tolerant") {
    const auto setting = tolerant_setting(lt.perturbation(), cfg.gamma);
    const PerturbationType inner = BallPerturbation{Norm::L2, setting.radius};
    const PerturbationType outer =
        BallPerturbation{Norm::L2, setting.radius * Rat(mpq_class(1.0 + setting.gamma))};
    const Rat r_u = true_loss(lt.target(), lt.dist(), inner);
    const Rat r_v = true_loss(lt.target(), lt.dist(), outer);
    rows = run_trials(cfg.trials, [&](long t) {
      const uint64_t s = derive_seed(cfg.seed, t);
      const LabeledSample sample_s = sample(lt.dist(), m, s);
      BudgetedLabelOracle oracle(lt.target());
      const auto rep = certify_tolerant_l2(oracle, sample_s, setting.radius, setting.gamma,
                                           cfg.eps, cfg.delta);
      const double est = rep.estimate.to_double();
      json row;
      row["trial"] = t;
      row["seed"] = s;
      row["estimate"] = rat_json(rep.estimate);
      row["q_used"] = rep.q_used;
      row["in_bracket"] =
          est > r_u.to_double() - cfg.eps && est < r_v.to_double() + cfg.eps;
      return row;
    });
    flag_key = "in_bracket";
    aggregates["robust_loss_inner"] = rat_json(r_u);
    aggregates["robust_loss_outer"] = rat_json(r_v);
    aggregates["polygon_vertices"] = tolerant_polygon_vertices(setting.gamma);
  } else if (cfg.mode == "witness") {
    const auto* fm = std::get_if<FiniteMapPerturbation>(&lt.perturbation());
    if (!fm) throw ConfigError("witness certification needs a finite-map perturbation");
    const auto& cls = lt.finite_class();
    const Rat exact = true_loss(lt.target(), lt.dist(), lt.perturbation());
    // witnesses depend only on the support, so build them once up front
    std::map<Point, WitnessSet> witnesses;
    for (const auto& atom : lt.dist().atoms())
      witnesses.emplace(atom.point, build_witness_set(cls, *fm, atom.point));
    auto witness_fn = [&](const Point& x) { return witnesses.at(x); };
    rows = run_trials(cfg.trials, [&](long t) {
      const uint64_t s = derive_seed(cfg.seed, t);
      const LabeledSample sample_s = sample(lt.dist(), m, s);
      std::vector<Label> labels;
      for (const auto& e : sample_s) labels.push_back(e.label);
      BudgetedLabelOracle oracle(lt.target());
      const auto rep =
          certify_witness(oracle, points_of(sample_s), witness_fn, labels, cfg.eps, cfg.delta);
      json row;
      row["trial"] = t;
      row["seed"] = s;
      row["estimate"] = rat_json(rep.estimate);
      row["q_used"] = rep.q_used;
      row["within_eps"] = (rep.estimate - exact).abs().to_double() < cfg.eps;
      return row;
    });
    aggregates["exact_robust_loss"] = rat_json(exact);
  } else {
    throw ConfigError("unknown certify mode: " + cfg.mode + " (witness|l1|tolerant)");
  }
  long successes = 0;
  for (const auto& row : rows) successes += row.at(flag_key).get<bool>();
  aggregates["m"] = m;
  aggregates["success_fraction"] = static_cast<double>(successes) / cfg.trials;
  return rows;
}

json run_attack(const ExperimentConfig& cfg, json& aggregates) {
  LoadedTask lt(cfg);
  const long m = cfg.m > 0 ? cfg.m : 10;
  std::unique_ptr<Adversary> adv;
  if (cfg.mode == "threshold")
    adv = std::make_unique<ThresholdEndpointsAdversary>();
  else if (cfg.mode == "exhaustive")
    adv = std::make_unique<FiniteExhaustiveAdversary>();
  else
    throw ConfigError("unknown adversary: " + cfg.mode + " (threshold|exhaustive)");

  const json rows = run_trials(cfg.trials, [&](long t) {
    const uint64_t s = derive_seed(cfg.seed, t);
    LabeledSample sample_s = sample(lt.dist(), m, s);
    // the attack input carries the black box's own labels at the sample
    for (auto& e : sample_s) e.label = evaluate(lt.target(), e.point);
    BudgetedLabelOracle oracle(lt.target());
    const AttackResult res = adv->attack(oracle, sample_s, lt.perturbation());
    std::vector<Point> attack_points;
    json points = json::array();
    for (const auto& hit : res.attack_set) {
      attack_points.push_back(hit.adversarial);
      json p;
      p["point"] = point_to_json(hit.adversarial);
      p["source_index"] = hit.source_index;
      points.push_back(std::move(p));
    }
    json row;
    row["trial"] = t;
    row["seed"] = s;
    row["queries"] = res.queries.queries_used;
    row["transcript_hash"] = res.queries.transcript_hash;
    row["transcript_jsonl"] = oracle.transcript_jsonl();
    row["attack_set"] = points;
    row["admissible"] =
        is_admissible_attack(attack_points, points_of(sample_s), lt.target(), lt.perturbation());
    return row;
  });
  long admissible_count = 0;
  for (const auto& row : rows) admissible_count += row.at("admissible").get<bool>();
  aggregates["m"] = m;
  aggregates["admissible_fraction"] = static_cast<double>(admissible_count) / cfg.trials;
  return rows;
}

json describe_hypothesis_json(const Hypothesis& h) { return hypothesis_to_json(h); }

json run_learn(const ExperimentConfig& cfg, json& aggregates) {
  LoadedTask lt(cfg);
  const long m = cfg.m > 0 ? cfg.m : 50;

  const json rows = run_trials(cfg.trials, [&](long t) {
    const uint64_t s = derive_seed(cfg.seed, t);
    const LabeledSample sample_s = sample(lt.dist(), m, s);
    Hypothesis learned;
    if (cfg.mode == "erm") {
      if (!lt.task.cls) throw ConfigError("task has no hypothesis class");
      learned = erm_robust(*lt.task.cls, sample_s, lt.perturbation());
    } else if (cfg.mode == "ssl-margin") {
      IdealOracles oracles(lt.dist(), lt.perturbation(), *lt.task.cls, lt.task.domain);
      learned = ssl_margin_prune(lt.finite_class(), sample_s,
                                 [&](const Hypothesis& h) { return oracles.margin_weight(h); });
    } else if (cfg.mode == "ssl-unlabeled") {
      const long mu = cfg.m_unlabeled > 0 ? cfg.m_unlabeled : m;
      const LabeledSample unlabeled = sample(lt.dist(), mu, derive_seed(s, 1));
      learned = ssl_unlabeled_prune(lt.finite_class(), sample_s, points_of(unlabeled),
                                    lt.perturbation());
    } else if (cfg.mode == "ext-oracle") {
      IdealOracles oracles(lt.dist(), lt.perturbation(), *lt.task.cls, lt.task.domain);
      learned = extended_oracle_learner(lt.finite_class(), sample_s, oracles);
    } else if (cfg.mode == "cluster") {
      const auto* fm = std::get_if<FiniteMapPerturbation>(&lt.perturbation());
      if (!fm) throw ConfigError("cluster learner needs a finite-map perturbation");
      std::vector<Point> support;
      for (const auto& a : lt.dist().atoms()) support.push_back(a.point);
      learned = cluster_learner(lt.finite_class(), sample_s, support, *fm);
    } else if (cfg.mode == "compress") {
      LabeledSample consistent = sample_s;
      for (auto& e : consistent) e.label = evaluate(lt.target(), e.point);
      BudgetedLabelOracle oracle(lt.target());
      ThresholdEndpointsAdversary adv;
      learned = compression_learner(consistent, lt.perturbation(), oracle, adv);
    } else {
      throw ConfigError("unknown learn algorithm: " + cfg.mode +
                        " (erm|ssl-margin|ssl-unlabeled|ext-oracle|cluster|compress)");
    }
    const Rat loss = true_loss(learned, lt.dist(), lt.perturbation());
    json row;
    row["trial"] = t;
    row["seed"] = s;
    row["hypothesis"] = describe_hypothesis_json(learned);
    row["true_robust_loss"] = rat_json(loss);
    row["within_2eps"] = loss.to_double() <= 2 * cfg.eps;
    return row;
  });
  double loss_sum = 0;
  long successes = 0;
  for (const auto& row : rows) {
    loss_sum += row.at("true_robust_loss").at("value").get<double>();
    successes += row.at("within_2eps").get<bool>();
  }
  aggregates["m"] = m;
  aggregates["mean_true_robust_loss"] = loss_sum / cfg.trials;
  aggregates["success_fraction"] = static_cast<double>(successes) / cfg.trials;
  return rows;
}

CertifierStrategy strategy_from_script(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open strategy script: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed strategy script: ") + e.what());
  }
  std::vector<Point> queries;
  for (const auto& q : j.at("queries")) queries.push_back(point_from_json(q));
  return scripted_strategy(std::move(queries), j.at("verdict").get<bool>());
}

json run_game(const ExperimentConfig& cfg, json& aggregates, bool& ok) {
  Point x0 = Point::plane(Rat(0), Rat(0));
  Rat radius(1);
  Rat gamma_rat(1, 10);
  if (!cfg.task_path.empty()) {
    const Task task = load_task(cfg.task_path);
    if (task.distribution && task.distribution->size() > 0)
      x0 = task.distribution->atoms().front().point;
    if (task.perturbation) {
      if (const auto* pair = std::get_if<RestrictionPairPerturbation>(&*task.perturbation)) {
        radius = require_ball(restriction_inner(*pair), "tolerant game").radius;
        const Rat outer = require_ball(restriction_outer(*pair), "tolerant game").radius;
        gamma_rat = outer / radius - Rat(1);
      } else {
        radius = require_ball(*task.perturbation, "game").radius;
      }
    }
  } else if (cfg.gamma > 0) {
    gamma_rat = Rat(mpq_class(cfg.gamma));
  }

  if (cfg.mode != "l2" && cfg.mode != "tolerant")
    throw ConfigError("unknown game kind: " + cfg.mode + " (l2|tolerant)");

  const json rows = run_trials(cfg.trials, [&](long t) {
    const uint64_t s = derive_seed(cfg.seed, t);
    CertifierStrategy strategy;
    if (cfg.strategy == "random") {
      strategy = cfg.mode == "l2" ? random_l2_strategy(s, cfg.max_queries)
                                  : random_singleton_strategy(s, cfg.max_queries, x0, radius);
    } else {
      strategy = strategy_from_script(cfg.strategy);
    }
    const Refutation ref = cfg.mode == "l2"
                               ? run_l2_game(strategy)
                               : run_tolerant_singleton_game(strategy, x0, radius, gamma_rat);
    json row;
    row["trial"] = t;
    row["seed"] = s;
    row["queries"] = ref.transcript.size();
    row["verdict_robust"] = ref.verdict_robust;
    row["refuting"] = point_to_json(ref.refuting);
    row["actual_loss_inner"] = ref.actual_loss_inner.str();
    if (ref.actual_loss_outer) row["actual_loss_outer"] = ref.actual_loss_outer->str();
    row["replay_ok"] = ref.replay_ok;
    row["verified"] = ref.verified();
    return row;
  });
  long verified = 0;
  for (const auto& row : rows) verified += row.at("verified").get<bool>();
  ok = ok && verified == cfg.trials;
  aggregates["verified_fraction"] = static_cast<double>(verified) / cfg.trials;
  return rows;
}

json run_report(const ExperimentConfig& cfg, json& aggregates, std::string& csv_out) {
  if (cfg.in_path.empty()) throw ConfigError("report needs --in <report.json>");
  std::ifstream in(cfg.in_path);
  if (!in) throw ConfigError("cannot open report: " + cfg.in_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report JSON: ") + e.what());
  }
  aggregates = j.value("aggregates", json::object());
  const json rows = j.value("trials", json::array());
  TrialReport tmp;
  tmp.rows = rows;
  csv_out = tmp.to_csv();
  return rows;
}

}  // namespace

TrialReport run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.trials < 1) throw ConfigError("--trials must be at least 1");

  TrialReport report;
  report.config = config;
  std::string csv_override;

  if (config.command == "verify-constructions")
    report.rows = run_verify_constructions(config, report.ok);
  else if (config.command == "certify")
    report.rows = run_certify(config, report.aggregates);
  else if (config.command == "attack")
    report.rows = run_attack(config, report.aggregates);
  else if (config.command == "learn")
    report.rows = run_learn(config, report.aggregates);
  else if (config.command == "game")
    report.rows = run_game(config, report.aggregates, report.ok);
  else if (config.command == "report")
    report.rows = run_report(config, report.aggregates, csv_override);
  else
    throw ConfigError("unknown command: " + config.command);

  report.timestamp = now_iso8601();
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();

  if (!config.out_path.empty()) {
    if (config.format == "csv")
      write_text_file(config.out_path,
                      csv_override.empty() ? report.to_csv() : csv_override);
    else if (config.format == "json")
      write_text_file(config.out_path, report.to_json().dump(2) + "\n");
    else
      throw ConfigError("unknown format: " + config.format + " (json|csv)");
  }
  return report;
}

}  // namespace rcert
