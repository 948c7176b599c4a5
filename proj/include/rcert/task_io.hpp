#ifndef RCERT_TASK_IO_HPP
#define RCERT_TASK_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "rcert/constructions.hpp"
#include "rcert/distribution.hpp"
#include "rcert/hypothesis.hpp"
#include "rcert/perturbation.hpp"

namespace rcert {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// A task file bundles a domain, a hypothesis class, a perturbation type, a
/// distribution and (optionally) the hidden target hypothesis that oracles
/// answer for. Rationals are serialized as "p/q" strings; symbolic points as
/// strings, numeric points as arrays of rational strings.
struct Task {
  std::vector<Point> domain;
  std::optional<HypothesisClass> cls;
  std::optional<PerturbationType> perturbation;
  std::optional<DiscreteDistribution> distribution;
  std::optional<Hypothesis> target;
};

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

nlohmann::json hypothesis_to_json(const Hypothesis& h);
Hypothesis hypothesis_from_json(const nlohmann::json& j);

nlohmann::json perturbation_to_json(const PerturbationType& u);
PerturbationType perturbation_from_json(const nlohmann::json& j);

nlohmann::json distribution_to_json(const DiscreteDistribution& p);
DiscreteDistribution distribution_from_json(const nlohmann::json& j);

nlohmann::json class_to_json(const HypothesisClass& cls);
HypothesisClass class_from_json(const nlohmann::json& j);

nlohmann::json task_to_json(const Task& t);
Task task_from_json(const nlohmann::json& j);

Task load_task(const std::string& path);
void save_task(const Task& t, const std::string& path);

/// A construction instance as a task file (p1 as the distribution; the
/// paired p2 is carried alongside under "distribution2").
nlohmann::json construction_to_task_json(const ConstructionInstance& ci);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace rcert

#endif  // RCERT_TASK_IO_HPP
