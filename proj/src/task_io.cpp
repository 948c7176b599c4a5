#include "rcert/task_io.hpp"

#include <fstream>

#include "rcert/errors.hpp"

namespace rcert {

using nlohmann::json;

json point_to_json(const Point& p) {
  if (p.is_symbolic()) return p.id();
  json arr = json::array();
  for (const auto& c : p.coords()) arr.push_back(c.str());
  return arr;
}

Point point_from_json(const json& j) {
  if (j.is_string()) return Point::symbolic(j.get<std::string>());
  if (j.is_array()) {
    if (j.size() == 1) return Point::line(Rat::parse(j[0].get<std::string>()));
    if (j.size() == 2)
      return Point::plane(Rat::parse(j[0].get<std::string>()), Rat::parse(j[1].get<std::string>()));
    throw ConfigError("numeric points need 1 or 2 coordinates");
  }
  throw ConfigError("a point is a string id or an array of rational strings");
}

json hypothesis_to_json(const Hypothesis& h) {
  json j;
  if (const auto* tab = std::get_if<TabularHypothesis>(&h)) {
    j["kind"] = "tabular";
    json labels = json::object();
    for (const auto& [p, l] : tab->labels) {
      if (!p.is_symbolic())
        throw ConfigError("tabular task files support symbolic points only");
      labels[p.id()] = l;
    }
    j["labels"] = std::move(labels);
    return j;
  }
  if (const auto* th = std::get_if<ThresholdHypothesis>(&h)) {
    j["kind"] = "threshold";
    j["t"] = th->t.str();
    j["geq"] = th->geq;
    return j;
  }
  const auto& hs = std::get<HalfspaceHypothesis>(h);
  j["kind"] = "halfspace";
  j["w"] = json::array({hs.w1.str(), hs.w2.str()});
  j["b"] = hs.b.str();
  return j;
}

Hypothesis hypothesis_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "tabular") {
    TabularHypothesis h;
    for (const auto& [key, value] : j.at("labels").items()) {
      const int label = value.get<int>();
      if (label != 0 && label != 1) throw ConfigError("tabular label must be 0 or 1");
      h.labels[Point::symbolic(key)] = label;
    }
    return h;
  }
  if (kind == "threshold") {
    ThresholdHypothesis h;
    h.t = Rat::parse(j.at("t").get<std::string>());
    h.geq = j.value("geq", true);
    return h;
  }
  if (kind == "halfspace") {
    HalfspaceHypothesis h;
    h.w1 = Rat::parse(j.at("w")[0].get<std::string>());
    h.w2 = Rat::parse(j.at("w")[1].get<std::string>());
    h.b = Rat::parse(j.at("b").get<std::string>());
    if (h.w1.is_zero() && h.w2.is_zero()) throw ConfigError("halfspace with zero normal");
    return h;
  }
  throw ConfigError("unknown hypothesis kind: " + kind);
}

namespace {

Norm norm_from_string(const std::string& s) {
  if (s == "l1") return Norm::L1;
  if (s == "l2") return Norm::L2;
  if (s == "linf") return Norm::Linf;
  throw ConfigError("unknown norm: " + s);
}

}  // namespace

json perturbation_to_json(const PerturbationType& u) {
  json j;
  if (const auto* fm = std::get_if<FiniteMapPerturbation>(&u)) {
    j["kind"] = "finite_map";
    json map = json::object();
    for (const auto& [p, targets] : fm->map) {
      if (!p.is_symbolic())
        throw ConfigError("finite-map task files support symbolic points only");
      json arr = json::array();
      for (const auto& t : targets) arr.push_back(point_to_json(t));
      map[p.id()] = std::move(arr);
    }
    j["map"] = std::move(map);
    return j;
  }
  if (const auto* b = std::get_if<BallPerturbation>(&u)) {
    j["kind"] = "ball";
    j["norm"] = norm_name(b->norm);
    j["radius"] = b->radius.str();
    return j;
  }
  const auto& pair = std::get<RestrictionPairPerturbation>(u);
  j["kind"] = "restriction_pair";
  j["inner"] = perturbation_to_json(restriction_inner(pair));
  j["outer"] = perturbation_to_json(restriction_outer(pair));
  return j;
}

PerturbationType perturbation_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite_map") {
    FiniteMapPerturbation u;
    for (const auto& [key, value] : j.at("map").items()) {
      std::vector<Point> targets;
      for (const auto& t : value) targets.push_back(point_from_json(t));
      u.map[Point::symbolic(key)] = std::move(targets);
    }
    return u;
  }
  if (kind == "ball") {
    BallPerturbation u;
    u.norm = norm_from_string(j.at("norm").get<std::string>());
    u.radius = Rat::parse(j.at("radius").get<std::string>());
    if (!(u.radius > Rat(0))) throw ConfigError("ball radius must be positive");
    return u;
  }
  if (kind == "restriction_pair")
    return make_restriction_pair(perturbation_from_json(j.at("inner")),
                                 perturbation_from_json(j.at("outer")));
  throw ConfigError("unknown perturbation kind: " + kind);
}

json distribution_to_json(const DiscreteDistribution& p) {
  json atoms = json::array();
  for (const auto& a : p.atoms()) {
    json atom;
    atom["point"] = point_to_json(a.point);
    atom["label"] = a.label;
    atom["weight"] = a.weight.str();
    atoms.push_back(std::move(atom));
  }
  json j;
  j["atoms"] = std::move(atoms);
  return j;
}

DiscreteDistribution distribution_from_json(const json& j) {
  std::vector<Atom> atoms;
  for (const auto& a : j.at("atoms")) {
    Atom atom;
    atom.point = point_from_json(a.at("point"));
    atom.label = a.at("label").get<int>();
    atom.weight = Rat::parse(a.at("weight").get<std::string>());
    atoms.push_back(std::move(atom));
  }
  return DiscreteDistribution(std::move(atoms));
}

json class_to_json(const HypothesisClass& cls) {
  json j;
  if (const auto* fin = std::get_if<FiniteClass>(&cls)) {
    j["kind"] = "finite";
    json members = json::array();
    for (const auto& h : fin->members) members.push_back(hypothesis_to_json(h));
    j["members"] = std::move(members);
    return j;
  }
  if (const auto* fam = std::get_if<ThresholdFamily>(&cls)) {
    j["kind"] = "threshold_family";
    j["geq"] = fam->geq;
    return j;
  }
  j["kind"] = "halfspace_family";
  return j;
}

HypothesisClass class_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") {
    FiniteClass cls;
    for (const auto& m : j.at("members")) cls.members.push_back(hypothesis_from_json(m));
    return cls;
  }
  if (kind == "threshold_family") {
    ThresholdFamily fam;
    fam.geq = j.value("geq", true);
    return fam;
  }
  if (kind == "halfspace_family") return HalfspaceFamily{};
  throw ConfigError("unknown class kind: " + kind);
}

json task_to_json(const Task& t) {
  json j;
  json domain = json::array();
  for (const auto& p : t.domain) domain.push_back(point_to_json(p));
  j["domain"] = std::move(domain);
  if (t.cls) j["class"] = class_to_json(*t.cls);
  if (t.perturbation) j["perturbation"] = perturbation_to_json(*t.perturbation);
  if (t.distribution) j["distribution"] = distribution_to_json(*t.distribution);
  if (t.target) j["target"] = hypothesis_to_json(*t.target);
  return j;
}

Task task_from_json(const json& j) {
  Task t;
  if (j.contains("domain"))
    for (const auto& p : j.at("domain")) t.domain.push_back(point_from_json(p));
  if (j.contains("class")) t.cls = class_from_json(j.at("class"));
  if (j.contains("perturbation")) t.perturbation = perturbation_from_json(j.at("perturbation"));
  if (j.contains("distribution")) t.distribution = distribution_from_json(j.at("distribution"));
  if (j.contains("target")) t.target = hypothesis_from_json(j.at("target"));
  if (t.cls)
    if (const auto* fin = std::get_if<FiniteClass>(&*t.cls))
      validate_finite_class(*fin, t.domain);
  if (t.perturbation && t.domain.size() > 0)
    if (const auto* pair = std::get_if<RestrictionPairPerturbation>(&*t.perturbation))
      validate_restriction(restriction_inner(*pair), restriction_outer(*pair), t.domain);
  return t;
}

Task load_task(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open task file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("malformed JSON in " + path + ": " + e.what());
  }
  return task_from_json(j);
}

void save_task(const Task& t, const std::string& path) {
  write_text_file(path, task_to_json(t).dump(2) + "\n");
}

json construction_to_task_json(const ConstructionInstance& ci) {
  Task t;
  t.domain = ci.domain;
  t.cls = ci.cls;
  t.perturbation = ci.u;
  t.distribution = ci.p1;
  t.target = ci.cls.members.front();  // black-box default for attack/certify runs
  json j = task_to_json(t);
  j["distribution2"] = distribution_to_json(ci.p2);
  j["member_names"] = ci.member_names;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << content;
}

}  // namespace rcert
