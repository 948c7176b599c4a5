#include "rcert/constructions.hpp"

#include <algorithm>

#include "rcert/errors.hpp"
#include "rcert/loss.hpp"
#include "rcert/vc.hpp"

namespace rcert {

namespace {

Point sym(const std::string& s) { return Point::symbolic(s); }

TabularHypothesis indicator(const std::vector<Point>& domain, const std::vector<Point>& ones) {
  TabularHypothesis h;
  for (const auto& x : domain)
    h.labels[x] = std::find(ones.begin(), ones.end(), x) != ones.end() ? 1 : 0;
  return h;
}

DiscreteDistribution all_zero_labels(const std::vector<std::pair<Point, Rat>>& weights) {
  std::vector<Atom> atoms;
  for (const auto& [p, w] : weights) atoms.push_back({p, 0, w});
  return DiscreteDistribution(std::move(atoms));
}

}  // namespace

ConstructionInstance build_thm32() {
  ConstructionInstance ci;
  ci.name = "thm32";
  for (int i = 1; i <= 7; ++i) ci.domain.push_back(sym("x" + std::to_string(i)));
  const auto& d = ci.domain;

  ci.cls.members = {indicator(d, {d[1], d[2]}),   // h1 = 1{x2, x3}
                    indicator(d, {d[4], d[5]})};  // h2 = 1{x5, x6}
  ci.member_names = {"h1", "h2"};

  ci.u.map[d[0]] = {d[1]};
  ci.u.map[d[1]] = {d[0], d[2]};
  ci.u.map[d[2]] = {d[1]};
  ci.u.map[d[3]] = {d[4]};
  ci.u.map[d[4]] = {d[3], d[5]};
  ci.u.map[d[5]] = {d[4]};
  // x7 maps only to itself (auto-augmented)

  ci.p1 = all_zero_labels({{d[1], Rat(2, 6)},
                           {d[3], Rat(1, 6)},
                           {d[4], Rat(1, 6)},
                           {d[5], Rat(1, 6)},
                           {d[6], Rat(1, 6)}});
  ci.p2 = all_zero_labels({{d[4], Rat(2, 6)},
                           {d[0], Rat(1, 6)},
                           {d[1], Rat(1, 6)},
                           {d[2], Rat(1, 6)},
                           {d[6], Rat(1, 6)}});

  for (const auto* who : {"h1", "h2"})
    for (const auto* p : {"p1", "p2"}) {
      ci.expected["error/" + std::string(who) + "/" + p] = Rat(1, 3);
      ci.expected["margin/" + std::string(who) + "/" + p] = Rat(1, 3);
    }
  ci.expected["robust/h1/p1"] = Rat(2, 6);
  ci.expected["robust/h2/p1"] = Rat(3, 6);
  ci.expected["robust/h1/p2"] = Rat(3, 6);
  ci.expected["robust/h2/p2"] = Rat(2, 6);
  ci.expected["gap"] = Rat(1, 6);
  ci.expected["vc"] = Rat(1);
  return ci;
}

ConstructionInstance build_thm36() {
  ConstructionInstance ci;
  ci.name = "thm36";
  for (int i = 1; i <= 8; ++i) ci.domain.push_back(sym("x" + std::to_string(i)));
  const auto& d = ci.domain;

  ci.cls.members = {indicator(d, {d[1], d[2]}),  // h1
                    indicator(d, {d[4], d[5]}),  // h2
                    indicator(d, {d[7]}),        // h_r = 1{x = x8}
                    indicator(d, d)};            // h_c = constant 1
  ci.member_names = {"h1", "h2", "h_r", "h_c"};

  ci.u.map[d[0]] = {d[1]};
  ci.u.map[d[1]] = {d[0], d[2]};
  ci.u.map[d[2]] = {d[1]};
  ci.u.map[d[3]] = {d[4]};
  ci.u.map[d[4]] = {d[3], d[5]};
  ci.u.map[d[5]] = {d[4]};
  ci.u.map[d[6]] = {d[7]};  // U(x7) = {x7, x8}
  ci.u.map[d[7]] = {d[6]};  // U(x8) = {x7, x8}

  ci.p1 = all_zero_labels({{d[1], Rat(2, 12)},
                           {d[3], Rat(1, 12)},
                           {d[4], Rat(1, 12)},
                           {d[5], Rat(1, 12)},
                           {d[6], Rat(7, 12)}});
  ci.p2 = all_zero_labels({{d[4], Rat(2, 12)},
                           {d[0], Rat(1, 12)},
                           {d[1], Rat(1, 12)},
                           {d[2], Rat(1, 12)},
                           {d[6], Rat(7, 12)}});

  ci.expected["error/h_r/p1"] = Rat(0);
  ci.expected["error/h_r/p2"] = Rat(0);
  ci.expected["margin/h_c/p1"] = Rat(0);
  ci.expected["margin/h_c/p2"] = Rat(0);
  ci.expected["margin/h_r/p1"] = Rat(7, 12);
  ci.expected["margin/h_r/p2"] = Rat(7, 12);
  ci.expected["robust/h_r/p1"] = Rat(7, 12);
  ci.expected["robust/h_r/p2"] = Rat(7, 12);
  ci.expected["robust/h_c/p1"] = Rat(1);
  ci.expected["robust/h_c/p2"] = Rat(1);
  ci.expected["robust/h1/p1"] = Rat(2, 12);
  ci.expected["robust/h2/p1"] = Rat(3, 12);
  ci.expected["robust/h1/p2"] = Rat(3, 12);
  ci.expected["robust/h2/p2"] = Rat(2, 12);
  ci.expected["gap"] = Rat(1, 12);
  // The four-member class shatters {x2, x5}: h_r carves out the empty set,
  // h1 and h2 each pick one point, h_c takes both. Hence dimension 2 here,
  // against the two-member instance's 1.
  ci.expected["vc"] = Rat(2);
  return ci;
}

IndistinguishabilityReport verify_indistinguishability(const ConstructionInstance& ci) {
  IndistinguishabilityReport rep;
  rep.instance = ci.name;
  const PerturbationType u = ci.u;

  auto note = [&](bool ok, const std::string& what) {
    (ok ? rep.checks : rep.failures).push_back(what);
  };

  // oracle indistinguishability: error and margin weights agree across the
  // paired distributions for every member
  for (size_t i = 0; i < ci.cls.members.size(); ++i) {
    const auto& h = ci.cls.members[i];
    const auto& name = ci.member_names[i];
    const Rat e1 = true_loss(h, ci.p1), e2 = true_loss(h, ci.p2);
    const Rat m1 = margin_weight(h, ci.p1, u), m2 = margin_weight(h, ci.p2, u);
    note(e1 == e2, "error oracle agrees across p1/p2 for " + name + " (" + e1.str() + ")");
    note(m1 == m2, "margin oracle agrees across p1/p2 for " + name + " (" + m1.str() + ")");
  }

  // robust-loss minimizers differ, with the expected runner-up gap on both
  auto minimizer = [&](const DiscreteDistribution& p, Rat& best, Rat& second) -> size_t {
    size_t arg = 0;
    std::vector<Rat> losses;
    for (const auto& h : ci.cls.members) losses.push_back(true_loss(h, p, u));
    for (size_t i = 1; i < losses.size(); ++i)
      if (losses[i] < losses[arg]) arg = i;
    best = losses[arg];
    bool have_second = false;
    for (size_t i = 0; i < losses.size(); ++i) {
      if (i == arg) continue;
      if (!have_second || losses[i] < second) {
        second = losses[i];
        have_second = true;
      }
    }
    return arg;
  };
  Rat best1, second1, best2, second2;
  const size_t arg1 = minimizer(ci.p1, best1, second1);
  const size_t arg2 = minimizer(ci.p2, best2, second2);
  rep.minimizer_p1 = ci.member_names[arg1];
  rep.minimizer_p2 = ci.member_names[arg2];
  note(arg1 != arg2, "robust-loss minimizers differ: " + rep.minimizer_p1 + " under p1, " +
                         rep.minimizer_p2 + " under p2");
  rep.gap = second1 - best1;
  const auto gap_it = ci.expected.find("gap");
  if (gap_it != ci.expected.end()) {
    note(second1 - best1 == gap_it->second && second2 - best2 == gap_it->second,
         "runner-up gap is " + gap_it->second.str() + " under both distributions");
  }

  // every embedded fact, recomputed exactly
  for (const auto& [key, want] : ci.expected) {
    if (key == "gap") continue;
    Rat got;
    if (key == "vc") {
      std::vector<std::vector<Point>> preimages;
      for (const auto& h : ci.cls.members) {
        std::vector<Point> ones;
        for (const auto& x : ci.domain)
          if (evaluate(h, x) == 1) ones.push_back(x);
        preimages.push_back(std::move(ones));
      }
      got = Rat(vc_dimension(ci.domain, preimages));
    } else {
      const auto first = key.find('/');
      const auto last = key.rfind('/');
      const std::string kind = key.substr(0, first);
      const std::string who = key.substr(first + 1, last - first - 1);
      const std::string dist = key.substr(last + 1);
      const auto it = std::find(ci.member_names.begin(), ci.member_names.end(), who);
      if (it == ci.member_names.end()) throw InvariantViolation("unknown member in fact " + key);
      const auto& h = ci.cls.members[it - ci.member_names.begin()];
      const auto& p = dist == "p1" ? ci.p1 : ci.p2;
      if (kind == "error")
        got = true_loss(h, p);
      else if (kind == "margin")
        got = margin_weight(h, p, u);
      else if (kind == "robust")
        got = true_loss(h, p, u);
      else
        throw InvariantViolation("unknown fact kind in " + key);
    }
    note(got == want, key + " = " + want.str() + (got == want ? "" : " (got " + got.str() + ")"));
  }

  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace rcert
