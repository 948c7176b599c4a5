#ifndef RCERT_ERRORS_HPP
#define RCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rcert {

// Error taxonomy, mirrored by the CLI exit codes:
//   ConfigError        -> 2  (bad inputs, malformed files, parameters out of range)
//   ContractViolation  -> 3  (a documented precondition or assumption failed at runtime)
//   InvariantViolation -> 4  (internal invariant broke; always a bug)

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
  ConfigError(std::string code, const std::string& what) : Error(std::move(code), what) {}
};

class ContractViolation : public Error {
 public:
  ContractViolation(std::string code, const std::string& what) : Error(std::move(code), what) {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error("invariant", what) {}
};

// -- contract violations with dedicated codes ------------------------------

struct BudgetExhausted : ContractViolation {
  explicit BudgetExhausted(const std::string& what) : ContractViolation("budget_exhausted", what) {}
};

struct NoExactMarginTest : ContractViolation {
  explicit NoExactMarginTest(const std::string& what) : ContractViolation("no_exact_margin_test", what) {}
};

struct PointOutsideDomain : ContractViolation {
  explicit PointOutsideDomain(const std::string& what) : ContractViolation("point_outside_domain", what) {}
};

struct EmptyAfterPruning : ContractViolation {
  explicit EmptyAfterPruning(const std::string& what) : ContractViolation("empty_after_pruning", what) {}
};

struct HeterogeneousCluster : ContractViolation {
  explicit HeterogeneousCluster(const std::string& what) : ContractViolation("heterogeneous_cluster", what) {}
};

struct NonRealizableSample : ContractViolation {
  explicit NonRealizableSample(const std::string& what) : ContractViolation("non_realizable_sample", what) {}
};

struct InadmissibleAttack : ContractViolation {
  explicit InadmissibleAttack(const std::string& what) : ContractViolation("inadmissible_attack", what) {}
};

struct PropernessViolation : ContractViolation {
  explicit PropernessViolation(const std::string& what) : ContractViolation("properness_violation", what) {}
};

struct WitnessValidationError : ContractViolation {
  explicit WitnessValidationError(const std::string& what)
      : ContractViolation("witness_validation", what) {}
};

struct HypothesisOutsideClass : ContractViolation {
  explicit HypothesisOutsideClass(const std::string& what)
      : ContractViolation("hypothesis_outside_class", what) {}
};

}  // namespace rcert

#endif  // RCERT_ERRORS_HPP
