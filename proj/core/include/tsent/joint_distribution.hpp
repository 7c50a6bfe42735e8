#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsent/rational.hpp"

namespace tsent {

class Dag;

struct VariableSpec {
  std::string name;
  int cardinality = 0;
};

struct Conditioned;

// Discrete joint distribution over named finite variables. The table is
// dense and indexed lexicographically with the first variable most
// significant. Probabilities are doubles; an exact rational table can be
// carried alongside so that golden values like 3/10 survive marginalization
// and conditioning without rounding.
class JointDistribution {
 public:
  static constexpr double kNormTol = 1e-12;

  static JointDistribution from_reals(std::vector<VariableSpec> vars,
                                      std::vector<double> probs);
  static JointDistribution from_rationals(std::vector<VariableSpec> vars,
                                          std::vector<Rational> probs);

  const std::vector<VariableSpec>& variables() const { return vars_; }
  size_t size() const { return probs_.size(); }
  double prob(size_t index) const { return probs_[index]; }
  const std::vector<double>& probabilities() const { return probs_; }
  bool has_exact() const { return exact_.has_value(); }
  const std::vector<Rational>& exact() const { return *exact_; }

  std::vector<std::string> variable_names() const;
  int index_of(std::string_view name) const;  // -1 if unknown

  // Row index <-> per-variable values.
  size_t index_of_assignment(std::span<const int> values) const;
  std::vector<int> assignment_of_index(size_t index) const;

  JointDistribution marginal(std::span<const std::string> keep) const;

  Conditioned condition(std::string_view variable, int value) const;

  bool conditionally_independent(std::span<const std::string> x,
                                 std::span<const std::string> y,
                                 std::span<const std::string> z,
                                 double tol) const;

 private:
  JointDistribution() = default;
  std::vector<VariableSpec> vars_;
  std::vector<double> probs_;
  std::optional<std::vector<Rational>> exact_;
};

struct Conditioned {
  std::optional<JointDistribution> table;  // empty on zero-weight evidence
  double weight = 0.0;
  std::optional<Rational> exact_weight;
};

// Draws per-node conditional kernels from a flat Dirichlet for every parent
// configuration and multiplies them out, so the result factorizes over the
// DAG by construction. Deterministic for a given seed.
JointDistribution sample_markov_compatible(const Dag& dag, std::uint64_t seed);

}  // namespace tsent
