#include "tsent/joint_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "tsent/dag.hpp"

namespace tsent {

namespace {

size_t table_size(const std::vector<VariableSpec>& vars) {
  size_t n = 1;
  for (const auto& v : vars) {
    if (v.cardinality < 1) throw std::invalid_argument("cardinality must be >= 1");
    n *= static_cast<size_t>(v.cardinality);
  }
  return n;
}

void check_names_unique(const std::vector<VariableSpec>& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v.name).second)
      throw std::invalid_argument("duplicate variable name: " + v.name);
}

}  // namespace

JointDistribution JointDistribution::from_reals(std::vector<VariableSpec> vars,
                                                std::vector<double> probs) {
  check_names_unique(vars);
  if (probs.size() != table_size(vars))
    throw std::invalid_argument("table length does not match cardinalities");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("negative probability entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormTol)
    throw std::invalid_argument("probabilities do not sum to 1");
  JointDistribution d;
  d.vars_ = std::move(vars);
  d.probs_ = std::move(probs);
  return d;
}

JointDistribution JointDistribution::from_rationals(std::vector<VariableSpec> vars,
                                                    std::vector<Rational> probs) {
  check_names_unique(vars);
  if (probs.size() != table_size(vars))
    throw std::invalid_argument("table length does not match cardinalities");
  Rational sum(0);
  for (const auto& p : probs) {
    if (p < 0) throw std::invalid_argument("negative probability entry");
    sum += p;
  }
  if (sum != 1) throw std::invalid_argument("rational table must sum to exactly 1");
  JointDistribution d;
  d.vars_ = std::move(vars);
  d.probs_.reserve(probs.size());
  for (const auto& p : probs) d.probs_.push_back(to_double(p));
  d.exact_ = std::move(probs);
  return d;
}

std::vector<std::string> JointDistribution::variable_names() const {
  std::vector<std::string> out;
  out.reserve(vars_.size());
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

int JointDistribution::index_of(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

size_t JointDistribution::index_of_assignment(std::span<const int> values) const {
  size_t idx = 0;
  for (size_t i = 0; i < vars_.size(); ++i)
    idx = idx * static_cast<size_t>(vars_[i].cardinality) + static_cast<size_t>(values[i]);
  return idx;
}

std::vector<int> JointDistribution::assignment_of_index(size_t index) const {
  std::vector<int> v(vars_.size());
  for (size_t i = vars_.size(); i-- > 0;) {
    auto c = static_cast<size_t>(vars_[i].cardinality);
    v[i] = static_cast<int>(index % c);
    index /= c;
  }
  return v;
}

JointDistribution JointDistribution::marginal(std::span<const std::string> keep) const {
  if (keep.empty()) throw std::invalid_argument("marginal: keep set is empty");
  std::vector<int> kept_idx;
  for (const auto& name : keep) {
    int i = index_of(name);
    if (i < 0) throw std::invalid_argument("marginal: unknown variable " + std::string(name));
    kept_idx.push_back(i);
  }
  std::sort(kept_idx.begin(), kept_idx.end());
  kept_idx.erase(std::unique(kept_idx.begin(), kept_idx.end()), kept_idx.end());

  std::vector<VariableSpec> mvars;
  for (int i : kept_idx) mvars.push_back(vars_[static_cast<size_t>(i)]);
  size_t msize = table_size(mvars);

  std::vector<double> mprobs(msize, 0.0);
  std::vector<Rational> mexact;
  if (exact_) mexact.assign(msize, Rational(0));

  for (size_t idx = 0; idx < probs_.size(); ++idx) {
    auto assign = assignment_of_index(idx);
    size_t midx = 0;
    for (size_t k = 0; k < kept_idx.size(); ++k) {
      midx = midx * static_cast<size_t>(mvars[k].cardinality) +
             static_cast<size_t>(assign[static_cast<size_t>(kept_idx[k])]);
    }
    mprobs[midx] += probs_[idx];
    if (exact_) mexact[midx] += (*exact_)[idx];
  }

  JointDistribution d;
  d.vars_ = std::move(mvars);
  if (exact_) {
    d.probs_.reserve(msize);
    for (const auto& p : mexact) d.probs_.push_back(to_double(p));
    d.exact_ = std::move(mexact);
  } else {
    d.probs_ = std::move(mprobs);
  }
  return d;
}

Conditioned JointDistribution::condition(std::string_view variable,
                                                            int value) const {
  int vi = index_of(variable);
  if (vi < 0) throw std::invalid_argument("condition: unknown variable");
  if (value < 0 || value >= vars_[static_cast<size_t>(vi)].cardinality)
    throw std::invalid_argument("condition: value out of range");

  std::vector<VariableSpec> rvars;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (static_cast<int>(i) != vi) rvars.push_back(vars_[i]);
  if (rvars.empty()) throw std::invalid_argument("condition: nothing would remain");
  size_t rsize = table_size(rvars);

  std::vector<double> sel(rsize, 0.0);
  std::vector<Rational> sel_exact;
  if (exact_) sel_exact.assign(rsize, Rational(0));

  double weight = 0.0;
  Rational weight_exact(0);
  for (size_t idx = 0; idx < probs_.size(); ++idx) {
    auto assign = assignment_of_index(idx);
    if (assign[static_cast<size_t>(vi)] != value) continue;
    size_t ridx = 0, k = 0;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (static_cast<int>(i) == vi) continue;
      ridx = ridx * static_cast<size_t>(rvars[k].cardinality) + static_cast<size_t>(assign[i]);
      ++k;
    }
    sel[ridx] += probs_[idx];
    weight += probs_[idx];
    if (exact_) {
      sel_exact[ridx] += (*exact_)[idx];
      weight_exact += (*exact_)[idx];
    }
  }

  Conditioned out;
  out.weight = weight;
  if (exact_) out.exact_weight = weight_exact;

  bool zero = exact_ ? (weight_exact == 0) : (weight <= 0.0);
  if (zero) return out;  // zero-weight status, no table

  if (exact_) {
    for (auto& p : sel_exact) p /= weight_exact;
    out.table = from_rationals(std::move(rvars), std::move(sel_exact));
  } else {
    for (auto& p : sel) p /= weight;
    out.table = from_reals(std::move(rvars), std::move(sel));
  }
  return out;
}

bool JointDistribution::conditionally_independent(std::span<const std::string> x,
                                                  std::span<const std::string> y,
                                                  std::span<const std::string> z,
                                                  double tol) const {
  if (x.empty() || y.empty())
    throw std::invalid_argument("conditional independence: X and Y must be non-empty");
  std::set<std::string> seen;
  for (auto span : {x, y, z})
    for (const auto& n : span)
      if (!seen.insert(n).second)
        throw std::invalid_argument("conditional independence: overlapping sets");

  std::vector<std::string> xy(x.begin(), x.end());
  xy.insert(xy.end(), y.begin(), y.end());
  std::vector<std::string> xyz = xy;
  xyz.insert(xyz.end(), z.begin(), z.end());

  auto joint = marginal(xyz);

  // Walk every z-assignment by conditioning one variable at a time.
  struct Frame {
    JointDistribution dist;
    size_t z_left;
  };
  std::vector<std::string> zv(z.begin(), z.end());

  // Recursive lambda over z variables.
  auto check = [&](auto&& self, const JointDistribution& d, size_t zi) -> bool {
    if (zi == zv.size()) {
      auto px = d.marginal(std::vector<std::string>(x.begin(), x.end()));
      auto py = d.marginal(std::vector<std::string>(y.begin(), y.end()));
      // max-norm of p(x,y) - p(x)p(y) over the joint-on-(X,Y) table
      auto pxy = d.marginal(xy);
      for (size_t i = 0; i < pxy.size(); ++i) {
        auto assign = pxy.assignment_of_index(i);
        std::vector<int> ax(assign.begin(), assign.begin() + static_cast<long>(x.size()));
        std::vector<int> ay(assign.begin() + static_cast<long>(x.size()), assign.end());
        double lhs = pxy.prob(i);
        double rhs = px.prob(px.index_of_assignment(ax)) * py.prob(py.index_of_assignment(ay));
        if (std::abs(lhs - rhs) > tol) return false;
      }
      return true;
    }
    int card = 0;
    for (const auto& v : d.variables())
      if (v.name == zv[zi]) card = v.cardinality;
    for (int val = 0; val < card; ++val) {
      auto cond = d.condition(zv[zi], val);
      if (!cond.table) continue;  // zero-probability branch never witnesses dependence
      if (!self(self, *cond.table, zi + 1)) return false;
    }
    return true;
  };
  return check(check, joint, 0);
}

JointDistribution sample_markov_compatible(const Dag& dag, std::uint64_t seed) {
  const auto& nodes = dag.nodes();
  std::vector<VariableSpec> vars;
  for (const auto& n : nodes) vars.push_back({n.name, n.cardinality});

  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> gamma(1.0, 1.0);  // flat Dirichlet via gammas

  // kernel[i]: for each parent configuration, a distribution over node i
  std::vector<std::vector<std::vector<double>>> kernels(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) {
    size_t pconf = 1;
    for (int p : dag.parents(static_cast<int>(i)))
      pconf *= static_cast<size_t>(nodes[static_cast<size_t>(p)].cardinality);
    kernels[i].resize(pconf);
    for (auto& kern : kernels[i]) {
      kern.resize(static_cast<size_t>(nodes[i].cardinality));
      double sum = 0.0;
      for (auto& w : kern) {
        w = gamma(rng);
        sum += w;
      }
      for (auto& w : kern) w /= sum;
    }
  }

  size_t total = 1;
  for (const auto& v : vars) total *= static_cast<size_t>(v.cardinality);
  std::vector<double> probs(total);

  std::vector<int> assign(nodes.size());
  for (size_t idx = 0; idx < total; ++idx) {
    size_t rest = idx;
    for (size_t i = nodes.size(); i-- > 0;) {
      auto c = static_cast<size_t>(vars[i].cardinality);
      assign[i] = static_cast<int>(rest % c);
      rest /= c;
    }
    double p = 1.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
      size_t pidx = 0;
      for (int par : dag.parents(static_cast<int>(i)))
        pidx = pidx * static_cast<size_t>(nodes[static_cast<size_t>(par)].cardinality) +
               static_cast<size_t>(assign[static_cast<size_t>(par)]);
      p *= kernels[i][pidx][static_cast<size_t>(assign[i])];
    }
    probs[idx] = p;
  }

  // Renormalize away accumulated rounding before validation.
  double sum = 0.0;
  for (double p : probs) sum += p;
  for (double& p : probs) p /= sum;
  return JointDistribution::from_reals(std::move(vars), std::move(probs));
}

}  // namespace tsent
