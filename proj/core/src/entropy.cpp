#include "tsent/entropy.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace tsent {

namespace {

void require_disjoint(std::span<const std::string> a, std::span<const std::string> b) {
  std::set<std::string> sa(a.begin(), a.end());
  for (const auto& n : b)
    if (sa.count(n)) throw std::invalid_argument("entropy: overlapping variable sets");
}

std::vector<std::string> join(std::span<const std::string> a,
                              std::span<const std::string> b) {
  std::vector<std::string> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

double power_sum(const JointDistribution& m, double q) {
  double s = 0.0;
  for (size_t i = 0; i < m.size(); ++i) {
    double p = m.prob(i);
    if (p > 0.0) s += std::pow(p, q);
  }
  return s;
}

double shannon(const JointDistribution& m) {
  double h = 0.0;
  for (size_t i = 0; i < m.size(); ++i) {
    double p = m.prob(i);
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

Rational power_sum_exact(const JointDistribution& m, unsigned q) {
  if (!m.has_exact()) throw std::invalid_argument("exact entropy requires a rational table");
  Rational s(0);
  for (const auto& p : m.exact()) {
    if (p == 0) continue;
    s += rational_pow(p, static_cast<long>(q));
  }
  return s;
}

}  // namespace

double q_log(double x, double q) {
  if (x <= 0.0) throw std::domain_error("q_log: argument must be positive");
  if (std::abs(q - 1.0) < kShannonSwitch) return std::log(x);
  return (std::pow(x, 1.0 - q) - 1.0) / (1.0 - q);
}

double tsallis_entropy(const JointDistribution& dist,
                       std::span<const std::string> subset, double q) {
  if (subset.empty()) throw std::invalid_argument("tsallis_entropy: empty subset");
  auto m = dist.marginal(subset);
  if (std::abs(q - 1.0) < kShannonSwitch) return shannon(m);
  return (1.0 - power_sum(m, q)) / (q - 1.0);
}

double conditional_tsallis(const JointDistribution& dist,
                           std::span<const std::string> x,
                           std::span<const std::string> y, double q) {
  if (x.empty()) throw std::invalid_argument("conditional_tsallis: X empty");
  require_disjoint(x, y);
  if (y.empty()) return tsallis_entropy(dist, x, q);
  auto xy = join(x, y);
  return tsallis_entropy(dist, xy, q) - tsallis_entropy(dist, y, q);
}

double tsallis_mi(const JointDistribution& dist, std::span<const std::string> x,
                  std::span<const std::string> y, double q) {
  if (x.empty() || y.empty()) throw std::invalid_argument("tsallis_mi: empty set");
  require_disjoint(x, y);
  auto xy = join(x, y);
  return tsallis_entropy(dist, x, q) + tsallis_entropy(dist, y, q) -
         tsallis_entropy(dist, xy, q);
}

double tsallis_cmi(const JointDistribution& dist, std::span<const std::string> x,
                   std::span<const std::string> y, std::span<const std::string> z,
                   double q) {
  if (x.empty() || y.empty()) throw std::invalid_argument("tsallis_cmi: empty set");
  require_disjoint(x, y);
  require_disjoint(x, z);
  require_disjoint(y, z);
  if (z.empty()) return tsallis_mi(dist, x, y, q);
  auto xz = join(x, z), yz = join(y, z), xyz = join(join(x, y), z);
  return tsallis_entropy(dist, xz, q) + tsallis_entropy(dist, yz, q) -
         tsallis_entropy(dist, z, q) - tsallis_entropy(dist, xyz, q);
}

double alt_conditional_tsallis(const JointDistribution& dist,
                               std::span<const std::string> x,
                               std::span<const std::string> y, double q) {
  if (x.empty()) throw std::invalid_argument("alt_conditional_tsallis: X empty");
  if (std::abs(q - 1.0) < kShannonSwitch)
    throw std::domain_error("alt_conditional_tsallis: q = 1 not defined");
  require_disjoint(x, y);
  if (y.empty()) return tsallis_entropy(dist, x, q);
  auto xy = join(x, y);
  double num = power_sum(dist.marginal(xy), q);
  double den = power_sum(dist.marginal(y), q);
  return (num / den - 1.0) / (1.0 - q);
}

double bound_f(double q, long dx, long dy) {
  if (q <= 0.0) throw std::domain_error("bound_f: q must be positive");
  if (dx < 1 || dy < 1) throw std::invalid_argument("bound_f: dims must be >= 1");
  if (std::abs(q - 1.0) < kShannonSwitch) return 0.0;
  return (1.0 - std::pow(static_cast<double>(dx), 1.0 - q)) *
         (1.0 - std::pow(static_cast<double>(dy), 1.0 - q)) / (q - 1.0);
}

EntropyVector entropy_vector(const JointDistribution& dist, double q) {
  EntropyVector v;
  v.variables = dist.variable_names();
  v.q = q;
  size_t n = v.variables.size();
  v.coordinates.resize((size_t{1} << n) - 1);
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    std::vector<std::string> subset;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) subset.push_back(v.variables[i]);
    v.coordinates[mask - 1] = tsallis_entropy(dist, subset, q);
  }
  return v;
}

Rational tsallis_entropy_exact(const JointDistribution& dist,
                               std::span<const std::string> subset, unsigned q) {
  if (q < 2) throw std::invalid_argument("exact entropy needs integer q >= 2");
  if (subset.empty()) throw std::invalid_argument("tsallis_entropy_exact: empty subset");
  auto m = dist.marginal(subset);
  return (Rational(1) - power_sum_exact(m, q)) / Rational(static_cast<long>(q) - 1);
}

Rational tsallis_mi_exact(const JointDistribution& dist,
                          std::span<const std::string> x,
                          std::span<const std::string> y, unsigned q) {
  require_disjoint(x, y);
  auto xy = join(x, y);
  return tsallis_entropy_exact(dist, x, q) + tsallis_entropy_exact(dist, y, q) -
         tsallis_entropy_exact(dist, xy, q);
}

Rational tsallis_cmi_exact(const JointDistribution& dist,
                           std::span<const std::string> x,
                           std::span<const std::string> y,
                           std::span<const std::string> z, unsigned q) {
  require_disjoint(x, y);
  require_disjoint(x, z);
  require_disjoint(y, z);
  if (z.empty()) return tsallis_mi_exact(dist, x, y, q);
  auto xz = join(x, z), yz = join(y, z), xyz = join(join(x, y), z);
  return tsallis_entropy_exact(dist, xz, q) + tsallis_entropy_exact(dist, yz, q) -
         tsallis_entropy_exact(dist, z, q) - tsallis_entropy_exact(dist, xyz, q);
}

Rational bound_f_exact(unsigned q, long dx, long dy) {
  if (q < 2) throw std::invalid_argument("bound_f_exact needs integer q >= 2");
  long e = static_cast<long>(q) - 1;
  Rational fx = Rational(1) - rational_pow(Rational(dx), -e);
  Rational fy = Rational(1) - rational_pow(Rational(dy), -e);
  return fx * fy / Rational(e);
}

}  // namespace tsent
