#pragma once

#include <span>
#include <string>
#include <vector>

#include "tsent/joint_distribution.hpp"
#include "tsent/rational.hpp"

namespace tsent {

// |q-1| below this is treated as the Shannon point.
constexpr double kShannonSwitch = 1e-9;

// ln_q x = (x^{1-q} - 1)/(1-q), natural log at q = 1. Requires x > 0.
double q_log(double x, double q);

// Order-q Tsallis entropy of the marginal on `subset` (Shannon in nats at
// q = 1). Zero-probability entries never contribute.
double tsallis_entropy(const JointDistribution& dist,
                       std::span<const std::string> subset, double q);

// S_q(X|Y) = -sum p(x,y)^q ln_q p(x|y); equals S_q(XY) - S_q(Y).
double conditional_tsallis(const JointDistribution& dist,
                           std::span<const std::string> x,
                           std::span<const std::string> y, double q);

double tsallis_mi(const JointDistribution& dist, std::span<const std::string> x,
                  std::span<const std::string> y, double q);
double tsallis_cmi(const JointDistribution& dist, std::span<const std::string> x,
                   std::span<const std::string> y, std::span<const std::string> z,
                   double q);

// S̃_q(X|Y) = (1/(1-q)) (sum_xy p_xy^q / sum_y p_y^q - 1); q = 1 rejected.
// Obeys the non-linear chain rule rather than the additive one.
double alt_conditional_tsallis(const JointDistribution& dist,
                               std::span<const std::string> x,
                               std::span<const std::string> y, double q);

// f(q,dX,dY) = (q-1) ln_q dX ln_q dY, the independence bound; 0 at q = 1.
double bound_f(double q, long dx, long dy);

struct EntropyVector {
  std::vector<std::string> variables;
  double q = 1.0;
  // coordinate k holds the entropy of subset mask k+1
  std::vector<double> coordinates;
};

EntropyVector entropy_vector(const JointDistribution& dist, double q);

// Exact-rational entropies for integer q >= 2 on exact-mode tables.
// S_q = (1 - sum p^q)/(q - 1).
Rational tsallis_entropy_exact(const JointDistribution& dist,
                               std::span<const std::string> subset, unsigned q);
Rational tsallis_mi_exact(const JointDistribution& dist,
                          std::span<const std::string> x,
                          std::span<const std::string> y, unsigned q);
Rational tsallis_cmi_exact(const JointDistribution& dist,
                           std::span<const std::string> x,
                           std::span<const std::string> y,
                           std::span<const std::string> z, unsigned q);
Rational bound_f_exact(unsigned q, long dx, long dy);

}  // namespace tsent
