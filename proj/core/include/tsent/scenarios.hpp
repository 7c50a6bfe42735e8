#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsent/joint_distribution.hpp"
#include "tsent/quantum.hpp"
#include "tsent/rational.hpp"

namespace tsent {

// Quantum strategy on the triangle. Edge sources: A between Y and Z, B
// between X and Z, C between X and Y. Each node measures its two incoming
// edge factors:
//   X on (B->X) (x) (C->X),  Y on (C->Y) (x) (A->Y),  Z on (A->Z) (x) (B->Z).
struct TriangleStrategy {
  CMatrix rho_a, rho_b, rho_c;
  std::array<int, 2> dims_a{};  // (A->Y, A->Z)
  std::array<int, 2> dims_b{};  // (B->X, B->Z)
  std::array<int, 2> dims_c{};  // (C->X, C->Y)
  std::vector<CMatrix> povm_x, povm_y, povm_z;
};

// P(x,y,z) by the Born rule; validates non-negativity and normalization.
JointDistribution born_distribution(const TriangleStrategy& strategy);

// CHSH embedded in the triangle: shared ebit on edge C, uniform setting bits
// on edges A and B, Tsirelson-optimal angles. Dims (4,4,4).
JointDistribution fritz_distribution();
TriangleStrategy fritz_strategy();

// N-setting chained-Bell embedding, dims (2N,2N,N^2); N=2 is Fritz up to
// outcome relabeling.
JointDistribution chained_bell_distribution(int n_settings);
TriangleStrategy chained_bell_strategy(int n_settings);

// Mermin-Peres magic square embedding, dims (12,12,9).
JointDistribution magic_square_distribution();
TriangleStrategy magic_square_strategy();

// Three uniform cardinality-D sources, each shared by a pair of observers;
// classical, dims (D^2, D^2, D^2).
JointDistribution shared_copies_distribution(int d_source);

// Diagnostics for the embedded games.
double chained_bell_score(const JointDistribution& dist, int n_settings);
double magic_square_win_probability(const JointDistribution& dist);

// Closed-form lower bounds for the three triangle inequalities; 0 at q = 1.
double b_bound(int which, double q, long d_o, long d_u);
double b_star_bound(int which, double q, long d_o);  // d_u = d_o^3 - d_o
Rational b_bound_exact(int which, unsigned q, long d_o, long d_u);

// Zero-entry-free subset marginals of a three-variable distribution, cached
// for fast entropy evaluation across many q values.
class TriangleMarginals {
 public:
  explicit TriangleMarginals(const JointDistribution& dist);

  // subsets indexed by mask over (X=1, Y=2, Z=4)
  double entropy(int mask, double q) const;

  // LHS of inequality `which` with `distinguished` in {0,1,2} naming the
  // variable that plays the asymmetric role (ignored for the symmetric
  // inequality 2).
  double lhs(int which, double q, int distinguished) const;
  double lhs_worst(int which, double q) const;  // min over orientations
  double lhs_best(int which, double q) const;   // max over orientations

 private:
  std::array<std::vector<double>, 7> support_;  // probabilities > 0 per mask
};

enum class OrientationPolicy { Canonical, Worst, Best };

std::vector<double> geometric_grid(double lo, double hi, int points);

struct ScanPoint {
  double q = 0.0;
  double margin = 0.0;  // lhs - bound
};

struct ScanReport {
  int which = 0;
  long d_o = 0, d_u = 0;
  double min_margin = 0.0;
  double argmin_q = 0.0;
  std::vector<ScanPoint> grid;  // margins on the coarse grid
  bool violated = false;        // min_margin < -tol
};

// Margin scan over the grid plus golden-section refinement around the
// minimum (stops when the refinement moves the margin by < 1e-10).
ScanReport violation_scan(const TriangleMarginals& m, int which,
                          const std::vector<double>& q_grid, long d_o, long d_u,
                          OrientationPolicy policy = OrientationPolicy::Worst,
                          double tol = 1e-9);

// Smallest d_o >= 2 such that no q in (1,100] violates B_i(q,d_o,2). The
// orientation policy defaults to the least-violating orientation of the
// inequality class, the reading under which the embedded-game table
// reproduces.
int table1_di(const TriangleMarginals& m, int which,
              OrientationPolicy policy = OrientationPolicy::Best, int d_o_cap = 64);

struct Table1Row {
  std::string scenario;
  int d1 = 0, d2 = 0, d3 = 0;
  int smallest_observed_dim = 0;
};

std::vector<Table1Row> table1(OrientationPolicy policy = OrientationPolicy::Best);
std::string table1_csv(const std::vector<Table1Row>& rows);

struct SearchHit {
  std::uint64_t sample_index = 0;
  double q = 0.0;
  int which = 0;
  double margin = 0.0;
};

struct SearchReport {
  std::uint64_t samples = 0;
  double min_margin = 1e300;  // most violating margin seen
  SearchHit worst;
  std::vector<SearchHit> violations;  // margin < -tol
};

// Haar-random edge states (pure, edge_dim x edge_dim) with random POVMs of
// `outcome_dim` outcomes per node; q drawn uniformly from [1, 100] per
// sample; all 7 inequality orientations evaluated against B_i(q, d_o, 2).
SearchReport random_violation_search(int edge_dim, int outcome_dim,
                                     std::uint64_t samples, std::uint64_t seed,
                                     int workers = 1, double tol = 1e-9);

}  // namespace tsent
