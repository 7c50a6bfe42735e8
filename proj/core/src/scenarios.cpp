#include "tsent/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace tsent {

namespace {

using std::numbers::pi;

CMatrix classical_copy_state(int d) {
  CMatrix rho = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) rho(i * d + i, i * d + i) = 1.0 / d;
  return rho;
}

CVector max_entangled(int d) {
  CVector v = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return v;
}

// projector onto the +/- eigenvector of cos(t) Z + sin(t) X
CMatrix angle_projector(double theta, int outcome) {
  Eigen::Vector2cd v;
  if (outcome == 0)
    v << std::cos(theta / 2), std::sin(theta / 2);
  else
    v << -std::sin(theta / 2), std::cos(theta / 2);
  return v * v.adjoint();
}

CMatrix basis_projector(int d, int k) {
  CMatrix p = CMatrix::Zero(d, d);
  p(k, k) = 1.0;
  return p;
}

}  // namespace

JointDistribution born_distribution(const TriangleStrategy& s) {
  const int ay = s.dims_a[0], az = s.dims_a[1];
  const int bx = s.dims_b[0], bz = s.dims_b[1];
  const int cx = s.dims_c[0], cy = s.dims_c[1];
  if (s.rho_a.rows() != ay * az || s.rho_b.rows() != bx * bz || s.rho_c.rows() != cx * cy)
    throw std::invalid_argument("born_distribution: edge state sizes do not match dims");
  for (const auto& e : s.povm_x)
    if (e.rows() != bx * cx) throw std::invalid_argument("born_distribution: X POVM dim");
  for (const auto& e : s.povm_y)
    if (e.rows() != cy * ay) throw std::invalid_argument("born_distribution: Y POVM dim");
  for (const auto& e : s.povm_z)
    if (e.rows() != az * bz) throw std::invalid_argument("born_distribution: Z POVM dim");

  // rho_B (x) rho_C over (B_X, B_Z, C_X, C_Y), reordered to (B_X, C_X, B_Z, C_Y)
  CMatrix rho_bc = permute_subsystems(kron(s.rho_b, s.rho_c), {bx, bz, cx, cy}, {0, 2, 1, 3});
  const int d_rest = bz * cy;

  std::vector<CMatrix> w_x;
  w_x.reserve(s.povm_x.size());
  for (const auto& e : s.povm_x) {
    CMatrix m = rho_bc * kron(e, CMatrix::Identity(d_rest, d_rest));
    w_x.push_back(partial_trace(m, {bx * cx, bz, cy}, {1, 2}));
  }

  const size_t nx = s.povm_x.size(), ny = s.povm_y.size(), nz = s.povm_z.size();
  std::vector<double> probs(nx * ny * nz, 0.0);

  // (W_x (x) rho_A) over (B_Z, C_Y, A_Y, A_Z) -> (C_Y, A_Y, A_Z, B_Z)
  for (size_t xi = 0; xi < nx; ++xi) {
    CMatrix left = permute_subsystems(kron(w_x[xi], s.rho_a), {bz, cy, ay, az}, {1, 2, 3, 0});
    CMatrix left_t = left.transpose();
    for (size_t yi = 0; yi < ny; ++yi) {
      for (size_t zi = 0; zi < nz; ++zi) {
        CMatrix meas = kron(s.povm_y[yi], s.povm_z[zi]);
        Complex tr = left_t.cwiseProduct(meas).sum();
        probs[(xi * ny + yi) * nz + zi] = tr.real();
      }
    }
  }

  double total = 0.0;
  for (double& p : probs) {
    if (p < -1e-10) throw std::runtime_error("born_distribution: negative probability");
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::runtime_error("born_distribution: probabilities do not normalize");
  for (double& p : probs) p /= total;

  return JointDistribution::from_reals(
      {{"X", static_cast<int>(nx)}, {"Y", static_cast<int>(ny)}, {"Z", static_cast<int>(nz)}},
      std::move(probs));
}

TriangleStrategy chained_bell_strategy(int n) {
  if (n < 2) throw std::invalid_argument("chained_bell_strategy: N >= 2 required");
  TriangleStrategy s;
  s.dims_a = {n, n};
  s.dims_b = {n, n};
  s.dims_c = {2, 2};
  s.rho_a = classical_copy_state(n);
  s.rho_b = classical_copy_state(n);
  CVector phi = max_entangled(2);
  s.rho_c = phi * phi.adjoint();

  // Alice (node X) angle for setting b, Bob (node Y) for setting a
  auto alpha = [&](int b) { return pi * (2.0 * b) / (2.0 * n); };
  auto beta = [&](int a) { return pi * (2.0 * a + 1.0) / (2.0 * n); };

  s.povm_x.resize(static_cast<size_t>(2 * n));
  for (int xt = 0; xt < 2; ++xt)
    for (int b = 0; b < n; ++b)
      s.povm_x[static_cast<size_t>(xt * n + b)] =
          kron(basis_projector(n, b), angle_projector(alpha(b), xt));
  s.povm_y.resize(static_cast<size_t>(2 * n));
  for (int yt = 0; yt < 2; ++yt)
    for (int a = 0; a < n; ++a)
      s.povm_y[static_cast<size_t>(yt * n + a)] =
          kron(angle_projector(beta(a), yt), basis_projector(n, a));
  s.povm_z.resize(static_cast<size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      s.povm_z[static_cast<size_t>(a * n + b)] =
          kron(basis_projector(n, a), basis_projector(n, b));
  return s;
}

JointDistribution chained_bell_distribution(int n) {
  return born_distribution(chained_bell_strategy(n));
}

TriangleStrategy fritz_strategy() { return chained_bell_strategy(2); }
JointDistribution fritz_distribution() { return chained_bell_distribution(2); }

namespace {

// Mermin-Peres observable table on two qubits: rows multiply to +I, columns
// to -I.
std::array<std::array<CMatrix, 3>, 3> magic_table() {
  CMatrix i2 = CMatrix::Identity(2, 2);
  CMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  std::array<std::array<CMatrix, 3>, 3> t;
  t[0] = {kron(i2, z), kron(z, i2), kron(z, z)};
  t[1] = {kron(x, i2), kron(i2, x), kron(x, x)};
  t[2] = {CMatrix(-kron(x, z)), CMatrix(-kron(z, x)), kron(y, y)};
  return t;
}

// joint +/- eigenprojector product of two commuting +/-1 observables
CMatrix pm_projector(const CMatrix& o, int sign) {
  int d = static_cast<int>(o.rows());
  CMatrix id = CMatrix::Identity(d, d);
  return 0.5 * (id + (sign == 0 ? 1.0 : -1.0) * o);
}

}  // namespace

TriangleStrategy magic_square_strategy() {
  TriangleStrategy s;
  s.dims_a = {3, 3};  // Bob's column setting
  s.dims_b = {3, 3};  // Alice's row setting
  s.dims_c = {4, 4};  // two ebits, Alice half (x) Bob half
  s.rho_a = classical_copy_state(3);
  s.rho_b = classical_copy_state(3);

  // |Phi+>^(x2) arranged as (Alice qubits, Bob qubits)
  CVector psi = CVector::Zero(16);
  for (int i = 0; i < 4; ++i) psi(i * 4 + i) = 0.5;
  s.rho_c = psi * psi.adjoint();

  auto table = magic_table();

  s.povm_x.resize(12);
  for (int r = 0; r < 3; ++r)
    for (int o1 = 0; o1 < 2; ++o1)
      for (int o2 = 0; o2 < 2; ++o2) {
        CMatrix p = pm_projector(table[static_cast<size_t>(r)][0], o1) *
                    pm_projector(table[static_cast<size_t>(r)][1], o2);
        s.povm_x[static_cast<size_t>(r * 4 + o1 * 2 + o2)] = kron(basis_projector(3, r), p);
      }
  s.povm_y.resize(12);
  for (int c = 0; c < 3; ++c)
    for (int p1 = 0; p1 < 2; ++p1)
      for (int p2 = 0; p2 < 2; ++p2) {
        CMatrix o1t = table[0][static_cast<size_t>(c)].transpose();
        CMatrix o2t = table[1][static_cast<size_t>(c)].transpose();
        CMatrix p = pm_projector(o1t, p1) * pm_projector(o2t, p2);
        s.povm_y[static_cast<size_t>(c * 4 + p1 * 2 + p2)] = kron(p, basis_projector(3, c));
      }
  s.povm_z.resize(9);
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r)
      s.povm_z[static_cast<size_t>(c * 3 + r)] =
          kron(basis_projector(3, c), basis_projector(3, r));
  return s;
}

JointDistribution magic_square_distribution() {
  return born_distribution(magic_square_strategy());
}

JointDistribution shared_copies_distribution(int d) {
  if (d < 2) throw std::invalid_argument("shared_copies_distribution: D >= 2 required");
  const int dd = d * d;
  std::vector<double> probs(static_cast<size_t>(dd) * dd * dd, 0.0);
  double p = 1.0 / (static_cast<double>(d) * d * d);
  for (int sa = 0; sa < d; ++sa)
    for (int sb = 0; sb < d; ++sb)
      for (int sc = 0; sc < d; ++sc) {
        int x = sb * d + sc, y = sa * d + sc, z = sa * d + sb;
        probs[static_cast<size_t>((x * dd + y) * dd + z)] = p;
      }
  return JointDistribution::from_reals({{"X", dd}, {"Y", dd}, {"Z", dd}}, std::move(probs));
}

double chained_bell_score(const JointDistribution& dist, int n) {
  // correlators E(a,b) from the (x,y,z) table with x = xt*N+b, y = yt*N+a
  auto corr = [&](int a, int b) {
    double e = 0.0, w = 0.0;
    for (int xt = 0; xt < 2; ++xt)
      for (int yt = 0; yt < 2; ++yt) {
        std::vector<int> idx{xt * n + b, yt * n + a, a * n + b};
        double p = dist.prob(dist.index_of_assignment(idx));
        e += (xt == yt ? 1.0 : -1.0) * p;
        w += p;
      }
    return e / w;
  };
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += corr(j, j);
  for (int j = 0; j < n - 1; ++j) s += corr(j, j + 1);
  s -= corr(n - 1, 0);
  return s;
}

double magic_square_win_probability(const JointDistribution& dist) {
  double win = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int o1 = 0; o1 < 2; ++o1)
      for (int o2 = 0; o2 < 2; ++o2)
        for (int c = 0; c < 3; ++c)
          for (int p1 = 0; p1 < 2; ++p1)
            for (int p2 = 0; p2 < 2; ++p2) {
              int alice[3] = {1 - 2 * o1, 1 - 2 * o2, (1 - 2 * o1) * (1 - 2 * o2)};
              int bob[3] = {1 - 2 * p1, 1 - 2 * p2, -(1 - 2 * p1) * (1 - 2 * p2)};
              if (alice[c] != bob[r]) continue;
              std::vector<int> idx{r * 4 + o1 * 2 + o2, c * 4 + p1 * 2 + p2, c * 3 + r};
              win += dist.prob(dist.index_of_assignment(idx));
            }
  return win;
}

namespace {

double powm(long base, double e) { return std::pow(static_cast<double>(base), e); }

double b21(double q, long d_o, long d_u) {
  return -(11 + powm(d_u, 3 - 3 * q) + 6 * powm(d_o, 2 - 2 * q) +
           3 * powm(d_o, 1 - q) * powm(d_u, 1 - q) - 6 * powm(d_u, 1 - q) -
           15 * powm(d_o, 1 - q)) /
         (q - 1);
}

double b22(double q, long d_o, long d_u) {
  return -(10 + powm(d_o, 1 - q) * powm(d_u, 3 - 3 * q) + 5 * powm(d_o, 2 - 2 * q) +
           2 * powm(d_o, 1 - q) * powm(d_u, 1 - q) - 5 * powm(d_u, 1 - q) -
           13 * powm(d_o, 1 - q)) /
         (q - 1);
}

}  // namespace

double b_bound(int which, double q, long d_o, long d_u) {
  if (which < 1 || which > 3) throw std::invalid_argument("b_bound: inequality index in 1..3");
  if (q < 1.0) throw std::domain_error("b_bound: q >= 1 required");
  if (d_o < 2 || d_u < 2) throw std::invalid_argument("b_bound: dims >= 2 required");
  if (std::abs(q - 1.0) < 1e-12) return 0.0;
  switch (which) {
    case 1:
      return -(1 - powm(d_o, 1 - q)) * (2 - powm(d_o, 1 - q) - powm(d_u, 1 - q)) / (q - 1);
    case 2:
      return std::max(b21(q, d_o, d_u), b22(q, d_o, d_u));
    default:
      return -(6 + powm(d_o, 1 - q) * powm(d_u, 2 - 2 * q) + 3 * powm(d_o, 2 - 2 * q) +
               powm(d_o, 1 - q) * powm(d_u, 1 - q) - 3 * powm(d_u, 1 - q) -
               8 * powm(d_o, 1 - q)) /
             (q - 1);
  }
}

double b_star_bound(int which, double q, long d_o) {
  return b_bound(which, q, d_o, d_o * d_o * d_o - d_o);
}

Rational b_bound_exact(int which, unsigned q, long d_o, long d_u) {
  if (which < 1 || which > 3) throw std::invalid_argument("b_bound_exact: index in 1..3");
  if (q < 2) throw std::invalid_argument("b_bound_exact: integer q >= 2 required");
  long e = static_cast<long>(q) - 1;
  Rational qm1(e);
  auto po = [&](long d, long k) { return rational_pow(Rational(d), -k * e); };
  // exponents (1-q)k written as -k(q-1)
  auto p1o = po(d_o, 1), p2o = po(d_o, 2);
  auto p1u = po(d_u, 1), p2u = po(d_u, 2), p3u = po(d_u, 3);
  switch (which) {
    case 1:
      return -(Rational(1) - p1o) * (Rational(2) - p1o - p1u) / qm1;
    case 2: {
      Rational r21 = -(Rational(11) + p3u + Rational(6) * p2o + Rational(3) * p1o * p1u -
                       Rational(6) * p1u - Rational(15) * p1o) /
                     qm1;
      Rational r22 = -(Rational(10) + p1o * p3u + Rational(5) * p2o + Rational(2) * p1o * p1u -
                       Rational(5) * p1u - Rational(13) * p1o) /
                     qm1;
      return std::max(r21, r22);
    }
    default:
      return -(Rational(6) + p1o * p2u + Rational(3) * p2o + p1o * p1u - Rational(3) * p1u -
               Rational(8) * p1o) /
             qm1;
  }
}

TriangleMarginals::TriangleMarginals(const JointDistribution& dist) {
  if (dist.variables().size() != 3)
    throw std::invalid_argument("TriangleMarginals: exactly three variables required");
  auto names = dist.variable_names();
  for (int mask = 1; mask <= 7; ++mask) {
    std::vector<std::string> subset;
    for (int b = 0; b < 3; ++b)
      if (mask & (1 << b)) subset.push_back(names[static_cast<size_t>(b)]);
    auto m = dist.marginal(subset);
    auto& sup = support_[static_cast<size_t>(mask - 1)];
    for (size_t i = 0; i < m.size(); ++i)
      if (m.prob(i) > 1e-15) sup.push_back(m.prob(i));
  }
}

double TriangleMarginals::entropy(int mask, double q) const {
  const auto& sup = support_[static_cast<size_t>(mask - 1)];
  if (std::abs(q - 1.0) < 1e-12) {
    double h = 0.0;
    for (double p : sup) h -= p * std::log(p);
    return h;
  }
  double s = 0.0;
  for (double p : sup) s += std::pow(p, q);
  return (1.0 - s) / (q - 1.0);
}

double TriangleMarginals::lhs(int which, double q, int distinguished) const {
  const int X = 1, Y = 2, Z = 4;
  int d = distinguished == 0 ? X : distinguished == 1 ? Y : Z;
  int o1 = distinguished == 0 ? Y : X;
  int o2 = distinguished == 2 ? Y : Z;
  double singles = entropy(X, q) + entropy(Y, q) + entropy(Z, q);
  switch (which) {
    case 1:
      return -singles + entropy(d | o1, q) + entropy(d | o2, q);
    case 2:
      return -5 * singles + 4 * (entropy(X | Y, q) + entropy(X | Z, q) + entropy(Y | Z, q)) -
             2 * entropy(X | Y | Z, q);
    case 3:
      return -3 * singles + 2 * (entropy(d | o1, q) + entropy(d | o2, q)) +
             3 * entropy(o1 | o2, q) - entropy(X | Y | Z, q);
    default:
      throw std::invalid_argument("lhs: inequality index in 1..3");
  }
}

double TriangleMarginals::lhs_worst(int which, double q) const {
  if (which == 2) return lhs(2, q, 0);
  return std::min({lhs(which, q, 0), lhs(which, q, 1), lhs(which, q, 2)});
}

double TriangleMarginals::lhs_best(int which, double q) const {
  if (which == 2) return lhs(2, q, 0);
  return std::max({lhs(which, q, 0), lhs(which, q, 1), lhs(which, q, 2)});
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  std::vector<double> g(static_cast<size_t>(points));
  double lr = std::log(lo), step = (std::log(hi) - lr) / (points - 1);
  for (int i = 0; i < points; ++i) g[static_cast<size_t>(i)] = std::exp(lr + step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

namespace {

double policy_lhs(const TriangleMarginals& m, int which, double q, OrientationPolicy p) {
  switch (p) {
    case OrientationPolicy::Canonical: return m.lhs(which, q, 0);
    case OrientationPolicy::Worst: return m.lhs_worst(which, q);
    case OrientationPolicy::Best: return m.lhs_best(which, q);
  }
  return 0.0;
}

}  // namespace

ScanReport violation_scan(const TriangleMarginals& m, int which,
                          const std::vector<double>& q_grid, long d_o, long d_u,
                          OrientationPolicy policy, double tol) {
  if (q_grid.empty()) throw std::invalid_argument("violation_scan: empty grid");
  ScanReport rep;
  rep.which = which;
  rep.d_o = d_o;
  rep.d_u = d_u;

  auto margin = [&](double q) {
    return policy_lhs(m, which, q, policy) - b_bound(which, q, d_o, d_u);
  };

  size_t kmin = 0;
  rep.grid.reserve(q_grid.size());
  for (size_t k = 0; k < q_grid.size(); ++k) {
    double mg = margin(q_grid[k]);
    rep.grid.push_back({q_grid[k], mg});
    if (mg < rep.grid[kmin].margin) kmin = k;
  }
  rep.min_margin = rep.grid[kmin].margin;
  rep.argmin_q = rep.grid[kmin].q;

  // golden-section refinement around the empirical minimum
  double a = q_grid[kmin == 0 ? 0 : kmin - 1];
  double b = q_grid[std::min(kmin + 1, q_grid.size() - 1)];
  constexpr double kGr = 0.6180339887498949;
  double c = b - kGr * (b - a), d = a + kGr * (b - a);
  double fc = margin(c), fd = margin(d);
  double prev = rep.min_margin;
  for (int it = 0; it < 200; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGr * (b - a);
      fc = margin(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGr * (b - a);
      fd = margin(d);
    }
    double cur = std::min(fc, fd);
    if (cur < rep.min_margin) {
      rep.min_margin = cur;
      rep.argmin_q = fc < fd ? c : d;
    }
    if (std::abs(prev - cur) < 1e-10 && it > 8) break;
    prev = cur;
  }
  rep.violated = rep.min_margin < -tol;
  return rep;
}

int table1_di(const TriangleMarginals& m, int which, OrientationPolicy policy, int d_o_cap) {
  auto grid = geometric_grid(1.0, 100.0, 200);
  for (int d_o = 2; d_o <= d_o_cap; ++d_o) {
    auto rep = violation_scan(m, which, grid, d_o, 2, policy);
    if (!rep.violated) return d_o;
  }
  throw std::runtime_error("table1_di: no non-violating d_o found below the cap");
}

std::vector<Table1Row> table1(OrientationPolicy policy) {
  std::vector<Table1Row> rows;
  for (int n = 2; n <= 10; ++n) {
    TriangleMarginals m(chained_bell_distribution(n));
    Table1Row row;
    row.scenario = "N=" + std::to_string(n);
    row.d1 = table1_di(m, 1, policy);
    row.d2 = table1_di(m, 2, policy);
    row.d3 = table1_di(m, 3, policy);
    row.smallest_observed_dim = 2 * n;
    rows.push_back(std::move(row));
  }
  TriangleMarginals m(magic_square_distribution());
  rows.push_back({"Magic Sq.", table1_di(m, 1, policy), table1_di(m, 2, policy),
                  table1_di(m, 3, policy), 9});
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string out = "scenario,d1,d2,d3,smallest_observed_dim\n";
  for (const auto& r : rows) {
    out += r.scenario + "," + std::to_string(r.d1) + "," + std::to_string(r.d2) + "," +
           std::to_string(r.d3) + "," + std::to_string(r.smallest_observed_dim) + "\n";
  }
  return out;
}

namespace {

SearchReport search_worker(int edge_dim, int outcome_dim, std::uint64_t begin,
                           std::uint64_t end, std::uint64_t seed, double tol) {
  SearchReport rep;
  const int pair_dim = edge_dim * edge_dim;
  for (std::uint64_t i = begin; i < end; ++i) {
    Rng rng(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    TriangleStrategy s;
    s.dims_a = {edge_dim, edge_dim};
    s.dims_b = {edge_dim, edge_dim};
    s.dims_c = {edge_dim, edge_dim};
    auto pure = [&] {
      CVector v = random_pure_state(pair_dim, rng);
      return CMatrix(v * v.adjoint());
    };
    s.rho_a = pure();
    s.rho_b = pure();
    s.rho_c = pure();
    s.povm_x = random_povm(pair_dim, outcome_dim, rng);
    s.povm_y = random_povm(pair_dim, outcome_dim, rng);
    s.povm_z = random_povm(pair_dim, outcome_dim, rng);

    TriangleMarginals m(born_distribution(s));
    std::uniform_real_distribution<double> qdist(1.0, 100.0);
    double q = qdist(rng);
    for (int which = 1; which <= 3; ++which) {
      double margin = m.lhs_worst(which, q) - b_bound(which, q, outcome_dim, 2);
      if (margin < rep.min_margin) {
        rep.min_margin = margin;
        rep.worst = {i, q, which, margin};
      }
      if (margin < -tol) rep.violations.push_back({i, q, which, margin});
    }
    ++rep.samples;
  }
  return rep;
}

}  // namespace

SearchReport random_violation_search(int edge_dim, int outcome_dim, std::uint64_t samples,
                                     std::uint64_t seed, int workers, double tol) {
  if (workers < 1) workers = 1;
  if (workers == 1 || samples < 2) {
    return search_worker(edge_dim, outcome_dim, 0, samples, seed, tol);
  }
  std::vector<SearchReport> parts(static_cast<size_t>(workers));
  std::vector<std::thread> threads;
  std::uint64_t chunk = (samples + static_cast<std::uint64_t>(workers) - 1) /
                        static_cast<std::uint64_t>(workers);
  for (int w = 0; w < workers; ++w) {
    std::uint64_t b = chunk * static_cast<std::uint64_t>(w);
    std::uint64_t e = std::min(samples, b + chunk);
    threads.emplace_back([&, w, b, e] {
      parts[static_cast<size_t>(w)] = search_worker(edge_dim, outcome_dim, b, e, seed, tol);
    });
  }
  for (auto& t : threads) t.join();
  SearchReport rep;
  for (const auto& p : parts) {
    rep.samples += p.samples;
    if (p.min_margin < rep.min_margin) {
      rep.min_margin = p.min_margin;
      rep.worst = p.worst;
    }
    rep.violations.insert(rep.violations.end(), p.violations.begin(), p.violations.end());
  }
  std::sort(rep.violations.begin(), rep.violations.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.sample_index < b.sample_index; });
  return rep;
}

}  // namespace tsent
