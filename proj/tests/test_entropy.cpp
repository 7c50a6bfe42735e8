#include <doctest.h>

#include <cmath>
#include <random>

#include "tsent/entropy.hpp"
#include "tsent/joint_distribution.hpp"

using namespace tsent;

namespace {

std::vector<std::string> vs(std::initializer_list<const char*> names) {
  return {names.begin(), names.end()};
}

JointDistribution random_dist(const std::vector<VariableSpec>& vars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> g(1.0, 1.0);
  size_t n = 1;
  for (const auto& v : vars) n *= static_cast<size_t>(v.cardinality);
  std::vector<double> p(n);
  double sum = 0;
  for (auto& x : p) sum += (x = g(rng));
  for (auto& x : p) x /= sum;
  return JointDistribution::from_reals(vars, std::move(p));
}

JointDistribution product_of(const JointDistribution& a, const JointDistribution& b) {
  std::vector<VariableSpec> vars = a.variables();
  vars.insert(vars.end(), b.variables().begin(), b.variables().end());
  std::vector<double> p;
  p.reserve(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) p.push_back(a.prob(i) * b.prob(j));
  return JointDistribution::from_reals(std::move(vars), std::move(p));
}

JointDistribution counterexample() {
  std::vector<Rational> p(8, Rational(0));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) p[static_cast<size_t>((x * 2 + y) * 2)] = Rational(1, 4);
  return JointDistribution::from_rationals({{"X", 2}, {"Y", 2}, {"Z", 2}}, std::move(p));
}

JointDistribution footnote() {
  std::vector<Rational> p = {Rational(3, 10), Rational(0),     Rational(2, 10), Rational(0),
                             Rational(1, 10), Rational(1, 10), Rational(2, 10), Rational(1, 10)};
  return JointDistribution::from_rationals({{"A", 2}, {"B", 2}, {"C", 2}}, std::move(p));
}

// independent implementation for the Shannon cross-check
double shannon_oracle(const JointDistribution& d, const std::vector<std::string>& subset) {
  auto m = d.marginal(subset);
  double h = 0;
  for (size_t i = 0; i < m.size(); ++i)
    if (m.prob(i) > 0) h -= m.prob(i) * std::log(m.prob(i));
  return h;
}

// Eq.-style direct double sums, independent of the chain-rule implementation
double conditional_oracle(const JointDistribution& d, const std::vector<std::string>& x,
                          const std::vector<std::string>& y, double q) {
  std::vector<std::string> xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  auto joint = d.marginal(xy);
  auto ym = joint.marginal(y);
  double s = 0;
  for (size_t i = 0; i < joint.size(); ++i) {
    double pxy = joint.prob(i);
    if (pxy <= 0) continue;
    auto assign = joint.assignment_of_index(i);
    std::vector<int> ya(assign.end() - static_cast<long>(y.size()), assign.end());
    double py = ym.prob(ym.index_of_assignment(ya));
    double lq = (std::pow(pxy / py, 1.0 - q) - 1.0) / (1.0 - q);
    s -= std::pow(pxy, q) * lq;
  }
  return s;
}

double alt_conditional_oracle(const JointDistribution& d, const std::vector<std::string>& x,
                              const std::vector<std::string>& y, double q) {
  std::vector<std::string> xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  auto joint = d.marginal(xy);
  auto ym = joint.marginal(y);
  double num = 0, den = 0;
  for (size_t i = 0; i < joint.size(); ++i)
    if (joint.prob(i) > 0) num += std::pow(joint.prob(i), q);
  for (size_t i = 0; i < ym.size(); ++i)
    if (ym.prob(i) > 0) den += std::pow(ym.prob(i), q);
  return (num / den - 1.0) / (1.0 - q);
}

}  // namespace

TEST_CASE("q_log") {
  for (double q : {0.5, 1.0, 2.0, 7.0}) CHECK(q_log(1.0, q) == doctest::Approx(0.0));
  CHECK(q_log(0.5, 2.0) == doctest::Approx(-1.0));
  CHECK(q_log(0.5, 1.0) == doctest::Approx(-std::log(2.0)));
  CHECK_THROWS(q_log(0.0, 2.0));
  CHECK_THROWS(q_log(-1.0, 2.0));
}

TEST_CASE("tsallis_entropy basics") {
  auto bit = JointDistribution::from_reals({{"X", 2}}, {0.5, 0.5});
  CHECK(tsallis_entropy(bit, vs({"X"}), 2.0) == doctest::Approx(0.5));

  auto four = JointDistribution::from_reals({{"X", 4}}, {0.25, 0.25, 0.25, 0.25});
  CHECK(tsallis_entropy(four, vs({"X"}), 2.0) == doctest::Approx(0.75));
  CHECK(tsallis_entropy(four, vs({"X"}), 2.0) == doctest::Approx(q_log(4.0, 2.0) * 1.0));

  auto det = JointDistribution::from_reals({{"X", 3}}, {1.0, 0.0, 0.0});
  for (double q : {0.5, 1.0, 2.0, 10.0})
    CHECK(tsallis_entropy(det, vs({"X"}), q) == doctest::Approx(0.0));

  CHECK_THROWS(tsallis_entropy(bit, {}, 2.0));
}

TEST_CASE("conditional tsallis") {
  auto d = random_dist({{"X", 2}, {"Y", 3}}, 11);
  for (double q : {0.5, 1.0, 1.7, 2.0, 3.0})
    CHECK(conditional_tsallis(d, vs({"X"}), {}, q) ==
          doctest::Approx(tsallis_entropy(d, vs({"X"}), q)));

  auto prod = product_of(JointDistribution::from_reals({{"X", 2}}, {0.5, 0.5}),
                         JointDistribution::from_reals({{"Y", 2}}, {0.5, 0.5}));
  CHECK(conditional_tsallis(prod, vs({"X"}), vs({"Y"}), 2.0) == doctest::Approx(0.25));

  auto corr = JointDistribution::from_reals({{"X", 2}, {"Y", 2}}, {0.5, 0.0, 0.0, 0.5});
  for (double q : {0.5, 2.0, 5.0})
    CHECK(conditional_tsallis(corr, vs({"X"}), vs({"Y"}), q) == doctest::Approx(0.0));

  // chain-rule implementation agrees with the direct double sum
  auto r = random_dist({{"X", 3}, {"Y", 2}, {"Z", 2}}, 23);
  for (double q : {0.5, 1.4, 2.0, 4.0})
    CHECK(conditional_tsallis(r, vs({"X"}), vs({"Y", "Z"}), q) ==
          doctest::Approx(conditional_oracle(r, vs({"X"}), vs({"Y", "Z"}), q)).epsilon(1e-10));

  CHECK_THROWS(conditional_tsallis(r, vs({"X"}), vs({"X"}), 2.0));
}

TEST_CASE("mutual informations: paper golden values") {
  auto ce = counterexample();
  CHECK(tsallis_cmi(ce, vs({"X"}), vs({"Y"}), vs({"Z"}), 2.0) == doctest::Approx(0.25));
  CHECK(tsallis_cmi_exact(ce, vs({"X"}), vs({"Y"}), vs({"Z"}), 2) == Rational(1, 4));

  auto fn = footnote();
  CHECK(tsallis_mi_exact(fn, vs({"A"}), vs({"B", "C"}), 2) == Rational(9, 25));
  CHECK(tsallis_mi_exact(fn, vs({"A"}), vs({"B"}), 2) == Rational(13, 50));

  auto prod = product_of(JointDistribution::from_reals({{"X", 2}}, {0.5, 0.5}),
                         JointDistribution::from_reals({{"Y", 2}}, {0.5, 0.5}));
  CHECK(tsallis_mi(prod, vs({"X"}), vs({"Y"}), 2.0) == doctest::Approx(0.25));
}

TEST_CASE("Eq.5 and Eq.10 expansions agree") {
  auto d = random_dist({{"X", 2}, {"Y", 2}, {"Z", 3}}, 31);
  for (double q : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    double via_cond = conditional_tsallis(d, vs({"X"}), vs({"Z"}), q) -
                      conditional_tsallis(d, vs({"X"}), vs({"Y", "Z"}), q);
    CHECK(tsallis_cmi(d, vs({"X"}), vs({"Y"}), vs({"Z"}), q) ==
          doctest::Approx(via_cond).epsilon(1e-10));
  }
}

TEST_CASE("entropy_vector") {
  auto bit = JointDistribution::from_reals({{"X", 2}}, {0.5, 0.5});
  auto v1 = entropy_vector(bit, 2.0);
  REQUIRE(v1.coordinates.size() == 1);
  CHECK(v1.coordinates[0] == doctest::Approx(0.5));

  auto prod = product_of(JointDistribution::from_reals({{"X", 2}}, {0.5, 0.5}),
                         JointDistribution::from_reals({{"Y", 2}}, {0.5, 0.5}));
  auto v2 = entropy_vector(prod, 2.0);
  REQUIRE(v2.coordinates.size() == 3);
  CHECK(v2.coordinates[0] == doctest::Approx(0.5));   // X
  CHECK(v2.coordinates[1] == doctest::Approx(0.5));   // Y
  CHECK(v2.coordinates[2] == doctest::Approx(0.75));  // XY

  auto d = random_dist({{"X", 2}, {"Y", 3}}, 77);
  auto v = entropy_vector(d, 1.0);
  CHECK(v.coordinates[0] == doctest::Approx(shannon_oracle(d, vs({"X"}))));
  CHECK(v.coordinates[2] == doctest::Approx(shannon_oracle(d, vs({"X", "Y"}))));
}

TEST_CASE("bound_f") {
  CHECK(bound_f(2.0, 2, 2) == doctest::Approx(0.25));
  CHECK(bound_f(2.0, 2, 4) == doctest::Approx(0.375));
  CHECK(bound_f_exact(2, 2, 2) == Rational(1, 4));
  CHECK(bound_f_exact(2, 2, 4) == Rational(3, 8));
  for (double q : {0.5, 2.0, 9.0}) CHECK(bound_f(q, 1, 5) == doctest::Approx(0.0));
  CHECK(bound_f(1.0, 3, 3) == 0.0);
}

TEST_CASE("alt conditional tsallis") {
  auto prod = product_of(random_dist({{"X", 3}}, 3), random_dist({{"Y", 2}}, 4));
  for (double q : {0.5, 2.0, 3.0})
    CHECK(alt_conditional_tsallis(prod, vs({"X"}), vs({"Y"}), q) ==
          doctest::Approx(tsallis_entropy(prod, vs({"X"}), q)).epsilon(1e-10));

  auto ce = counterexample();
  for (double q : {1.5, 2.0, 4.0})
    CHECK(alt_conditional_tsallis(ce, vs({"X"}), vs({"Z"}), q) ==
          doctest::Approx(alt_conditional_oracle(ce, vs({"X"}), vs({"Z"}), q)));

  auto corr = JointDistribution::from_reals({{"X", 2}, {"Y", 2}}, {0.5, 0.0, 0.0, 0.5});
  CHECK(alt_conditional_tsallis(corr, vs({"X"}), vs({"Y"}), 2.0) == doctest::Approx(0.0));

  CHECK_THROWS(alt_conditional_tsallis(ce, vs({"X"}), vs({"Z"}), 1.0));

  // non-linear chain rule S_q(XY) = S_q(X) + S~(Y|X) + (1-q) S_q(X) S~(Y|X)
  auto d = random_dist({{"X", 2}, {"Y", 3}}, 19);
  for (double q : {0.5, 1.5, 2.0, 3.0}) {
    double sx = tsallis_entropy(d, vs({"X"}), q);
    double sy_x = alt_conditional_tsallis(d, vs({"Y"}), vs({"X"}), q);
    double sxy = tsallis_entropy(d, vs({"X", "Y"}), q);
    CHECK(sxy == doctest::Approx(sx + sy_x + (1 - q) * sx * sy_x).epsilon(1e-10));
  }
}

TEST_CASE("pseudo-additivity on products") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto prod = product_of(random_dist({{"X", 3}}, seed), random_dist({{"Y", 4}}, seed + 50));
    for (double q : {0.3, 0.8, 1.0, 1.5, 2.0, 5.0}) {
      double sx = tsallis_entropy(prod, vs({"X"}), q);
      double sy = tsallis_entropy(prod, vs({"Y"}), q);
      double sxy = tsallis_entropy(prod, vs({"X", "Y"}), q);
      CHECK(std::abs(sxy - sx - sy - (1 - q) * sx * sy) < 1e-10);
    }
  }
}

TEST_CASE("chain rule over several variables") {
  auto d = random_dist({{"A", 2}, {"B", 2}, {"C", 3}, {"Y", 2}}, 8);
  for (double q : {0.5, 1.0, 2.0, 3.5}) {
    double lhs = conditional_tsallis(d, vs({"A", "B", "C"}), vs({"Y"}), q);
    double rhs = conditional_tsallis(d, vs({"A"}), vs({"Y"}), q) +
                 conditional_tsallis(d, vs({"B"}), vs({"A", "Y"}), q) +
                 conditional_tsallis(d, vs({"C"}), vs({"A", "B", "Y"}), q);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("monotonicity, all q") {
  for (std::uint64_t seed : {4u, 5u}) {
    auto d = random_dist({{"X", 3}, {"Y", 2}}, seed);
    for (double q : {0.3, 0.7, 1.0, 2.0, 6.0})
      CHECK(tsallis_entropy(d, vs({"X"}), q) <=
            tsallis_entropy(d, vs({"X", "Y"}), q) + 1e-12);
  }
}

TEST_CASE("strong subadditivity holds for q >= 1 and fails for some q < 1") {
  for (std::uint64_t seed : {6u, 7u, 8u}) {
    auto d = random_dist({{"X", 2}, {"Y", 3}, {"Z", 2}}, seed);
    for (double q : {1.0, 1.5, 2.0, 4.0})
      CHECK(tsallis_cmi(d, vs({"X"}), vs({"Y"}), vs({"Z"}), q) >= -1e-12);
  }
  // searched q < 1 violation
  bool found = false;
  for (std::uint64_t seed = 0; seed < 200 && !found; ++seed) {
    auto d = random_dist({{"X", 2}, {"Y", 2}, {"Z", 2}}, 1000 + seed);
    if (tsallis_cmi(d, vs({"X"}), vs({"Y"}), vs({"Z"}), 0.5) < -1e-9) found = true;
  }
  CHECK(found);
}

TEST_CASE("continuity at q = 1") {
  auto d = random_dist({{"X", 3}, {"Y", 2}}, 13);
  double h = shannon_oracle(d, vs({"X", "Y"}));
  CHECK(std::abs(tsallis_entropy(d, vs({"X", "Y"}), 1.0 + 1e-6) - h) < 1e-4);
  CHECK(std::abs(tsallis_entropy(d, vs({"X", "Y"}), 1.0 - 1e-6) - h) < 1e-4);
}

TEST_CASE("Theorem 1: product distributions respect f and uniform saturates") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> card(2, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int dx = card(rng), dy = card(rng);
    auto px = random_dist({{"X", dx}}, 300 + static_cast<std::uint64_t>(trial));
    auto py = random_dist({{"Y", dy}}, 600 + static_cast<std::uint64_t>(trial));
    auto prod = product_of(px, py);
    for (double q : {0.5, 1.5, 2.0, 3.0, 10.0})
      CHECK(tsallis_mi(prod, vs({"X"}), vs({"Y"}), q) <= bound_f(q, dx, dy) + 1e-12);
  }
  auto unif = product_of(JointDistribution::from_reals({{"X", 3}}, {1. / 3, 1. / 3, 1. / 3}),
                         JointDistribution::from_reals({{"Y", 2}}, {0.5, 0.5}));
  for (double q : {0.5, 1.5, 2.0, 3.0, 10.0})
    CHECK(tsallis_mi(unif, vs({"X"}), vs({"Y"}), q) ==
          doctest::Approx(bound_f(q, 3, 2)).epsilon(1e-12));
}

TEST_CASE("Theorem 2: conditional independence respects f for q >= 1") {
  std::mt19937_64 rng(123);
  std::gamma_distribution<double> g(1.0, 1.0);
  const int dx = 2, dy = 3, dz = 2;
  for (int trial = 0; trial < 40; ++trial) {
    // p_Z * p_{X|Z} * p_{Y|Z}
    std::vector<double> pz(dz), table(static_cast<size_t>(dx * dy * dz));
    double zs = 0;
    for (auto& v : pz) zs += (v = g(rng));
    for (auto& v : pz) v /= zs;
    for (int z = 0; z < dz; ++z) {
      std::vector<double> px(dx), py(dy);
      double xs = 0, ys = 0;
      for (auto& v : px) xs += (v = g(rng));
      for (auto& v : px) v /= xs;
      for (auto& v : py) ys += (v = g(rng));
      for (auto& v : py) v /= ys;
      for (int x = 0; x < dx; ++x)
        for (int y = 0; y < dy; ++y)
          table[static_cast<size_t>((x * dy + y) * dz + z)] =
              pz[static_cast<size_t>(z)] * px[static_cast<size_t>(x)] * py[static_cast<size_t>(y)];
    }
    auto d = JointDistribution::from_reals({{"X", dx}, {"Y", dy}, {"Z", dz}}, std::move(table));
    for (double q : {1.0, 1.5, 2.0, 3.0, 10.0})
      CHECK(tsallis_cmi(d, vs({"X"}), vs({"Y"}), vs({"Z"}), q) <= bound_f(q, dx, dy) + 1e-12);
  }

  // saturating family: p(x,y,z) = 1/(dx dy) [z = k]
  std::vector<Rational> sat(static_cast<size_t>(dx * dy * dz), Rational(0));
  for (int x = 0; x < dx; ++x)
    for (int y = 0; y < dy; ++y)
      sat[static_cast<size_t>((x * dy + y) * dz + 1)] = Rational(1, dx * dy);
  auto satd = JointDistribution::from_rationals({{"X", dx}, {"Y", dy}, {"Z", dz}}, std::move(sat));
  for (unsigned q : {2u, 3u})
    CHECK(tsallis_cmi_exact(satd, vs({"X"}), vs({"Y"}), vs({"Z"}), q) ==
          bound_f_exact(q, dx, dy));
}
