#include <doctest.h>

#include <cmath>
#include <random>

#include "tsent/dag.hpp"
#include "tsent/joint_distribution.hpp"

using namespace tsent;

namespace {

// p_{xyz} = 1/4 when z = 0, else 0 (binary X, Y, Z; order X,Y,Z)
JointDistribution common_cause_counterexample() {
  std::vector<Rational> p(8, Rational(0));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) p[static_cast<size_t>((x * 2 + y) * 2)] = Rational(1, 4);
  return JointDistribution::from_rationals({{"X", 2}, {"Y", 2}, {"Z", 2}}, std::move(p));
}

// the footnote distribution (3/10, 0, 2/10, 0, 1/10, 1/10, 2/10, 1/10) over A,B,C
JointDistribution footnote_distribution() {
  std::vector<Rational> p = {Rational(3, 10), Rational(0),     Rational(2, 10), Rational(0),
                             Rational(1, 10), Rational(1, 10), Rational(2, 10), Rational(1, 10)};
  return JointDistribution::from_rationals({{"A", 2}, {"B", 2}, {"C", 2}}, std::move(p));
}

JointDistribution uniform_bits(int n) {
  std::vector<VariableSpec> vars;
  for (int i = 0; i < n; ++i) vars.push_back({std::string(1, static_cast<char>('X' + i)), 2});
  size_t size = size_t{1} << n;
  return JointDistribution::from_reals(std::move(vars),
                                       std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

}  // namespace

TEST_CASE("construction validates the table") {
  CHECK_THROWS(JointDistribution::from_reals({{"X", 2}}, {0.5, 0.6}));
  CHECK_THROWS(JointDistribution::from_reals({{"X", 2}}, {-0.1, 1.1}));
  CHECK_THROWS(JointDistribution::from_reals({{"X", 2}}, {0.5, 0.25, 0.25}));
  CHECK_THROWS(JointDistribution::from_reals({{"X", 2}, {"X", 2}}, {0.25, 0.25, 0.25, 0.25}));
  CHECK_THROWS(JointDistribution::from_rationals({{"X", 2}}, {Rational(1, 3), Rational(1, 3)}));
}

TEST_CASE("marginalize") {
  auto two = uniform_bits(2);
  auto mx = two.marginal(std::vector<std::string>{"X"});
  REQUIRE(mx.size() == 2);
  CHECK(mx.prob(0) == doctest::Approx(0.5));

  auto ce = common_cause_counterexample();
  auto mz = ce.marginal(std::vector<std::string>{"Z"});
  REQUIRE(mz.has_exact());
  CHECK(mz.exact()[0] == 1);
  CHECK(mz.exact()[1] == 0);

  auto all = ce.marginal(std::vector<std::string>{"X", "Y", "Z"});
  for (size_t i = 0; i < ce.size(); ++i) CHECK(all.exact()[i] == ce.exact()[i]);

  CHECK_THROWS(ce.marginal(std::vector<std::string>{"W"}));
  CHECK_THROWS(ce.marginal(std::vector<std::string>{}));
}

TEST_CASE("marginalizing twice equals marginalizing once") {
  std::mt19937_64 rng(5);
  std::gamma_distribution<double> g(1.0, 1.0);
  std::vector<double> p(24);
  double sum = 0;
  for (auto& x : p) sum += (x = g(rng));
  for (auto& x : p) x /= sum;
  auto d = JointDistribution::from_reals({{"A", 2}, {"B", 3}, {"C", 4}}, std::move(p));
  auto ab = d.marginal(std::vector<std::string>{"A", "B"});
  auto a1 = ab.marginal(std::vector<std::string>{"A"});
  auto a2 = d.marginal(std::vector<std::string>{"A"});
  for (size_t i = 0; i < a1.size(); ++i) CHECK(a1.prob(i) == doctest::Approx(a2.prob(i)));
}

TEST_CASE("condition") {
  auto ce = common_cause_counterexample();
  auto on0 = ce.condition("Z", 0);
  REQUIRE(on0.table.has_value());
  CHECK(on0.weight == doctest::Approx(1.0));
  CHECK(*on0.exact_weight == 1);
  for (size_t i = 0; i < 4; ++i) CHECK(on0.table->exact()[i] == Rational(1, 4));

  auto on1 = ce.condition("Z", 1);
  CHECK_FALSE(on1.table.has_value());
  CHECK(*on1.exact_weight == 0);

  auto prod = uniform_bits(2);
  auto onx = prod.condition("X", 0);
  REQUIRE(onx.table.has_value());
  CHECK(onx.weight == doctest::Approx(0.5));
  CHECK(onx.table->prob(0) == doctest::Approx(0.5));

  CHECK_THROWS(ce.condition("Z", 5));
  CHECK_THROWS(ce.condition("W", 0));
}

TEST_CASE("condition weights over all values sum to 1") {
  auto fn = footnote_distribution();
  Rational total(0);
  for (int v = 0; v < 2; ++v) total += *fn.condition("B", v).exact_weight;
  CHECK(total == 1);
}

TEST_CASE("conditional independence") {
  auto ce = common_cause_counterexample();
  CHECK(ce.conditionally_independent(std::vector<std::string>{"X"}, std::vector<std::string>{"Y"},
                                     std::vector<std::string>{"Z"}, 1e-12));

  // perfectly correlated bits
  auto corr = JointDistribution::from_reals({{"X", 2}, {"Y", 2}}, {0.5, 0.0, 0.0, 0.5});
  CHECK_FALSE(corr.conditionally_independent(std::vector<std::string>{"X"},
                                             std::vector<std::string>{"Y"}, {}, 1e-9));

  // footnote distribution: p(a,b) != p(a)p(b), checked directly as the oracle
  auto fn = footnote_distribution();
  auto ab = fn.marginal(std::vector<std::string>{"A", "B"});
  auto a = fn.marginal(std::vector<std::string>{"A"});
  auto b = fn.marginal(std::vector<std::string>{"B"});
  bool factorizes = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (ab.exact()[static_cast<size_t>(i * 2 + j)] !=
          a.exact()[static_cast<size_t>(i)] * b.exact()[static_cast<size_t>(j)])
        factorizes = false;
  CHECK_FALSE(factorizes);
  CHECK_FALSE(fn.conditionally_independent(std::vector<std::string>{"A"},
                                           std::vector<std::string>{"B"}, {}, 1e-9));

  CHECK_THROWS(ce.conditionally_independent(std::vector<std::string>{"X"},
                                            std::vector<std::string>{"X"}, {}, 1e-9));
}

TEST_CASE("sample_markov_compatible: product on the edgeless pair") {
  Dag dag({{"X", true, 2}, {"Y", true, 3}}, {});
  auto d = sample_markov_compatible(dag, 42);
  CHECK(d.conditionally_independent(std::vector<std::string>{"X"},
                                    std::vector<std::string>{"Y"}, {}, 1e-10));
  // deterministic given seed
  auto d2 = sample_markov_compatible(dag, 42);
  for (size_t i = 0; i < d.size(); ++i) CHECK(d.prob(i) == d2.prob(i));
  auto d3 = sample_markov_compatible(dag, 43);
  bool same = true;
  for (size_t i = 0; i < d.size(); ++i) same = same && d.prob(i) == d3.prob(i);
  CHECK_FALSE(same);
}

TEST_CASE("sample_markov_compatible: chain A->B->C satisfies A _|_ C | B") {
  Dag chain({{"A", true, 2}, {"B", true, 2}, {"C", true, 2}}, {{"A", "B"}, {"B", "C"}});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto d = sample_markov_compatible(chain, seed);
    CHECK(d.conditionally_independent(std::vector<std::string>{"A"},
                                      std::vector<std::string>{"C"},
                                      std::vector<std::string>{"B"}, 1e-10));
  }
}

TEST_CASE("sample_markov_compatible: triangle sample passes all 126 CI statements") {
  auto dag = Dag::builtin("triangle");
  auto statements = dag.enumerate_ci_statements();
  REQUIRE(statements.size() == 126);
  auto d = sample_markov_compatible(dag, 7);
  for (const auto& st : statements)
    CHECK(d.conditionally_independent(st.x, st.y, st.z, 1e-10));
}
