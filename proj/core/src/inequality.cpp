#include "tsent/inequality.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tsent/simplex.hpp"

namespace tsent {

bool InequalitySystem::exact_bounds() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const LinearInequality& r) { return r.exact_bound; });
}

void InequalitySystem::append(const InequalitySystem& other) {
  if (universe != other.universe)
    throw std::invalid_argument("append: universe mismatch");
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

InequalitySystem shannon_elemental(const std::vector<std::string>& universe) {
  const int n = static_cast<int>(universe.size());
  if (n < 2) throw std::invalid_argument("shannon_elemental: need n >= 2");
  if (n > 20) throw std::invalid_argument("shannon_elemental: n too large");
  InequalitySystem sys;
  sys.universe = universe;

  const SubsetMask all = (SubsetMask{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    LinearInequality ineq;
    ineq.tag = "elemental-monotonicity";
    ineq.coeffs[all] = 1;
    ineq.coeffs[all ^ (SubsetMask{1} << i)] = -1;
    sys.rows.push_back(std::move(ineq));
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SubsetMask rest = all ^ (SubsetMask{1} << i) ^ (SubsetMask{1} << j);
      // subsets K of rest, by (size, mask)
      std::vector<SubsetMask> ks;
      for (SubsetMask k = 0;; k = (k - rest) & rest) {
        ks.push_back(k);
        if (k == rest) break;
      }
      std::sort(ks.begin(), ks.end(), [](SubsetMask a, SubsetMask b) {
        int sa = subset_size(a), sb = subset_size(b);
        return sa != sb ? sa < sb : a < b;
      });
      for (SubsetMask k : ks) {
        LinearInequality ineq;
        ineq.tag = "elemental-submodularity";
        SubsetMask ik = k | (SubsetMask{1} << i);
        SubsetMask jk = k | (SubsetMask{1} << j);
        ineq.coeffs[ik] += 1;
        ineq.coeffs[jk] += 1;
        if (k) ineq.coeffs[k] -= 1;
        ineq.coeffs[ik | jk] -= 1;
        sys.rows.push_back(std::move(ineq));
      }
    }
  }
  return sys;
}

std::map<SubsetMask, Rational> cmi_coefficients(std::span<const std::string> universe,
                                                const CiStatement& st) {
  SubsetMask x = mask_of(universe, st.x);
  SubsetMask y = mask_of(universe, st.y);
  SubsetMask z = st.z.empty() ? 0 : mask_of(universe, st.z);
  if (!x || !y || (!st.z.empty() && !z))
    throw std::invalid_argument("cmi_coefficients: name not in universe");
  std::map<SubsetMask, Rational> c;
  c[x | z] += 1;
  c[y | z] += 1;
  if (z) c[z] -= 1;
  c[x | y | z] -= 1;
  for (auto it = c.begin(); it != c.end();)
    it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

InequalitySystem shannon_causal(const Dag& dag) {
  InequalitySystem sys;
  for (const auto& n : dag.nodes()) sys.universe.push_back(n.name);
  for (const auto& st : dag.markov_ci_list()) {
    LinearInequality eq;
    eq.rel = Relation::Equal;
    eq.tag = "causal-shannon";
    eq.coeffs = cmi_coefficients(sys.universe, st);
    // two Markov statements can expand to the same equality (e.g. an
    // edgeless pair gives X⊥Y and Y⊥X)
    bool dup = std::any_of(sys.rows.begin(), sys.rows.end(),
                           [&](const LinearInequality& r) { return r.coeffs == eq.coeffs; });
    if (!dup) sys.rows.push_back(std::move(eq));
  }
  return sys;
}

namespace {

long subset_dim(const Dag& dag, std::span<const std::string> names,
                const std::vector<int>& dims) {
  long d = 1;
  for (const auto& n : names) {
    int i = dag.index_of_checked(n);
    d *= dims.empty() ? dag.nodes()[static_cast<size_t>(i)].cardinality
                      : dims[static_cast<size_t>(i)];
  }
  return d;
}

bool nearly_integer(double q, long* out) {
  double r = std::round(q);
  if (std::abs(q - r) < 1e-12 && r >= 1 && r < 1e9) {
    *out = static_cast<long>(r);
    return true;
  }
  return false;
}

}  // namespace

Rational bound_f_decimal(double q, long dx, long dy, int digits) {
  // f = (1 - dx^{1-q})(1 - dy^{1-q})/(q-1) evaluated in 256-bit precision
  mpfr_t e, tx, ty, f, tmp;
  mpfr_inits2(256, e, tx, ty, f, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(e, 1.0 - q, MPFR_RNDN);
  mpfr_set_si(tmp, dx, MPFR_RNDN);
  mpfr_pow(tx, tmp, e, MPFR_RNDN);
  mpfr_set_si(tmp, dy, MPFR_RNDN);
  mpfr_pow(ty, tmp, e, MPFR_RNDN);
  mpfr_ui_sub(tx, 1, tx, MPFR_RNDN);
  mpfr_ui_sub(ty, 1, ty, MPFR_RNDN);
  mpfr_mul(f, tx, ty, MPFR_RNDN);
  mpfr_set_d(tmp, q - 1.0, MPFR_RNDN);
  mpfr_div(f, f, tmp, MPFR_RNDN);

  char* str = nullptr;
  mpfr_asprintf(&str, "%.*Re", digits - 1, f);
  std::string text(str);
  mpfr_free_str(str);
  mpfr_clears(e, tx, ty, f, tmp, static_cast<mpfr_ptr>(nullptr));

  // text like "3.5...e-01": split mantissa/exponent into an exact rational
  auto epos = text.find('e');
  std::string mant = text.substr(0, epos);
  long expo = std::stol(text.substr(epos + 1));
  auto dot = mant.find('.');
  long frac = 0;
  if (dot != std::string::npos) {
    frac = static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  mpz_class num(mant);
  long net = expo - frac;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  Rational r = net >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  return r;
}

InequalitySystem tsallis_causal(const Dag& dag, double q, const std::vector<int>& dims) {
  if (q < 1.0) throw std::invalid_argument("tsallis_causal: q >= 1 required");
  if (!dims.empty() && dims.size() != dag.nodes().size())
    throw std::invalid_argument("tsallis_causal: dims size mismatch");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("tsallis_causal: dims must be positive");

  InequalitySystem sys;
  for (const auto& n : dag.nodes()) sys.universe.push_back(n.name);

  long qint = 0;
  bool integral = nearly_integer(q, &qint);

  for (const auto& st : dag.enumerate_ci_statements()) {
    LinearInequality ineq;
    ineq.tag = "causal-tsallis";
    auto cmi = cmi_coefficients(sys.universe, st);
    for (auto& [mask, c] : cmi) ineq.coeffs[mask] = -c;  // -I_q >= -f
    long dx = subset_dim(dag, st.x, dims);
    long dy = subset_dim(dag, st.y, dims);
    if (integral) {
      ineq.bound = qint == 1 ? Rational(0) : -bound_f_exact(static_cast<unsigned>(qint), dx, dy);
      ineq.exact_bound = true;
    } else {
      ineq.bound = -bound_f_decimal(q, dx, dy);
      ineq.exact_bound = false;
    }
    sys.rows.push_back(std::move(ineq));
  }
  return sys;
}

EvaluationReport evaluate(const InequalitySystem& sys, const EntropyVector& v, double tol) {
  if (sys.universe != v.variables)
    throw std::invalid_argument("evaluate: universe mismatch");
  EvaluationReport rep;
  rep.slacks.reserve(sys.rows.size());
  bool first = true;
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& row = sys.rows[i];
    double lhs = 0.0;
    for (const auto& [mask, c] : row.coeffs) lhs += to_double(c) * v.coordinates[mask - 1];
    double slack = lhs - to_double(row.bound);
    bool violated = row.rel == Relation::Equal ? std::abs(slack) > tol : slack < -tol;
    rep.slacks.push_back({i, slack, violated, row.tag});
    if (violated) ++rep.violation_count;
    double key = row.rel == Relation::Equal ? -std::abs(slack) : slack;
    if (first || key < rep.worst_slack) {
      rep.worst_slack = key;
      first = false;
    }
  }
  return rep;
}

RationalSystem to_rational_system(const InequalitySystem& sys) {
  const size_t n = sys.universe.size();
  RationalSystem out;
  out.dimension = static_cast<int>((size_t{1} << n) - 1);
  for (const auto& row : sys.rows) {
    RationalRow r;
    r.rel = row.rel;
    r.rhs = row.bound;
    r.coeffs.assign(static_cast<size_t>(out.dimension), Rational(0));
    for (const auto& [mask, c] : row.coeffs) r.coeffs[mask - 1] = c;
    out.rows.push_back(std::move(r));
  }
  return out;
}

std::vector<AuditEntry> nonredundancy_audit(const InequalitySystem& sys) {
  std::vector<AuditEntry> out;
  RationalSystem full = to_rational_system(sys);
  bool exact = sys.exact_bounds();
  for (size_t i = 0; i < full.rows.size(); ++i) {
    RationalSystem rest;
    rest.dimension = full.dimension;
    for (size_t k = 0; k < full.rows.size(); ++k)
      if (k != i) rest.rows.push_back(full.rows[k]);
    bool redundant;
    if (exact) {
      redundant = is_implied(full.rows[i], rest);
    } else {
      std::vector<double> obj(full.rows[i].coeffs.size());
      for (size_t k = 0; k < obj.size(); ++k) obj[k] = to_double(full.rows[i].coeffs[k]);
      auto res = lp_minimize_approx(obj, rest);
      redundant = res.status == LpStatus::Optimal &&
                  res.value >= to_double(full.rows[i].rhs) - 1e-9;
      if (full.rows[i].rel == Relation::Equal && redundant) {
        for (auto& x : obj) x = -x;
        auto res2 = lp_minimize_approx(obj, rest);
        redundant = res2.status == LpStatus::Optimal &&
                    res2.value >= -to_double(full.rows[i].rhs) - 1e-9;
      }
    }
    out.push_back({i, redundant});
  }
  return out;
}

}  // namespace tsent
