#include "tsent/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tsent {

namespace {

template <class S>
struct Scal;

template <>
struct Scal<Rational> {
  static bool pos(const Rational& x) { return sgn(x) > 0; }
  static bool neg(const Rational& x) { return sgn(x) < 0; }
  static bool zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from(const Rational& x) { return x; }
};

template <>
struct Scal<double> {
  static constexpr double eps = 1e-9;
  static bool pos(double x) { return x > eps; }
  static bool neg(double x) { return x < -eps; }
  static bool zero(double x) { return std::abs(x) <= eps; }
  static double from(const Rational& x) { return to_double(x); }
};

// Full-tableau two-phase simplex for: maximize g.w s.t. M w = r, w >= 0.
// Dantzig pricing with a Bland fallback after a degeneracy streak.
template <class S>
class StandardSimplex {
 public:
  StandardSimplex(std::vector<std::vector<S>> cols, std::vector<S> r, std::vector<S> g)
      : m_(r.size()), n_(cols.size()), cols_(std::move(cols)), r_(std::move(r)), g_(std::move(g)) {}

  LpStatus solve() {
    build_phase1();
    run();
    if (Scal<S>::neg(objective_)) return LpStatus::Infeasible;
    if (!to_phase2()) return LpStatus::Infeasible;  // should not happen
    return run() ? LpStatus::Optimal : LpStatus::Unbounded;
  }

  // Try to start from a basis over original columns. Returns false if the
  // basis is singular or primal-infeasible; on success continues pivoting to
  // optimality.
  bool solve_from_basis(const std::vector<int>& basis, LpStatus* status) {
    if (basis.size() != m_) return false;
    if (!build_from_basis(basis)) return false;
    for (size_t i = 0; i < m_; ++i)
      if (Scal<S>::neg(T_[i].back())) return false;  // infeasible start
    art_ = 0;
    build_costs(g_);
    *status = run() ? LpStatus::Optimal : LpStatus::Unbounded;
    return true;
  }

  const S& objective() const { return objective_; }
  std::vector<int> basis() const { return basis_; }
  // Value of w for each original column.
  std::vector<S> solution() const {
    std::vector<S> w(n_, S(0));
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] >= 0 && static_cast<size_t>(basis_[i]) < n_)
        w[static_cast<size_t>(basis_[i])] = T_[i].back();
    return w;
  }

 private:
  size_t m_, n_, art_ = 0;
  std::vector<std::vector<S>> cols_;  // n_ columns of length m_
  std::vector<S> r_, g_;
  std::vector<std::vector<S>> T_;  // m_ rows x (n_ + art_ + 1), rhs last
  std::vector<S> d_;               // reduced costs + (-objective) at the end
  S objective_{0};
  std::vector<int> basis_;
  int degen_streak_ = 0;
  bool bland_ = false;

  size_t width() const { return n_ + art_ + 1; }

  void build_phase1() {
    art_ = m_;
    T_.assign(m_, std::vector<S>(width(), S(0)));
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      bool flip = Scal<S>::neg(r_[i]);
      for (size_t j = 0; j < n_; ++j) T_[i][j] = flip ? S(-cols_[j][i]) : cols_[j][i];
      T_[i][n_ + i] = S(1);
      T_[i].back() = flip ? S(-r_[i]) : r_[i];
      basis_[i] = static_cast<int>(n_ + i);
    }
    // phase-1 costs: -1 on artificials
    std::vector<S> c(n_ + art_, S(0));
    for (size_t j = n_; j < n_ + art_; ++j) c[j] = S(-1);
    build_costs_raw(c);
  }

  void build_costs(const std::vector<S>& g) {
    std::vector<S> c(n_ + art_, S(0));
    for (size_t j = 0; j < n_; ++j) c[j] = g[j];
    build_costs_raw(c);
  }

  void build_costs_raw(const std::vector<S>& c) {
    d_.assign(width(), S(0));
    for (size_t j = 0; j < n_ + art_; ++j) d_[j] = c[j];
    S obj(0);
    for (size_t i = 0; i < m_; ++i) {
      const S& cb = c[static_cast<size_t>(basis_[i])];
      if (Scal<S>::zero(cb)) continue;
      for (size_t j = 0; j < width(); ++j) d_[j] -= cb * T_[i][j];
      obj += cb * T_[i].back();
    }
    // d_.back() tracks -objective through pivots
    d_.back() = S(0) - obj;
    objective_ = obj;
    degen_streak_ = 0;
    bland_ = false;
  }

  void pivot(size_t pr, size_t pc) {
    S pv = T_[pr][pc];
    for (auto& x : T_[pr]) x /= pv;
    for (size_t i = 0; i < m_; ++i) {
      if (i == pr || Scal<S>::zero(T_[i][pc])) continue;
      S f = T_[i][pc];
      for (size_t j = 0; j < width(); ++j) T_[i][j] -= f * T_[pr][j];
      T_[i][pc] = S(0);
    }
    if (!Scal<S>::zero(d_[pc])) {
      S f = d_[pc];
      for (size_t j = 0; j < width(); ++j) d_[j] -= f * T_[pr][j];
      d_[pc] = S(0);
    }
    basis_[pr] = static_cast<int>(pc);
    objective_ = S(0) - d_.back();
  }

  // Returns true on optimal, false on unbounded.
  bool run() {
    const size_t limit = 50000 + 200 * (m_ + n_);
    for (size_t iter = 0; iter < limit; ++iter) {
      size_t enter = width();
      if (bland_) {
        for (size_t j = 0; j < n_ + art_; ++j)
          if (Scal<S>::pos(d_[j])) { enter = j; break; }
      } else {
        for (size_t j = 0; j < n_ + art_; ++j)
          if (Scal<S>::pos(d_[j]) && (enter == width() || d_[j] > d_[enter])) enter = j;
      }
      if (enter == width()) return true;  // optimal

      size_t leave = m_;
      bool have = false;
      S best_ratio(0);
      for (size_t i = 0; i < m_; ++i) {
        if (!Scal<S>::pos(T_[i][enter])) continue;
        S ratio = T_[i].back() / T_[i][enter];
        if (!have || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          best_ratio = ratio;
          leave = i;
          have = true;
        }
      }
      if (!have) return false;  // unbounded

      if (Scal<S>::zero(best_ratio)) {
        if (++degen_streak_ > 64) bland_ = true;
      } else {
        degen_streak_ = 0;
      }
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: iteration limit exceeded");
  }

  // Phase transition: drive artificials out, drop redundant rows, install g.
  bool to_phase2() {
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < static_cast<int>(n_)) continue;
      size_t pc = n_;
      for (size_t j = 0; j < n_; ++j)
        if (!Scal<S>::zero(T_[i][j])) { pc = j; break; }
      if (pc < n_) {
        pivot(i, pc);
      } else {
        // redundant constraint row
        T_.erase(T_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
        --m_;
        --i;
      }
    }
    // drop artificial columns
    for (auto& row : T_) row.erase(row.begin() + static_cast<long>(n_), row.end() - 1);
    art_ = 0;
    build_costs(g_);
    return true;
  }

  // Gaussian elimination into the given basis (original columns only).
  bool build_from_basis(const std::vector<int>& basis) {
    art_ = 0;
    T_.assign(m_, std::vector<S>(width(), S(0)));
    for (size_t i = 0; i < m_; ++i) {
      for (size_t j = 0; j < n_; ++j) T_[i][j] = cols_[j][i];
      T_[i].back() = r_[i];
    }
    basis_.assign(m_, -1);
    std::vector<bool> row_used(m_, false);
    for (int bc : basis) {
      if (bc < 0 || static_cast<size_t>(bc) >= n_) return false;
      size_t pr = m_;
      for (size_t i = 0; i < m_; ++i)
        if (!row_used[i] && !Scal<S>::zero(T_[i][static_cast<size_t>(bc)])) { pr = i; break; }
      if (pr == m_) return false;  // singular
      S pv = T_[pr][static_cast<size_t>(bc)];
      for (auto& x : T_[pr]) x /= pv;
      for (size_t i = 0; i < m_; ++i) {
        if (i == pr || Scal<S>::zero(T_[i][static_cast<size_t>(bc)])) continue;
        S f = T_[i][static_cast<size_t>(bc)];
        for (size_t j = 0; j < width(); ++j) T_[i][j] -= f * T_[pr][j];
      }
      row_used[pr] = true;
      basis_[pr] = bc;
    }
    for (bool u : row_used)
      if (!u) return false;
    return true;
  }
};

// Dual standard form of: min c.x s.t. GE rows A x >= b, EQ rows E x = e.
// Columns: y_i >= 0 per GE row, then (z+, z-) per EQ row.
// maximize b.y + e.z s.t. A^T y + E^T z = c.
struct DualForm {
  std::vector<std::vector<Rational>> cols;  // each of length dim
  std::vector<Rational> rhs;                // = objective c
  std::vector<Rational> gain;               // dual objective coefficients
  std::vector<std::pair<size_t, int>> col_row;  // (system row, +1/-1 for eq split)
};

DualForm make_dual(const std::vector<Rational>& objective, const RationalSystem& sys) {
  DualForm d;
  size_t dim = static_cast<size_t>(sys.dimension);
  d.rhs = objective;
  for (size_t k = 0; k < sys.rows.size(); ++k) {
    const auto& row = sys.rows[k];
    std::vector<Rational> col(row.coeffs.begin(), row.coeffs.end());
    col.resize(dim, Rational(0));
    if (row.rel == Relation::GreaterEqual) {
      d.cols.push_back(col);
      d.gain.push_back(row.rhs);
      d.col_row.emplace_back(k, +1);
    } else {
      d.cols.push_back(col);
      d.gain.push_back(row.rhs);
      d.col_row.emplace_back(k, +1);
      for (auto& x : col) x = -x;
      d.cols.push_back(std::move(col));
      d.gain.push_back(-row.rhs);
      d.col_row.emplace_back(k, -1);
    }
  }
  return d;
}

template <class S>
StandardSimplex<S> instantiate(const DualForm& d) {
  std::vector<std::vector<S>> cols;
  cols.reserve(d.cols.size());
  for (const auto& c : d.cols) {
    std::vector<S> col;
    col.reserve(c.size());
    for (const auto& x : c) col.push_back(Scal<S>::from(x));
    cols.push_back(std::move(col));
  }
  std::vector<S> rhs, gain;
  for (const auto& x : d.rhs) rhs.push_back(Scal<S>::from(x));
  for (const auto& x : d.gain) gain.push_back(Scal<S>::from(x));
  return StandardSimplex<S>(std::move(cols), std::move(rhs), std::move(gain));
}

}  // namespace

LpResult lp_minimize(const std::vector<Rational>& objective, const RationalSystem& sys) {
  if (static_cast<int>(objective.size()) != sys.dimension)
    throw std::invalid_argument("lp_minimize: objective length mismatch");
  DualForm dual = make_dual(objective, sys);

  auto exact = instantiate<Rational>(dual);
  LpStatus dual_status;
  bool solved = false;

  // Float pass proposes a basis; exact arithmetic confirms or repairs it.
  {
    auto approx = instantiate<double>(dual);
    LpStatus fs = approx.solve();
    if (fs == LpStatus::Optimal) {
      if (exact.solve_from_basis(approx.basis(), &dual_status)) solved = true;
    }
  }
  if (!solved) {
    exact = instantiate<Rational>(dual);
    dual_status = exact.solve();
  }

  LpResult out;
  switch (dual_status) {
    case LpStatus::Optimal: {
      out.status = LpStatus::Optimal;
      out.value = exact.objective();
      out.duals.assign(sys.rows.size(), Rational(0));
      auto w = exact.solution();
      for (size_t j = 0; j < w.size(); ++j) {
        auto [row, sign] = dual.col_row[j];
        out.duals[row] += sign > 0 ? w[j] : Rational(-w[j]);
      }
      return out;
    }
    case LpStatus::Unbounded:
      // dual unbounded => primal infeasible
      out.status = LpStatus::Infeasible;
      return out;
    case LpStatus::Infeasible:
      out.status = is_feasible(sys) ? LpStatus::Unbounded : LpStatus::Infeasible;
      return out;
  }
  return out;
}

// Farkas alternative with a normalization row; optimum > 0 iff infeasible.
bool is_feasible(const RationalSystem& sys) {
  size_t dim = static_cast<size_t>(sys.dimension);
  DualForm d = make_dual(std::vector<Rational>(dim, Rational(0)), sys);
  size_t ncols = d.cols.size();
  // rows: dim equality rows (A^T y + E^T z = 0) plus normalization sum w + s = 1
  std::vector<std::vector<Rational>> cols;
  for (size_t j = 0; j < ncols; ++j) {
    auto col = d.cols[j];
    col.push_back(Rational(1));
    cols.push_back(std::move(col));
  }
  std::vector<Rational> slack(dim, Rational(0));
  slack.push_back(Rational(1));
  cols.push_back(std::move(slack));

  std::vector<Rational> rhs(dim, Rational(0));
  rhs.push_back(Rational(1));
  std::vector<Rational> gain = d.gain;
  gain.push_back(Rational(0));

  StandardSimplex<Rational> farkas(std::move(cols), std::move(rhs), std::move(gain));
  LpStatus st = farkas.solve();
  if (st != LpStatus::Optimal)
    throw std::runtime_error("feasibility LP must be bounded and feasible");
  return !Scal<Rational>::pos(farkas.objective());
}

bool is_implied(const RationalRow& row, const RationalSystem& sys) {
  auto check_ge = [&](const std::vector<Rational>& coeffs, const Rational& rhs) {
    LpResult r = lp_minimize(coeffs, sys);
    switch (r.status) {
      case LpStatus::Optimal: return r.value >= rhs;
      case LpStatus::Infeasible: return true;  // vacuous
      case LpStatus::Unbounded: return false;
    }
    return false;
  };
  if (row.rel == Relation::GreaterEqual) return check_ge(row.coeffs, row.rhs);
  std::vector<Rational> neg(row.coeffs.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -row.coeffs[i];
  return check_ge(row.coeffs, row.rhs) && check_ge(neg, Rational(-row.rhs));
}

LpResultApprox lp_minimize_approx(const std::vector<double>& objective,
                                  const RationalSystem& sys) {
  std::vector<Rational> obj_r;
  obj_r.reserve(objective.size());
  for (double x : objective) obj_r.push_back(decimal_snap(x, 17));
  DualForm dual = make_dual(obj_r, sys);
  auto approx = instantiate<double>(dual);
  LpResultApprox out;
  out.status = approx.solve();
  if (out.status == LpStatus::Optimal) out.value = approx.objective();
  // dual infeasible in float means primal unbounded-or-infeasible; callers of
  // the approximate path treat both as "no finite optimum"
  return out;
}

}  // namespace tsent
