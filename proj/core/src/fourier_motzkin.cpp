#include "tsent/fourier_motzkin.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "tsent/simplex.hpp"

namespace tsent {

namespace {

bool is_zero_row(const RationalRow& row) {
  for (const auto& c : row.coeffs)
    if (c != 0) return false;
  return true;
}

// trivially true rows: 0 >= nonpositive, 0 = 0
bool is_trivial(const RationalRow& row) {
  if (!is_zero_row(row)) return false;
  return row.rel == Relation::Equal ? row.rhs == 0 : row.rhs <= 0;
}

}  // namespace

RationalSystem reduce_syntactic(const RationalSystem& sys) {
  RationalSystem out;
  out.dimension = sys.dimension;
  // coeff-vector + relation -> index of the row kept so far
  std::map<std::pair<std::vector<Rational>, int>, size_t> best;
  for (RationalRow row : sys.rows) {
    normalize_row(row);
    if (is_trivial(row)) continue;
    auto key = std::make_pair(row.coeffs, static_cast<int>(row.rel));
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), out.rows.size());
      out.rows.push_back(std::move(row));
    } else {
      RationalRow& kept = out.rows[it->second];
      if (row.rel == Relation::GreaterEqual && row.rhs > kept.rhs) kept.rhs = row.rhs;
      // duplicate equalities with different rhs make the system infeasible;
      // keep both rows so that infeasibility stays visible
      if (row.rel == Relation::Equal && row.rhs != kept.rhs) out.rows.push_back(std::move(row));
    }
  }
  return out;
}

RationalSystem fm_eliminate_one(const RationalSystem& sys, int coordinate) {
  if (coordinate < 0 || coordinate >= sys.dimension)
    throw std::invalid_argument("fm_eliminate_one: bad coordinate");
  auto j = static_cast<size_t>(coordinate);

  // substitution path: use an equality that mentions the coordinate
  size_t eq_idx = sys.rows.size();
  size_t eq_nnz = 0;
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& r = sys.rows[i];
    if (r.rel != Relation::Equal || r.coeffs[j] == 0) continue;
    size_t nnz = 0;
    for (const auto& c : r.coeffs)
      if (c != 0) ++nnz;
    if (eq_idx == sys.rows.size() || nnz < eq_nnz) {
      eq_idx = i;
      eq_nnz = nnz;
    }
  }

  RationalSystem out;
  out.dimension = sys.dimension;

  if (eq_idx < sys.rows.size()) {
    const RationalRow& eq = sys.rows[eq_idx];
    for (size_t i = 0; i < sys.rows.size(); ++i) {
      if (i == eq_idx) continue;
      RationalRow row = sys.rows[i];
      if (row.coeffs[j] != 0) {
        Rational f = row.coeffs[j] / eq.coeffs[j];
        for (size_t k = 0; k < row.coeffs.size(); ++k) row.coeffs[k] -= f * eq.coeffs[k];
        row.rhs -= f * eq.rhs;
        row.coeffs[j] = 0;
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }

  std::vector<size_t> pos, neg;
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    const auto& r = sys.rows[i];
    if (r.coeffs[j] == 0) {
      out.rows.push_back(r);
    } else if (r.coeffs[j] > 0) {
      pos.push_back(i);
    } else {
      neg.push_back(i);
    }
  }
  for (size_t p : pos) {
    for (size_t n : neg) {
      const auto& rp = sys.rows[p];
      const auto& rn = sys.rows[n];
      Rational a = rp.coeffs[j];   // > 0
      Rational b = -rn.coeffs[j];  // > 0
      RationalRow row;
      row.rel = Relation::GreaterEqual;
      row.coeffs.resize(rp.coeffs.size());
      for (size_t k = 0; k < row.coeffs.size(); ++k)
        row.coeffs[k] = b * rp.coeffs[k] + a * rn.coeffs[k];
      row.rhs = b * rp.rhs + a * rn.rhs;
      row.coeffs[j] = 0;
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

RationalSystem remove_redundant(const RationalSystem& sys) {
  RationalSystem cur = sys;
  size_t i = 0;
  while (i < cur.rows.size()) {
    RationalSystem rest;
    rest.dimension = cur.dimension;
    for (size_t k = 0; k < cur.rows.size(); ++k)
      if (k != i) rest.rows.push_back(cur.rows[k]);
    if (is_implied(cur.rows[i], rest)) {
      cur.rows.erase(cur.rows.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  return cur;
}

FmOutcome fm_eliminate(RationalSystem sys, std::vector<int> coordinates,
                       const FmCaps& caps, bool fixed_order) {
  auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  FmOutcome out;
  std::vector<int> remaining = coordinates;

  while (!remaining.empty()) {
    if (caps.max_steps && out.eliminated.size() >= caps.max_steps) {
      out.breach = "max_steps";
      break;
    }
    if (caps.time_budget_seconds > 0 && elapsed() > caps.time_budget_seconds) {
      out.breach = "time_budget";
      break;
    }

    size_t pick = 0;
    if (!fixed_order) {
      // standard heuristic: fewest pos x neg combinations
      long best_score = -1;
      for (size_t c = 0; c < remaining.size(); ++c) {
        auto j = static_cast<size_t>(remaining[c]);
        long np = 0, nn = 0;
        bool has_eq = false;
        for (const auto& r : sys.rows) {
          if (r.coeffs[j] == 0) continue;
          if (r.rel == Relation::Equal) {
            has_eq = true;
            break;
          }
          (r.coeffs[j] > 0 ? np : nn)++;
        }
        long score = has_eq ? 0 : np * nn;
        if (best_score < 0 || score < best_score) {
          best_score = score;
          pick = c;
        }
      }
    }
    int coord = remaining[pick];
    remaining.erase(remaining.begin() + static_cast<long>(pick));

    FmStep step;
    step.coordinate = coord;
    step.rows_before = sys.rows.size();

    sys = fm_eliminate_one(sys, coord);
    step.rows_after_combination = sys.rows.size();

    sys = reduce_syntactic(sys);
    if (sys.rows.size() <= caps.lp_reduction_row_limit) sys = remove_redundant(sys);
    step.rows_after_reduction = sys.rows.size();

    out.eliminated.push_back(coord);
    out.steps.push_back(step);

    if (caps.max_rows && sys.rows.size() > caps.max_rows) {
      out.breach = "max_rows";
      break;
    }
  }

  out.system = std::move(sys);
  out.completed = remaining.empty() && out.breach.empty();
  return out;
}

RationalSystem compress_coordinates(const RationalSystem& sys,
                                    const std::vector<int>& eliminated) {
  std::vector<bool> drop(static_cast<size_t>(sys.dimension), false);
  for (int c : eliminated) drop[static_cast<size_t>(c)] = true;
  RationalSystem out;
  out.dimension = 0;
  for (bool d : drop)
    if (!d) ++out.dimension;
  for (const auto& row : sys.rows) {
    RationalRow r;
    r.rel = row.rel;
    r.rhs = row.rhs;
    for (size_t k = 0; k < drop.size(); ++k) {
      if (drop[k]) {
        if (row.coeffs[k] != 0)
          throw std::invalid_argument("compress_coordinates: row still uses a dropped coordinate");
      } else {
        r.coeffs.push_back(row.coeffs[k]);
      }
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

}  // namespace tsent
