#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tsent/rational.hpp"

namespace tsent {

enum class Relation { GreaterEqual, Equal };

struct RationalRow {
  std::vector<Rational> coeffs;
  Rational rhs{0};
  Relation rel = Relation::GreaterEqual;
};

// Dense exact linear system: rows are coeffs . x >= rhs or coeffs . x = rhs.
struct RationalSystem {
  int dimension = 0;
  std::vector<RationalRow> rows;

  void add(std::vector<Rational> coeffs, Rational rhs, Relation rel);
  bool satisfied_by(const std::vector<Rational>& point) const;
  bool satisfied_by(const std::vector<double>& point, double tol) const;
};

// Positive-scale canonical form: integer coefficients with content 1.
void normalize_row(RationalRow& row);

// Text format, one row per line: "c1 c2 ... cn >= b" or "c1 ... cn = b".
// '#' starts a comment line.
std::string to_text(const RationalSystem& sys);
RationalSystem parse_system_text(std::istream& in);
RationalSystem parse_system_text(const std::string& text);

}  // namespace tsent
