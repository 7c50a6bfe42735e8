#include "tsent/rational_system.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tsent {

void RationalSystem::add(std::vector<Rational> coeffs, Rational rhs, Relation rel) {
  if (static_cast<int>(coeffs.size()) != dimension)
    throw std::invalid_argument("row length does not match system dimension");
  rows.push_back({std::move(coeffs), std::move(rhs), rel});
}

bool RationalSystem::satisfied_by(const std::vector<Rational>& point) const {
  for (const auto& row : rows) {
    Rational lhs(0);
    for (int j = 0; j < dimension; ++j) lhs += row.coeffs[static_cast<size_t>(j)] * point[static_cast<size_t>(j)];
    if (row.rel == Relation::Equal ? lhs != row.rhs : lhs < row.rhs) return false;
  }
  return true;
}

bool RationalSystem::satisfied_by(const std::vector<double>& point, double tol) const {
  for (const auto& row : rows) {
    double lhs = 0;
    for (int j = 0; j < dimension; ++j)
      lhs += to_double(row.coeffs[static_cast<size_t>(j)]) * point[static_cast<size_t>(j)];
    double b = to_double(row.rhs);
    if (row.rel == Relation::Equal ? std::abs(lhs - b) > tol : lhs < b - tol) return false;
  }
  return true;
}

void normalize_row(RationalRow& row) {
  mpz_class num_gcd(0), den_lcm(1);
  auto absorb = [&](const Rational& x) {
    if (x == 0) return;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  };
  for (const auto& c : row.coeffs) absorb(c);
  absorb(row.rhs);
  if (num_gcd == 0) return;  // all-zero row, leave as is
  Rational scale(den_lcm, num_gcd);
  if (scale < 0) scale = -scale;
  for (auto& c : row.coeffs) c *= scale;
  row.rhs *= scale;
}

std::string to_text(const RationalSystem& sys) {
  std::ostringstream out;
  for (const auto& row : sys.rows) {
    for (int j = 0; j < sys.dimension; ++j) {
      if (j) out << ' ';
      out << rational_to_string(row.coeffs[static_cast<size_t>(j)]);
    }
    out << (row.rel == Relation::Equal ? " = " : " >= ");
    out << rational_to_string(row.rhs) << '\n';
  }
  return out.str();
}

RationalSystem parse_system_text(std::istream& in) {
  RationalSystem sys;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;

    size_t rel_pos = tokens.size();
    Relation rel = Relation::GreaterEqual;
    for (size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] == ">=" || tokens[i] == "=") {
        rel_pos = i;
        rel = tokens[i] == "=" ? Relation::Equal : Relation::GreaterEqual;
        break;
      }
    }
    if (rel_pos + 2 != tokens.size())
      throw std::invalid_argument("system text: expected 'coeffs... >= rhs'");

    std::vector<Rational> coeffs;
    for (size_t i = 0; i < rel_pos; ++i) {
      auto r = parse_rational(tokens[i]);
      if (!r) throw std::invalid_argument("system text: bad coefficient " + tokens[i]);
      coeffs.push_back(std::move(*r));
    }
    auto rhs = parse_rational(tokens.back());
    if (!rhs) throw std::invalid_argument("system text: bad rhs " + tokens.back());

    if (first) {
      sys.dimension = static_cast<int>(coeffs.size());
      first = false;
    }
    sys.add(std::move(coeffs), std::move(*rhs), rel);
  }
  return sys;
}

RationalSystem parse_system_text(const std::string& text) {
  std::istringstream in(text);
  return parse_system_text(in);
}

}  // namespace tsent
