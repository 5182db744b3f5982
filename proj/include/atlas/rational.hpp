#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace atlas {

// Exact arithmetic everywhere: the library never touches floating point
// except inside the qubit-state module, whose outputs are verified against
// explicit tolerances.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Raised on malformed user input (bad grammar, dimension mismatch, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a configured enumeration budget is exhausted. `scanned` holds
// how much of the search space was covered before giving up.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, unsigned long long scanned)
      : std::runtime_error(what), scanned(scanned) {}
  unsigned long long scanned;
};

struct Budgets {
  unsigned long long orbit = 1'000'000;     // Weyl orbit size cap
  unsigned long long weights = 100'000;     // weight-set size cap
  unsigned long long subsets = 10'000'000;  // subset / flat enumeration cap
  unsigned long long wlambda = 10'000;      // W_lambda orbit cap
  int dd_dim = 8;                           // double-description dimension cap
};

// "p/q" or "p"; denominator must be positive after parsing.
Rational parse_rational(const std::string& text);

// Reduced form, denominator suppressed when 1: "3", "-1/2".
std::string rational_str(const Rational& value);

std::vector<Rational> parse_rational_list(const std::string& text);

inline bool lex_less(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

struct RVecLexLess {
  bool operator()(const RVec& a, const RVec& b) const { return lex_less(a, b); }
};

inline std::string rvec_key(const RVec& v) {
  std::string key;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    key += rational_str(v(i));
    key += ',';
  }
  return key;
}

// Scale a rational vector to a primitive integer vector, preserving direction.
RVec primitive_direction(const RVec& v);

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Integer num(text);
      return Rational(num);
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in rational: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw InputError("malformed rational: " + text);
  }
}

inline std::string rational_str(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(parse_rational(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(parse_rational(cur));
  return out;
}

inline RVec primitive_direction(const RVec& v) {
  Integer den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(v(i)));
  }
  Integer num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Integer n = boost::multiprecision::numerator(v(i) * Rational(den_lcm));
    num_gcd = boost::multiprecision::gcd(num_gcd, n);
  }
  if (num_gcd == 0) return v;
  RVec out = v * Rational(den_lcm, num_gcd);
  return out;
}

}  // namespace atlas
