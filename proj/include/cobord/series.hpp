#ifndef COBORD_SERIES_HPP
#define COBORD_SERIES_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cobord/poly.hpp"

namespace cobord {

// Formal exponent vector, one entry per formal variable.
using Expo = std::vector<int>;

inline int expo_total(const Expo& e) {
  int t = 0;
  for (int x : e) t += x;
  return t;
}

// Total formal degree first, then the earlier variable with the higher
// exponent first (mirrors the monomial order).
struct ExpoCmp {
  bool operator()(const Expo& a, const Expo& b) const {
    int ta = expo_total(a), tb = expo_total(b);
    if (ta != tb) return ta < tb;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return a.size() < b.size();
  }
};

// Multivariate power series over a coefficient ring, truncated by total
// formal degree. Formal variables are disjoint from ring variables; all
// arithmetic is exact on the retained terms.
class Series {
public:
  Series() = default;
  Series(RingPtr ring, std::vector<std::string> formal_vars, int order);

  static Series constant(RingPtr ring, std::vector<std::string> formal_vars, int order,
                         const Rat& value);
  static Series variable(RingPtr ring, std::vector<std::string> formal_vars, int order,
                         const std::string& name);

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::string>& formal_vars() const { return formal_vars_; }
  int order() const { return order_; }
  const std::map<Expo, Polynomial, ExpoCmp>& terms() const { return terms_; }
  int var_index(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  Polynomial constant_term() const;

  // Exact coefficient; zero polynomial when absent, error beyond the order.
  Polynomial coefficient(const Expo& e) const;
  void set_coefficient(const Expo& e, const Polynomial& c);
  void add_term(const Expo& e, const Polynomial& c);

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series scaled(const Polynomial& c) const;
  Series truncated(int new_order) const;

  // Substitute formal variables by series (each with vanishing constant
  // term); unnamed variables must exist in the target universe.
  Series substituted(const std::map<std::string, Series>& images) const;

  // 1/this; the constant term must be a unit of the coefficient domain.
  Series reciprocal() const;

  Series derivative(const std::string& var) const;  // order drops by one
  Series integrated(const std::string& var) const;  // Q only; order rises by one

  Series normalized() const;
  bool equals_mod(const Series& o) const;
  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

  std::string to_string() const;

private:
  void check_binary(const Series& o) const;

  RingPtr ring_;
  std::vector<std::string> formal_vars_;
  int order_ = 0;
  std::map<Expo, Polynomial, ExpoCmp> terms_;
};

// Triangular degreewise solve of residual(g) == 0 for a series g in one
// formal variable, starting from the given degree-1 seed. Each degree step
// must be affine in the new coefficient with an invertible linear part;
// anything else raises a structural error.
Series solve_implicit(const std::function<Series(const Series&)>& residual, const Series& seed);

} // namespace cobord

#endif
