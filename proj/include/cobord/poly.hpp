#ifndef COBORD_POLY_HPP
#define COBORD_POLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cobord/numeric.hpp"

namespace cobord {

enum class Domain { Z, Q };

// Ring variable with its grading degree.
struct Variable {
  std::string name;
  int degree = 1;

  bool operator==(const Variable& o) const { return name == o.name && degree == o.degree; }
};

class Polynomial;
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Optional post-hoc reduction attached to a ring, e.g. reduction modulo the
// Lazard relation ideal. normal() must be idempotent and linear.
class Normalizer {
public:
  virtual ~Normalizer() = default;
  virtual Polynomial normal(const Polynomial& p) const = 0;
};

// Immutable coefficient-ring description: domain tag, graded variables and an
// optional normalizer. Shared by every value built over it.
class Ring {
public:
  Ring(Domain domain, std::vector<Variable> vars,
       std::shared_ptr<const Normalizer> normalizer = nullptr);

  static RingPtr make(Domain domain, std::vector<Variable> vars,
                      std::shared_ptr<const Normalizer> normalizer = nullptr);

  Domain domain() const { return domain_; }
  const std::vector<Variable>& vars() const { return vars_; }
  int var_index(const std::string& name) const; // -1 when absent
  const std::shared_ptr<const Normalizer>& normalizer() const { return normalizer_; }

  // Structural compatibility: same domain and same graded variable list.
  // Normalizers are not compared.
  bool compatible(const Ring& other) const;

private:
  Domain domain_;
  std::vector<Variable> vars_;
  std::shared_ptr<const Normalizer> normalizer_;
};

// Sparse monomial: (variable index, exponent > 0) pairs sorted by index,
// with the total ring degree cached.
class Monomial {
public:
  Monomial() = default;
  Monomial(const Ring& ring, std::vector<std::pair<int, int>> factors);

  static Monomial one() { return Monomial(); }

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(int var) const;

  Monomial times(const Ring& ring, const Monomial& other) const;

  // Graded-lexicographic order: total ring degree first, then within a
  // degree the earlier variable with the higher exponent comes first.
  static int cmp(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

private:
  int degree_ = 0;
  std::vector<std::pair<int, int>> factors_;
};

// Sparse graded polynomial with exact Z or Q coefficients. Zero coefficients
// are never stored; term order is canonical (graded-lex), so iteration order
// and serialization are deterministic.
class Polynomial {
public:
  Polynomial() = default; // detached zero; only containers should hold these
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rat& value);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial variable(RingPtr ring, int index);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const; // 0 for the zero polynomial

  // Max total degree of a term; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int* degree_out = nullptr) const;
  Polynomial graded_part(int n) const;

  Rat coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& c); // checks domain integrality

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Applies the ring normalizer when one is attached.
  Polynomial normalized() const;
  bool is_zero_mod() const { return normalized().is_zero(); }

  // Substitute ring variables by polynomials over `target`; variables not
  // mentioned must not occur.
  Polynomial substituted(const RingPtr& target,
                         const std::map<std::string, Polynomial>& images) const;

  std::string to_string() const;

  // Shared ring for a binary operation; errors on domain or variable mismatch.
  static RingPtr merged_ring(const Polynomial& a, const Polynomial& b);

private:
  void check_value(const Rat& c) const;

  RingPtr ring_;
  std::map<Monomial, Rat> terms_;
};

} // namespace cobord

#endif
