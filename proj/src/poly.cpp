#include "cobord/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cobord {

// ---------------------------------------------------------------- Ring

Ring::Ring(Domain domain, std::vector<Variable> vars,
           std::shared_ptr<const Normalizer> normalizer)
    : domain_(domain), vars_(std::move(vars)), normalizer_(std::move(normalizer)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) fail(errc::parse, "ring variable with empty name");
    if (v.degree < 0) fail(errc::parse, "ring variable '" + v.name + "' with negative degree");
    if (!seen.insert(v.name).second)
      fail(errc::parse, "duplicate ring variable '" + v.name + "'");
  }
}

RingPtr Ring::make(Domain domain, std::vector<Variable> vars,
                   std::shared_ptr<const Normalizer> normalizer) {
  return std::make_shared<Ring>(domain, std::move(vars), std::move(normalizer));
}

int Ring::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

bool Ring::compatible(const Ring& other) const {
  return domain_ == other.domain_ && vars_ == other.vars_;
}

// ------------------------------------------------------------ Monomial

Monomial::Monomial(const Ring& ring, std::vector<std::pair<int, int>> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  int write = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    auto [var, exp] = factors_[i];
    if (var < 0 || var >= static_cast<int>(ring.vars().size()))
      fail(errc::variable_mismatch, "monomial references unknown variable index");
    if (exp < 0) fail(errc::parse, "negative exponent in monomial");
    if (exp == 0) continue;
    if (write > 0 && factors_[write - 1].first == var)
      factors_[write - 1].second += exp;
    else
      factors_[write++] = {var, exp};
  }
  factors_.resize(write);
  degree_ = 0;
  for (auto [var, exp] : factors_) degree_ += exp * ring.vars()[var].degree;
}

int Monomial::exponent(int var) const {
  for (auto [v, e] : factors_)
    if (v == var) return e;
  return 0;
}

Monomial Monomial::times(const Ring& ring, const Monomial& other) const {
  std::vector<std::pair<int, int>> merged = factors_;
  merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
  return Monomial(ring, std::move(merged));
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    auto [va, ea] = a.factors_[i];
    auto [vb, eb] = b.factors_[j];
    if (va != vb) return va < vb ? -1 : 1; // earlier variable present sorts first
    if (ea != eb) return ea > eb ? -1 : 1; // higher exponent sorts first
    ++i, ++j;
  }
  if (i < a.factors_.size()) return -1;
  if (j < b.factors_.size()) return 1;
  return 0;
}

// ---------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(RingPtr ring, const Rat& value) {
  Polynomial p(std::move(ring));
  p.add_term(Monomial::one(), value);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  int idx = ring->var_index(name);
  if (idx < 0) fail(errc::variable_mismatch, "unknown ring variable '" + name + "'");
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  Polynomial p(ring);
  p.add_term(Monomial(*ring, {{index, 1}}), 1);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Polynomial::constant_value() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous(int* degree_out) const {
  if (terms_.empty()) {
    if (degree_out) *degree_out = -1;
    return true;
  }
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  if (degree_out) *degree_out = d;
  return true;
}

Polynomial Polynomial::graded_part(int n) const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == n) out.terms_.emplace(m, c);
  return out;
}

Rat Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::check_value(const Rat& c) const {
  if (ring_ && ring_->domain() == Domain::Z && !is_integer(c))
    fail(errc::domain_mismatch, "non-integer coefficient in a Z-polynomial: " + rat_to_string(c));
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  check_value(c);
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingPtr Polynomial::merged_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring_ || !b.ring_) fail(errc::internal, "operation on a detached polynomial");
  if (a.ring_->domain() != b.ring_->domain())
    fail(errc::domain_mismatch, "mixed Z/Q coefficient domains");
  if (!a.ring_->compatible(*b.ring_))
    fail(errc::variable_mismatch, "polynomials over different variable universes");
  return a.ring_->normalizer() ? a.ring_ : b.ring_;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial out(merged_ring(*this, o));
  out.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = out.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial out(merged_ring(*this, o));
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      out.add_term(ma.times(*out.ring_, mb), ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) {
    Rat cv = v * c;
    out.check_value(cv);
    out.terms_.emplace(m, cv);
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
  return ring_->compatible(*o.ring_) && terms_ == o.terms_;
}

Polynomial Polynomial::normalized() const {
  if (!ring_ || !ring_->normalizer() || terms_.empty()) return *this;
  return ring_->normalizer()->normal(*this);
}

Polynomial Polynomial::substituted(const RingPtr& target,
                                   const std::map<std::string, Polynomial>& images) const {
  if (!ring_) fail(errc::internal, "substitution on a detached polynomial");
  std::vector<const Polynomial*> image_of(ring_->vars().size(), nullptr);
  for (const auto& [name, img] : images) {
    int idx = ring_->var_index(name);
    if (idx < 0) fail(errc::variable_mismatch, "substitution for unknown variable '" + name + "'");
    image_of[idx] = &img;
  }
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (auto [var, exp] : m.factors()) {
      if (!image_of[var])
        fail(errc::variable_mismatch,
             "no image for variable '" + ring_->vars()[var].name + "' in substitution");
      for (int k = 0; k < exp; ++k) term = term * (*image_of[var]);
    }
    out = out + term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool need_coeff = (a != 1) || m.is_one();
    if (need_coeff) os << rat_to_string(a);
    bool need_star = need_coeff;
    for (auto [var, exp] : m.factors()) {
      if (need_star) os << "*";
      os << ring_->vars()[var].name;
      if (exp > 1) os << "^" << exp;
      need_star = true;
    }
  }
  return os.str();
}

} // namespace cobord
