#include "opmono/poly_matrix.hpp"

#include <stdexcept>

namespace opmono {

PolyMatrix::PolyMatrix(const BMatrix& m) : PolyMatrix(m, {0, 0}) {}

PolyMatrix::PolyMatrix(const BMatrix& m, Exponent e) : d_(m.dim()) {
  if (e[0] < 0 || e[1] < 0) throw std::invalid_argument("PolyMatrix: negative exponent");
  if (!m.is_zero()) terms_.emplace(e, m);
}

BMatrix PolyMatrix::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BMatrix::zero(d_) : it->second;
}

int PolyMatrix::degree() const {
  int deg = -1;
  for (const auto& [e, m] : terms_) deg = std::max(deg, e[0] + e[1]);
  return deg;
}

void PolyMatrix::add_term(const Exponent& e, const BMatrix& m) {
  if (m.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, m);
  if (inserted) return;
  it->second += m;
  if (it->second.is_zero()) terms_.erase(it);
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  if (d_ == 0) d_ = other.d_;
  if (other.d_ != 0 && other.d_ != d_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  for (const auto& [e, m] : other.terms_) add_term(e, m);
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) {
  add_scaled(Rational(-1), other);
  return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, m] : terms_) m *= s;
  return *this;
}

void PolyMatrix::add_scaled(const Rational& s, const PolyMatrix& p) {
  if (s.is_zero()) return;
  if (d_ == 0) d_ = p.d_;
  if (p.d_ != 0 && p.d_ != d_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  for (const auto& [e, m] : p.terms_) add_term(e, m * s);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.d_ != 0 && b.d_ != 0 && a.d_ != b.d_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  PolyMatrix out(a.d_ != 0 ? a.d_ : b.d_);
  for (const auto& [ea, ma] : a.terms_) {
    for (const auto& [eb, mb] : b.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ma * mb);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& p) {
  if (p.terms_.empty()) return os << "0";
  bool first = true;
  for (const auto& [e, m] : p.terms_) {
    if (!first) os << " + ";
    first = false;
    os << m << "*t^" << e[0] << "*s^" << e[1];
  }
  return os;
}

PolyMatrix PolyMatrix::derivative(int var) const {
  if (var != 0 && var != 1) throw std::out_of_range("PolyMatrix: variable must be 0 or 1");
  PolyMatrix out(d_);
  for (const auto& [e, m] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    out.add_term(f, m * Rational(e[var]));
  }
  return out;
}

BMatrix PolyMatrix::evaluate(const Rational& t, const Rational& s) const {
  BMatrix acc = BMatrix::zero(d_);
  for (const auto& [e, m] : terms_) {
    Rational w(1);
    for (int k = 0; k < e[0]; ++k) w *= t;
    for (int k = 0; k < e[1]; ++k) w *= s;
    acc.add_scaled(w, m);
  }
  return acc;
}

PolyMatrix in_variable(const MatrixPolynomial& p, int var) {
  if (var != 0 && var != 1) throw std::out_of_range("in_variable: variable must be 0 or 1");
  PolyMatrix out(p.dim());
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    PolyMatrix::Exponent e{0, 0};
    e[var] = static_cast<int>(k);
    out += PolyMatrix(p.coefficients()[k], e);
  }
  return out;
}

PolyMatrix at_sum(const MatrixPolynomial& p) {
  PolyMatrix out(p.dim());
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    // (t + s)^k = sum_j C(k, j) t^j s^(k-j)
    for (std::size_t j = 0; j <= k; ++j) {
      out += PolyMatrix(p.coefficients()[k] * binomial(static_cast<long>(k), static_cast<long>(j)),
                        {static_cast<int>(j), static_cast<int>(k - j)});
    }
  }
  return out;
}

}  // namespace opmono
