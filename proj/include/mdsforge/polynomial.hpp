#pragma once

// Dense univariate polynomials over a coefficient ring, low degree first.
//
// Polynomial<Element> is the ring F_q[x] used for the symbolic perturbation
// matrices; it is also an Eigen scalar so that PolyMatrix is an ordinary
// Eigen::Matrix.

#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mdsforge/error.hpp"
#include "mdsforge/field.hpp"

namespace mdsforge {

inline constexpr int kZeroPolynomialDegree = -1;

namespace detail {
// Members named is_zero() would hide the free overloads inside the class.
template <class Ring>
bool ring_is_zero(const Ring& r) {
  return is_zero(r);
}
}  // namespace detail

template <class Ring>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int constant) {  // NOLINT(google-explicit-constructor): Eigen's Scalar(0)
    if (constant != 0) c_.push_back(Ring(constant));
  }
  explicit Polynomial(Ring constant) {
    c_.push_back(std::move(constant));
    trim();
  }
  explicit Polynomial(std::vector<Ring> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(Ring coeff, int degree) {
    std::vector<Ring> c(static_cast<std::size_t>(degree) + 1, Ring(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Ring>& coefficients() const { return c_; }
  Ring coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Ring(0);
  }
  const Ring& leading() const {
    if (c_.empty()) raise(ErrorKind::DivisionByZero, "zero polynomial has no leading coefficient");
    return c_.back();
  }

  /// Horner evaluation; `lift` maps each coefficient into the ring of `at`.
  template <class T, class Lift>
  T evaluate(const T& at, Lift&& lift) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + lift(c_[i]);
    return acc;
  }
  template <class T>
  T evaluate(const T& at) const {
    return evaluate(at, [](const Ring& r) { return T(r); });
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Ring(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Ring(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Ring> r(a.c_.size() + b.c_.size() - 1, Ring(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::ring_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] != b.c_[i]) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Long division; the divisor's leading coefficient must be invertible.
  friend void divmod(const Polynomial& a, const Polynomial& d, Polynomial& q, Polynomial& r) {
    if (d.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
    r = a;
    q = Polynomial();
    if (a.degree() < d.degree()) return;
    std::vector<Ring> quot(static_cast<std::size_t>(a.degree() - d.degree()) + 1, Ring(0));
    const Ring lead_inv = Ring(1) / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
      const Ring c = r.leading() * lead_inv;
      quot[shift] = c;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r.c_[shift + j] -= c * d.c_[j];
      r.trim();
    }
    q = Polynomial(std::move(quot));
  }

  /// a / d when d divides a exactly; anything else is a logic error.
  friend Polynomial exact_quotient(const Polynomial& a, const Polynomial& d) {
    Polynomial q, r;
    divmod(a, d, q, r);
    if (!r.is_zero()) raise(ErrorKind::VerificationFailed, "inexact polynomial division");
    return q;
  }

  std::string to_string(char var = 'x') const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (detail::ring_is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << '(' << c_[i] << ')';
      if (i >= 1) os << '*' << var;
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && detail::ring_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<Ring> c_;
};

template <class Ring>
bool is_zero(const Polynomial<Ring>& p) {
  return p.is_zero();
}

using Poly = Polynomial<Element>;

}  // namespace mdsforge

namespace Eigen {
template <class Ring>
struct NumTraits<mdsforge::Polynomial<Ring>> : GenericNumTraits<mdsforge::Polynomial<Ring>> {
  using Real = mdsforge::Polynomial<Ring>;
  using NonInteger = mdsforge::Polynomial<Ring>;
  using Literal = mdsforge::Polynomial<Ring>;
  using Nested = mdsforge::Polynomial<Ring>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32,
  };
};
}  // namespace Eigen
