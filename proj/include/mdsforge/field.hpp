#pragma once

// Exact arithmetic in F_p and F_{p^b} = F_p[t]/(f(t)).
//
// Elements are stored densely in the polynomial basis 1, t, ..., t^{b-1}.  A
// field is an immutable, shared context; elements keep a handle to it, so
// they are plain values that may be copied and used from any thread.
//
// A default-constructed Element (or one built from an int) is a
// "context-free integer".  It adopts the field of whatever it is combined
// with.  This is what lets Eigen create Scalar(0) and Scalar(1) for
// Matrix<Element, ...> without knowing which field the matrix lives in.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "mdsforge/error.hpp"

namespace mdsforge {

class Element;

/// Monic polynomials over F_p on raw coefficient vectors, low degree first.
namespace fp {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo m; m must have an invertible leading coefficient.
Poly mod(Poly a, const Poly& m, std::uint64_t p);
void divmod(const Poly& a, const Poly& m, std::uint64_t p, Poly& quotient, Poly& remainder);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// base^(p^times) mod m, by repeated p-th powering.
Poly frobenius_mod(const Poly& base, unsigned times, const Poly& m, std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace fp

/// Deterministic Miller-Rabin, exact for every 64-bit n.
bool is_prime(std::uint64_t n);

/// Rabin's test.  `f` is low-degree-first and must be monic of degree >= 1.
bool is_irreducible(const fp::Poly& f, std::uint64_t p);

/// Smallest monic irreducible of degree b over F_p, comparing coefficient
/// vectors lexicographically starting from the constant term.
fp::Poly smallest_irreducible(std::uint64_t p, unsigned b);

/// Parses "x^2+2", "3*x^13 + x + 7", "-x+1" into a low-degree-first vector
/// over F_p.  `var` is the indeterminate name.
fp::Poly parse_fp_poly(std::string_view text, std::uint64_t p, std::string_view var);

/// Renders a polynomial high degree first ("x^2+2").
std::string format_fp_poly(const fp::Poly& a, std::string_view var);

namespace detail {
struct FieldData {
  std::uint64_t p = 0;
  unsigned b = 1;
  fp::Poly modulus;  // monic, size b + 1; empty for prime fields
};
}  // namespace detail

inline constexpr unsigned kMaxExtensionDegree = 64;
inline constexpr std::uint64_t kMaxCharacteristic = (std::uint64_t{1} << 31);

class Field {
 public:
  Field() = default;

  /// F_p, or F_{p^b} with the smallest monic irreducible modulus.
  static Field make(std::uint64_t p, unsigned b = 1);
  /// F_{p^b} with an explicit modulus (low degree first, monic, degree b).
  static Field make(std::uint64_t p, unsigned b, fp::Poly modulus);
  /// "p=7" | "p=7,b=2,mod=x^2+2" | "p=11,b=13"
  static Field parse(std::string_view spec);

  bool valid() const noexcept { return data_ != nullptr; }
  std::uint64_t characteristic() const { return data().p; }
  unsigned degree() const { return data().b; }
  bool is_prime_field() const { return data().b == 1; }
  const fp::Poly& modulus() const { return data().modulus; }
  /// p^b when it fits in 64 bits.
  std::optional<std::uint64_t> order() const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t value) const;
  Element element(fp::Poly coeffs) const;
  /// The class of t, a root of the modulus.  Only defined when b > 1.
  Element generator() const;
  Element parse_element(std::string_view text) const;
  Element random(std::mt19937_64& rng) const;
  Element random_nonzero(std::mt19937_64& rng) const;
  /// All elements in coefficient-odometer order; only for small fields.
  std::vector<Element> elements() const;

  Field prime_subfield() const;
  /// Canonical spec string; always spells out the modulus for b > 1.
  std::string spec() const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  const detail::FieldData& data() const;

  std::shared_ptr<const detail::FieldData> data_;
};

class Element {
 public:
  Element() = default;
  // Implicit on purpose: Eigen writes Scalar(0) and Scalar(1).
  Element(int value) : free_(value) {}  // NOLINT(google-explicit-constructor)

  bool has_field() const noexcept { return field_.valid(); }
  const Field& field() const { return field_; }
  /// Polynomial-basis coordinates; requires a field.
  const fp::Poly& coeffs() const;
  std::int64_t free_value() const noexcept { return free_; }

  bool is_zero() const;
  bool is_one() const;

  /// Re-expresses a context-free integer inside `f`; identity if already in f.
  Element in(const Field& f) const;

  Element inverse() const;
  Element pow(std::uint64_t exponent) const;
  /// x -> x^(p^times)
  Element frobenius(unsigned times = 1) const;

  std::string to_string() const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);
  Element& operator/=(const Element& rhs);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }
  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Element& e);

 private:
  friend class Field;
  Element(Field field, fp::Poly coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {}

  Field field_;
  fp::Poly c_;
  std::int64_t free_ = 0;
};

inline bool is_zero(const Element& e) { return e.is_zero(); }

/// Canonical embedding of `a` into `target`.  Supported: identical fields, and
/// the prime subfield into any field of the same characteristic.
Element embed(const Element& a, const Field& target);

/// Degree of the minimal polynomial of `beta` over the subfield F_{p^base},
/// i.e. the length of its orbit under x -> x^(p^base).
unsigned min_poly_degree(const Element& beta, unsigned base_degree = 1);

}  // namespace mdsforge

namespace Eigen {
template <>
struct NumTraits<mdsforge::Element> : GenericNumTraits<mdsforge::Element> {
  using Real = mdsforge::Element;
  using NonInteger = mdsforge::Element;
  using Literal = mdsforge::Element;
  using Nested = mdsforge::Element;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 9,
  };
};
}  // namespace Eigen
