#include "mdsforge/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

namespace mdsforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::InvalidBaseDegree: return "InvalidBaseDegree";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotFullRank: return "NotFullRank";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// F_p polynomial kernels

namespace fp {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) raise(ErrorKind::DivisionByZero, "inverse of zero");
  // p is prime, so Fermat suffices.
  return pow_mod(a, p - 2, p);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& m, std::uint64_t p, Poly& quotient, Poly& remainder) {
  Poly mm = m;
  trim(mm);
  if (mm.empty()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  remainder = a;
  trim(remainder);
  quotient.clear();
  if (remainder.size() < mm.size()) return;
  quotient.assign(remainder.size() - mm.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(mm.back(), p);
  for (std::size_t i = remainder.size(); i-- >= mm.size();) {
    const std::uint64_t c = mul_mod(remainder[i], lead_inv, p);
    if (c == 0) continue;
    const std::size_t shift = i + 1 - mm.size();
    quotient[shift] = c;
    for (std::size_t j = 0; j < mm.size(); ++j) {
      remainder[shift + j] = (remainder[shift + j] + p - mul_mod(c, mm[j], p)) % p;
    }
  }
  trim(remainder);
  trim(quotient);
}

Poly mod(Poly a, const Poly& m, std::uint64_t p) {
  Poly q, r;
  divmod(a, m, p, q, r);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
  }
  return a;
}

namespace {

Poly pow_poly_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1 % p};
  trim(result);
  base = mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

}  // namespace

Poly frobenius_mod(const Poly& base, unsigned times, const Poly& m, std::uint64_t p) {
  Poly r = mod(base, m, p);
  for (unsigned i = 0; i < times; ++i) r = pow_poly_mod(r, p, m, p);
  return r;
}

}  // namespace fp

// ---------------------------------------------------------------------------
// primality and irreducibility

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t small : kBases) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes as bases are deterministic for all 64-bit n.
  for (std::uint64_t a : kBases) {
    std::uint64_t x = fp::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = fp::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const fp::Poly& f_in, std::uint64_t p) {
  fp::Poly f = f_in;
  fp::trim(f);
  if (f.size() < 2) return false;
  const auto b = static_cast<unsigned>(f.size() - 1);
  if (b == 1) return true;
  const fp::Poly x{0, 1};
  // x^(p^b) == x (mod f)
  if (fp::frobenius_mod(x, b, f, p) != fp::mod(x, f, p)) return false;
  for (unsigned r : prime_divisors(b)) {
    fp::Poly h = fp::sub(fp::frobenius_mod(x, b / r, f, p), x, p);
    if (fp::gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

fp::Poly smallest_irreducible(std::uint64_t p, unsigned b) {
  if (b == 1) return {0, 1};
  // Digits a_0..a_{b-1}; a_0 is the most significant.  a_0 = 0 is divisible by x.
  fp::Poly digits(b, 0);
  digits[0] = 1;
  for (;;) {
    fp::Poly f = digits;
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    std::size_t i = b;
    while (i-- > 0) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    if (digits[0] == 0) break;  // wrapped; cannot happen since irreducibles exist
  }
  raise(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// text

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::uint64_t reduce_signed(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

}  // namespace

fp::Poly parse_fp_poly(std::string_view text, std::uint64_t p, std::string_view var) {
  const std::string s = strip_spaces(text);
  if (s.empty()) raise(ErrorKind::ParseError, "empty polynomial");
  fp::Poly out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    raise(ErrorKind::ParseError, "cannot parse '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    long long coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      auto res = std::from_chars(s.data() + i, s.data() + j, coeff);
      if (res.ec != std::errc()) fail("bad coefficient");
      have_coeff = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::size_t exponent = 0;
    if (s.compare(i, var.size(), var) == 0 && !var.empty()) {
      i += var.size();
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("missing exponent");
        auto res = std::from_chars(s.data() + i, s.data() + j, exponent);
        if (res.ec != std::errc()) fail("bad exponent");
        i = j;
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or '" + std::string(var) + "'");
    }
    if (exponent > 4096) fail("exponent too large");
    if (out.size() <= exponent) out.resize(exponent + 1, 0);
    out[exponent] = (out[exponent] + reduce_signed(sign * coeff, p)) % p;
  }
  fp::trim(out);
  return out;
}

std::string format_fp_poly(const fp::Poly& a, std::string_view var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << a[i];
    } else {
      if (a[i] != 1) os << a[i] << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// Field

const detail::FieldData& Field::data() const {
  if (!data_) raise(ErrorKind::ContextMismatch, "element has no field");
  return *data_;
}

Field Field::make(std::uint64_t p, unsigned b) {
  if (b == 1) return make(p, 1, {});
  if (!is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (b == 0 || b > kMaxExtensionDegree) {
    raise(ErrorKind::SpecInvalid, "extension degree must lie in [1, 64]");
  }
  return make(p, b, smallest_irreducible(p, b));
}

Field Field::make(std::uint64_t p, unsigned b, fp::Poly modulus) {
  if (p >= kMaxCharacteristic) raise(ErrorKind::SpecInvalid, "characteristic must be below 2^31");
  if (!is_prime(p)) raise(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (b == 0 || b > kMaxExtensionDegree) {
    raise(ErrorKind::SpecInvalid, "extension degree must lie in [1, 64]");
  }
  for (auto& c : modulus) c %= p;
  fp::trim(modulus);
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->b = b;
  if (!modulus.empty() || b > 1) {
    if (modulus.size() != b + 1) {
      raise(ErrorKind::DegreeMismatch, "modulus must have degree " + std::to_string(b));
    }
    if (modulus.back() != 1) raise(ErrorKind::DegreeMismatch, "modulus must be monic");
    if (!is_irreducible(modulus, p)) {
      raise(ErrorKind::ReducibleModulus, format_fp_poly(modulus, "x") + " is reducible over F_" +
                                             std::to_string(p));
    }
  }
  if (b > 1) data->modulus = std::move(modulus);
  return Field(std::move(data));
}

Field Field::parse(std::string_view spec) {
  std::optional<std::uint64_t> p;
  unsigned b = 1;
  std::optional<std::string> mod;
  const std::string s = strip_spaces(spec);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    const std::string item = s.substr(start, end - start);
    start = end + 1;
    if (item.empty()) {
      if (end == s.size()) break;
      continue;
    }
    const auto eq = item.find('=');
    if (eq == std::string::npos) raise(ErrorKind::ParseError, "bad field spec item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    auto parse_uint = [&](std::uint64_t& out) {
      auto res = std::from_chars(value.data(), value.data() + value.size(), out);
      if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        raise(ErrorKind::ParseError, "bad integer '" + value + "' in field spec");
      }
    };
    if (key == "p") {
      std::uint64_t v = 0;
      parse_uint(v);
      p = v;
    } else if (key == "b") {
      std::uint64_t v = 0;
      parse_uint(v);
      if (v == 0 || v > kMaxExtensionDegree) {
        raise(ErrorKind::SpecInvalid, "extension degree must lie in [1, 64]");
      }
      b = static_cast<unsigned>(v);
    } else if (key == "mod") {
      mod = value;
    } else {
      raise(ErrorKind::ParseError, "unknown field spec key '" + key + "'");
    }
    if (end == s.size()) break;
  }
  if (!p) raise(ErrorKind::ParseError, "field spec needs p=<prime>");
  if (!is_prime(*p)) raise(ErrorKind::NotPrime, std::to_string(*p) + " is not prime");
  if (mod) return make(*p, b, parse_fp_poly(*mod, *p, "x"));
  return make(*p, b);
}

std::optional<std::uint64_t> Field::order() const {
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < degree(); ++i) {
    q *= characteristic();
    if (q > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(q);
}

Element Field::zero() const { return Element(*this, fp::Poly(degree(), 0)); }

Element Field::one() const { return from_int(1); }

Element Field::from_int(std::int64_t value) const {
  fp::Poly c(degree(), 0);
  c[0] = reduce_signed(value, characteristic());
  return Element(*this, std::move(c));
}

Element Field::element(fp::Poly coeffs) const {
  const auto p = characteristic();
  for (auto& c : coeffs) c %= p;
  if (coeffs.size() > degree()) {
    if (is_prime_field()) {
      raise(ErrorKind::DegreeMismatch, "prime-field element needs a single coefficient");
    }
    coeffs = fp::mod(std::move(coeffs), modulus(), p);
  }
  coeffs.resize(degree(), 0);
  return Element(*this, std::move(coeffs));
}

Element Field::generator() const {
  if (is_prime_field()) raise(ErrorKind::SpecInvalid, "a prime field has no generator t");
  fp::Poly c(degree(), 0);
  c[1] = 1;
  return Element(*this, std::move(c));
}

Element Field::parse_element(std::string_view text) const {
  std::string s(text);
  // Accept the Greek letter and "theta" as aliases of t.
  for (const std::string alias : {"\xCE\xB8", "theta"}) {
    for (std::size_t pos; (pos = s.find(alias)) != std::string::npos;) s.replace(pos, alias.size(), "t");
  }
  fp::Poly c = parse_fp_poly(s, characteristic(), "t");
  if (is_prime_field() && c.size() > 1) {
    raise(ErrorKind::ParseError, "'" + std::string(text) + "' uses t in a prime field");
  }
  return element(std::move(c));
}

Element Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, characteristic() - 1);
  fp::Poly c(degree());
  for (auto& x : c) x = dist(rng);
  return Element(*this, std::move(c));
}

Element Field::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    Element e = random(rng);
    if (!e.is_zero()) return e;
  }
}

std::vector<Element> Field::elements() const {
  const auto q = order();
  if (!q || *q > (1u << 20)) raise(ErrorKind::ResourceLimit, "field too large to enumerate");
  std::vector<Element> out;
  out.reserve(*q);
  fp::Poly digits(degree(), 0);
  for (std::uint64_t n = 0; n < *q; ++n) {
    out.push_back(Element(*this, digits));
    for (auto& d : digits) {
      if (++d < characteristic()) break;
      d = 0;
    }
  }
  return out;
}

Field Field::prime_subfield() const {
  if (is_prime_field()) return *this;
  return make(characteristic(), 1);
}

std::string Field::spec() const {
  std::string s = "p=" + std::to_string(characteristic());
  if (!is_prime_field()) {
    s += ",b=" + std::to_string(degree()) + ",mod=" + format_fp_poly(modulus(), "x");
  }
  return s;
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return a.data_->p == b.data_->p && a.data_->b == b.data_->b && a.data_->modulus == b.data_->modulus;
}

// ---------------------------------------------------------------------------
// Element

namespace {

// Brings two operands to a common field; both context-free is left alone.
void unify(Element& a, Element& b) {
  if (a.has_field() && b.has_field()) {
    if (a.field() != b.field()) {
      raise(ErrorKind::ContextMismatch,
            "elements from " + a.field().spec() + " and " + b.field().spec() + " do not combine");
    }
  } else if (a.has_field()) {
    b = b.in(a.field());
  } else if (b.has_field()) {
    a = a.in(b.field());
  }
}

}  // namespace

const fp::Poly& Element::coeffs() const {
  if (!has_field()) raise(ErrorKind::ContextMismatch, "context-free integer has no coordinates");
  return c_;
}

bool Element::is_zero() const {
  if (!has_field()) return free_ == 0;
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t x) { return x == 0; });
}

bool Element::is_one() const {
  if (!has_field()) return free_ == 1;
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint64_t x) { return x == 0; });
}

Element Element::in(const Field& f) const {
  if (!has_field()) return f.from_int(free_);
  if (field_ != f) {
    raise(ErrorKind::ContextMismatch, "element of " + field_.spec() + " is not in " + f.spec());
  }
  return *this;
}

Element& Element::operator+=(const Element& rhs_in) {
  Element rhs = rhs_in;
  unify(*this, rhs);
  if (!has_field()) {
    free_ += rhs.free_;
    return *this;
  }
  const auto p = field_.characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + rhs.c_[i]) % p;
  return *this;
}

Element& Element::operator-=(const Element& rhs_in) {
  Element rhs = rhs_in;
  unify(*this, rhs);
  if (!has_field()) {
    free_ -= rhs.free_;
    return *this;
  }
  const auto p = field_.characteristic();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + p - rhs.c_[i]) % p;
  return *this;
}

Element Element::operator-() const {
  if (!has_field()) return Element(static_cast<int>(-free_));
  Element r = *this;
  const auto p = field_.characteristic();
  for (auto& c : r.c_) c = (p - c) % p;
  return r;
}

Element& Element::operator*=(const Element& rhs_in) {
  Element rhs = rhs_in;
  unify(*this, rhs);
  if (!has_field()) {
    free_ *= rhs.free_;
    return *this;
  }
  const auto p = field_.characteristic();
  const unsigned b = field_.degree();
  if (b == 1) {
    c_[0] = fp::mul_mod(c_[0], rhs.c_[0], p);
    return *this;
  }
  std::vector<std::uint64_t> prod(2 * b - 1, 0);
  for (unsigned i = 0; i < b; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < b; ++j) {
      prod[i + j] = (prod[i + j] + fp::mul_mod(c_[i], rhs.c_[j], p)) % p;
    }
  }
  // Reduce by the monic modulus: t^b = -(m_0 + ... + m_{b-1} t^{b-1}).
  const auto& m = field_.modulus();
  for (std::size_t i = prod.size(); i-- > b;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < b; ++j) {
      std::size_t k = i - b + j;
      prod[k] = (prod[k] + p - fp::mul_mod(c, m[j], p)) % p;
    }
  }
  prod.resize(b);
  c_ = std::move(prod);
  return *this;
}

Element Element::inverse() const {
  if (!has_field()) {
    if (free_ == 1 || free_ == -1) return *this;
    raise(ErrorKind::ContextMismatch, "cannot invert a context-free integer");
  }
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
  const auto p = field_.characteristic();
  if (field_.is_prime_field()) return Element(field_, {fp::inv_mod(c_[0], p)});
  // Extended Euclid on (modulus, a).
  fp::Poly r0 = field_.modulus();
  fp::Poly r1 = c_;
  fp::trim(r1);
  fp::Poly s0;
  fp::Poly s1{1};
  while (!r1.empty()) {
    fp::Poly q, r;
    fp::divmod(r0, r1, p, q, r);
    fp::Poly s2 = fp::sub(s0, fp::mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t scale = fp::inv_mod(r0[0], p);
  for (auto& c : s0) c = fp::mul_mod(c, scale, p);
  return field_.element(std::move(s0));
}

Element& Element::operator/=(const Element& rhs_in) {
  Element rhs = rhs_in;
  unify(*this, rhs);
  if (rhs.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  return *this *= rhs.inverse();
}

Element Element::pow(std::uint64_t exponent) const {
  Element base = *this;
  Element result = has_field() ? field_.one() : Element(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Element Element::frobenius(unsigned times) const {
  if (!has_field()) return *this;
  Element r = *this;
  for (unsigned i = 0; i < times; ++i) r = r.pow(field_.characteristic());
  return r;
}

bool operator==(const Element& a_in, const Element& b_in) {
  Element a = a_in;
  Element b = b_in;
  unify(a, b);
  if (!a.has_field()) return a.free_ == b.free_;
  return a.c_ == b.c_;
}

std::string Element::to_string() const {
  if (!has_field()) return std::to_string(free_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] != 1) os << c_[i] << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

Element embed(const Element& a, const Field& target) {
  if (!a.has_field()) return a.in(target);
  if (a.field() == target) return a;
  const Field& source = a.field();
  if (source.characteristic() != target.characteristic()) {
    raise(ErrorKind::NoEmbedding, source.spec() + " and " + target.spec() + " differ in characteristic");
  }
  if (source.is_prime_field()) return target.from_int(static_cast<std::int64_t>(a.coeffs()[0]));
  raise(ErrorKind::NoEmbedding,
        "embedding " + source.spec() + " into " + target.spec() + " is not supported");
}

unsigned min_poly_degree(const Element& beta, unsigned base_degree) {
  if (!beta.has_field()) raise(ErrorKind::ContextMismatch, "min_poly_degree needs a field element");
  const unsigned b = beta.field().degree();
  if (base_degree == 0 || b % base_degree != 0) {
    raise(ErrorKind::InvalidBaseDegree,
          std::to_string(base_degree) + " does not divide " + std::to_string(b));
  }
  Element x = beta;
  for (unsigned d = 1; d <= b / base_degree; ++d) {
    x = x.frobenius(base_degree);
    if (x == beta) return d;
  }
  // Unreachable: beta^(p^b) = beta for every element of F_{p^b}.
  raise(ErrorKind::VerificationFailed, "Frobenius orbit did not close");
}

}  // namespace mdsforge
