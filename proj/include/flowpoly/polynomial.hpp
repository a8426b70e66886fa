#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <climits>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flowpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of t^i; the highest stored
/// coefficient is always nonzero, so the zero polynomial stores nothing.
class IntPoly {
 public:
  static constexpr int kZeroDegree = INT_MIN;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(BigInt c);
  /// t + shift
  static IntPoly linear(long long shift);
  static IntPoly monomial(std::size_t power, BigInt c = 1);

  [[nodiscard]] int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of t^i; zero past the degree.
  [[nodiscard]] BigInt coeff(std::size_t i) const;
  [[nodiscard]] const BigInt& leading() const;

  [[nodiscard]] BigInt eval(const BigInt& x) const;
  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] IntPoly derivative() const;
  /// p(-t)
  [[nodiscard]] IntPoly reflect() const;

  /// Space-separated coefficients from the constant term upward; "0" for zero.
  [[nodiscard]] std::string to_string() const;
  /// Decimal strings, constant term first (the JSON form).
  [[nodiscard]] std::vector<std::string> to_decimal_strings() const;
  /// Human-readable form such as "t^2 - 3*t + 2".
  [[nodiscard]] std::string pretty() const;
  static IntPoly parse(std::string_view text);

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly pow(const IntPoly& p, unsigned k);

/// Returns r with p == q * r. Throws InexactDivision when q does not divide p
/// over the integers, DomainError when q is zero.
IntPoly exact_div(const IntPoly& p, const IntPoly& q);

/// (-1)^(m-n+1) * p(-t)
IntPoly tau_transform(const IntPoly& p, long long m, long long n);

/// Coefficient-wise order: every coefficient of p is <= the matching one of q
/// (the shorter polynomial is padded with zeros).
bool leq_c(const IntPoly& p, const IntPoly& q);

/// Product form prod (t + shift)^exponent.
struct BoundSpec {
  struct Factor {
    long long shift = 0;
    unsigned exponent = 0;
    friend bool operator==(const Factor&, const Factor&) = default;
  };
  std::vector<Factor> factors;
  /// Set when a constructor clamped a negative exponent to zero.
  bool clamped = false;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const BoundSpec&, const BoundSpec&) = default;
};

IntPoly expand(const BoundSpec& bound);

/// -1, 0 or +1: the exact sign of p(x).
int sign_at(const IntPoly& p, const Rational& x);

/// Open interval (lo, hi); a missing endpoint is infinite.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

/// Square-free factorization p = c * prod f_i^i with primitive f_i of positive
/// leading coefficient. Returns the (f_i, i) pairs with nonconstant f_i.
std::vector<std::pair<IntPoly, unsigned>> square_free_decomposition(const IntPoly& p);

/// Number of distinct real roots of p in the open interval (the whole real
/// line when absent), by Sturm sequences over exact rationals.
std::size_t sturm_real_root_count(const IntPoly& p, const std::optional<Interval>& interval = std::nullopt);

/// Real roots of p in the interval counted with multiplicity.
std::size_t real_root_count_with_multiplicity(const IntPoly& p,
                                              const std::optional<Interval>& interval = std::nullopt);

struct RationalRoot {
  Rational value;
  unsigned multiplicity = 0;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots of p with exact multiplicities, sorted ascending.
std::vector<RationalRoot> rational_roots(const IntPoly& p);

/// Multiplicity of x as a root of p (0 when p(x) != 0).
unsigned root_multiplicity(const IntPoly& p, const Rational& x);

/// True iff every elementary symmetric function of `roots` equals
/// (-1)^j a_{d-j} / a_d. Throws DomainError when |roots| != degree(p).
bool vieta_check(const IntPoly& p, std::span<const Rational> roots);

struct RootSummary {
  int degree = IntPoly::kZeroDegree;
  std::vector<RationalRoot> rational;
  std::size_t distinct_real = 0;
  std::size_t real_with_multiplicity = 0;
};

RootSummary summarize_roots(const IntPoly& p);

/// "a/b" or "a"
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace flowpoly
