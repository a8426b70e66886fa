#include "flowpoly/polynomial.hpp"

#include "flowpoly/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace flowpoly {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Rational-coefficient polynomial, used for gcds and Sturm chains.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
  trim(d);
  return d;
}

// Returns (quotient, remainder).
std::pair<RatPoly, RatPoly> rat_divmod(RatPoly num, const RatPoly& den) {
  if (den.empty()) throw DomainError("division by the zero polynomial");
  RatPoly quot;
  if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    const std::size_t shift = num.size() - den.size();
    const Rational factor = num.back() / den.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {quot, num};
}

RatPoly make_monic(RatPoly p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    auto rem = rat_divmod(a, b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  return make_monic(std::move(a));
}

RatPoly rat_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Scales to integers, divides out the content, makes the leading term positive.
IntPoly primitive_part(const RatPoly& p) {
  if (p.empty()) return {};
  BigInt lcm_den = 1;
  for (const auto& c : p) {
    const BigInt d = denominator(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> ints;
  ints.reserve(p.size());
  BigInt content = 0;
  for (const auto& c : p) {
    BigInt v = numerator(c) * (lcm_den / denominator(c));
    content = boost::multiprecision::gcd(content, abs(v));
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return IntPoly(std::move(ints));
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Rational rat_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Sign of p at -inf (toward_plus=false) or +inf.
int sign_at_infinity(const RatPoly& p, bool toward_plus) {
  const int lead = sign_of(p.back());
  if (toward_plus || (p.size() - 1) % 2 == 0) return lead;
  return -lead;
}

std::vector<RatPoly> sturm_chain(const RatPoly& squarefree) {
  std::vector<RatPoly> chain{squarefree, rat_derivative(squarefree)};
  while (!chain.back().empty()) {
    auto rem = rat_divmod(chain[chain.size() - 2], chain.back()).second;
    for (auto& c : rem) c = -c;
    if (rem.empty()) break;
    chain.push_back(std::move(rem));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

template <typename SignFn>
std::size_t sign_changes(const std::vector<RatPoly>& chain, SignFn&& sign_fn) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_fn(p);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Distinct roots of a square-free polynomial in the open interval.
std::size_t sturm_count_squarefree(const RatPoly& sqf, const std::optional<Interval>& interval) {
  if (sqf.size() <= 1) return 0;
  const auto chain = sturm_chain(sqf);
  const std::optional<Rational> lo = interval ? interval->lo : std::nullopt;
  const std::optional<Rational> hi = interval ? interval->hi : std::nullopt;
  if (lo && hi && *lo >= *hi) return 0;
  const auto v_lo = lo ? sign_changes(chain, [&](const RatPoly& p) { return sign_of(rat_eval(p, *lo)); })
                       : sign_changes(chain, [](const RatPoly& p) { return sign_at_infinity(p, false); });
  const auto v_hi = hi ? sign_changes(chain, [&](const RatPoly& p) { return sign_of(rat_eval(p, *hi)); })
                       : sign_changes(chain, [](const RatPoly& p) { return sign_at_infinity(p, true); });
  // v_lo - v_hi counts roots in (lo, hi].
  std::size_t count = v_lo - v_hi;
  if (hi && rat_eval(sqf, *hi) == 0) --count;
  return count;
}

std::vector<BigInt> positive_divisors(const BigInt& value) {
  BigInt v = abs(value);
  std::vector<BigInt> small, large;
  if (v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    const auto u = static_cast<std::uint64_t>(v);
    for (std::uint64_t d = 1; d <= u / d; ++d) {
      if (u % d == 0) {
        small.emplace_back(d);
        if (d != u / d) large.emplace_back(u / d);
      }
    }
  } else {
    for (BigInt d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        small.push_back(d);
        if (d != v / d) large.push_back(v / d);
      }
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// True iff num/den is a root: sum c_i num^i den^(d-i) == 0.
bool is_root(const IntPoly& p, const BigInt& num, const BigInt& den) {
  const auto cs = p.coeffs();
  BigInt h = 0;
  BigInt den_pow = 1;
  const std::size_t d = cs.size() - 1;
  std::vector<BigInt> den_powers(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    den_powers[i] = den_pow;
    den_pow *= den;
  }
  for (std::size_t i = cs.size(); i-- > 0;) h = h * num + cs[i] * den_powers[d - i];
  return h == 0;
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::linear(long long shift) { return IntPoly{shift, 1}; }

IntPoly IntPoly::monomial(std::size_t power, BigInt c) {
  std::vector<BigInt> cs(power + 1, BigInt(0));
  cs[power] = std::move(c);
  return IntPoly(std::move(cs));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reflect() const {
  IntPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].str();
  }
  return out;
}

std::vector<std::string> IntPoly::to_decimal_strings() const {
  std::vector<std::string> out;
  if (coeffs_.empty()) return {"0"};
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

std::string IntPoly::pretty() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = (mag == 1 && i > 0);
    if (!unit) out += mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly IntPoly::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<BigInt> cs;
  std::string token;
  while (in >> token) {
    try {
      cs.emplace_back(token);
    } catch (const std::exception&) {
      throw ParseError("bad polynomial coefficient '" + token + "'");
    }
  }
  if (cs.empty()) throw ParseError("empty polynomial text");
  return IntPoly(std::move(cs));
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
  IntPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------- free functions

IntPoly add(const IntPoly& p, const IntPoly& q) { return p + q; }
IntPoly mul(const IntPoly& p, const IntPoly& q) { return p * q; }

IntPoly pow(const IntPoly& p, unsigned k) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

IntPoly exact_div(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw DomainError("exact_div by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < q.degree()) throw InexactDivision("exact_div: divisor degree exceeds dividend degree");
  std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
  const auto qs = q.coeffs();
  const BigInt& lead = qs.back();
  std::vector<BigInt> quot(rem.size() - qs.size() + 1, BigInt(0));
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    const BigInt& top = rem[shift + qs.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw InexactDivision("exact_div: " + p.to_string() + " / " + q.to_string());
    const BigInt factor = top / lead;
    quot[shift] = factor;
    for (std::size_t i = 0; i < qs.size(); ++i) rem[shift + i] -= factor * qs[i];
  }
  for (const auto& c : rem) {
    if (c != 0) throw InexactDivision("exact_div: nonzero remainder for " + p.to_string() + " / " + q.to_string());
  }
  return IntPoly(std::move(quot));
}

IntPoly tau_transform(const IntPoly& p, long long m, long long n) {
  IntPoly r = p.reflect();
  if ((m - n + 1) % 2 != 0) r = -r;
  return r;
}

bool leq_c(const IntPoly& p, const IntPoly& q) {
  const std::size_t len = std::max(p.coeffs().size(), q.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) {
    if (p.coeff(i) > q.coeff(i)) return false;
  }
  return true;
}

std::string BoundSpec::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (f.exponent == 0) continue;
    out += "(t";
    out += f.shift < 0 ? "-" : "+";
    out += std::to_string(f.shift < 0 ? -f.shift : f.shift);
    out += ")";
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out.empty() ? "1" : out;
}

IntPoly expand(const BoundSpec& bound) {
  IntPoly out = IntPoly::constant(1);
  for (const auto& f : bound.factors) out *= pow(IntPoly::linear(f.shift), f.exponent);
  return out;
}

int sign_at(const IntPoly& p, const Rational& x) { return sign_of(p.eval(x)); }

std::vector<std::pair<IntPoly, unsigned>> square_free_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm over Q.
  const RatPoly f = make_monic(to_rat(p));
  const RatPoly df = rat_derivative(f);
  const RatPoly a0 = rat_gcd(f, df);
  RatPoly b = rat_divmod(f, a0).first;
  RatPoly c = rat_divmod(df, a0).first;
  RatPoly d = rat_sub(c, rat_derivative(b));
  unsigned i = 1;
  while (b.size() > 1) {
    RatPoly a = rat_gcd(b, d);
    if (a.size() > 1) out.emplace_back(primitive_part(a), i);
    b = rat_divmod(b, a).first;
    c = rat_divmod(d, a).first;
    d = rat_sub(c, rat_derivative(b));
    ++i;
  }
  return out;
}

std::size_t sturm_real_root_count(const IntPoly& p, const std::optional<Interval>& interval) {
  if (p.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const RatPoly f = to_rat(p);
  const RatPoly g = rat_gcd(f, rat_derivative(f));
  const RatPoly sqf = rat_divmod(f, g).first;
  return sturm_count_squarefree(sqf, interval);
}

std::size_t real_root_count_with_multiplicity(const IntPoly& p, const std::optional<Interval>& interval) {
  std::size_t total = 0;
  for (const auto& [factor, mult] : square_free_decomposition(p)) {
    total += mult * sturm_count_squarefree(to_rat(factor), interval);
  }
  return total;
}

unsigned root_multiplicity(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) throw DomainError("root multiplicity in the zero polynomial");
  const IntPoly linear(std::vector<BigInt>{-numerator(x), denominator(x)});
  unsigned mult = 0;
  IntPoly rest = p;
  while (rest.degree() >= 1 && rest.eval(x) == 0) {
    rest = exact_div(rest, linear);
    ++mult;
  }
  return mult;
}

std::vector<RationalRoot> rational_roots(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  std::vector<BigInt> cs(p.coeffs().begin(), p.coeffs().end());
  unsigned zero_mult = 0;
  while (cs.size() > 1 && cs.front() == 0) {
    cs.erase(cs.begin());
    ++zero_mult;
  }
  if (zero_mult) roots.push_back({Rational(0), zero_mult});
  IntPoly rest(std::move(cs));
  if (rest.degree() >= 1) {
    const auto nums = positive_divisors(rest.coeff(0));
    const auto dens = positive_divisors(rest.leading());
    for (const auto& den : dens) {
      for (const auto& num_abs : nums) {
        if (boost::multiprecision::gcd(num_abs, den) != 1) continue;
        for (int sgn : {-1, 1}) {
          if (rest.degree() < 1) break;
          const BigInt num = num_abs * sgn;
          if (!is_root(rest, num, den)) continue;
          const IntPoly linear(std::vector<BigInt>{-num, den});
          unsigned mult = 0;
          while (rest.degree() >= 1 && is_root(rest, num, den)) {
            rest = exact_div(rest, linear);
            ++mult;
          }
          roots.push_back({Rational(num, den), mult});
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return roots;
}

bool vieta_check(const IntPoly& p, std::span<const Rational> roots) {
  if (p.is_zero() || static_cast<int>(roots.size()) != p.degree()) {
    throw DomainError("vieta_check: root count must equal the polynomial degree");
  }
  const std::size_t d = roots.size();
  // elementary[j] = e_j(roots)
  std::vector<Rational> elementary(d + 1, Rational(0));
  elementary[0] = 1;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = k + 1; j >= 1; --j) elementary[j] += elementary[j - 1] * roots[k];
  }
  const Rational lead(p.leading());
  for (std::size_t j = 1; j <= d; ++j) {
    Rational expected = Rational(p.coeff(d - j)) / lead;
    if (j % 2 == 1) expected = -expected;
    if (elementary[j] != expected) return false;
  }
  return true;
}

RootSummary summarize_roots(const IntPoly& p) {
  RootSummary s;
  s.degree = p.degree();
  if (p.is_zero()) return s;
  s.rational = rational_roots(p);
  s.distinct_real = sturm_real_root_count(p);
  s.real_with_multiplicity = real_root_count_with_multiplicity(p);
  return s;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  try {
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      BigInt scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const bool negative = !s.empty() && s.front() == '-';
      BigInt whole(s.substr(0, dot).empty() || s.substr(0, dot) == "-" ? std::string("0") : s.substr(0, dot));
      BigInt part(frac.empty() ? std::string("0") : frac);
      Rational value = Rational(boost::multiprecision::abs(whole)) + Rational(part, scale);
      return negative ? -value : value;
    }
    return Rational(BigInt(s));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

}  // namespace flowpoly
