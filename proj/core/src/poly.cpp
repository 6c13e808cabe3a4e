#include "permclass/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>

namespace permclass {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw AlgebraError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

std::size_t Poly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return k;
  throw AlgebraError("valuation of zero polynomial");
}

Poly Poly::monic() const {
  if (isZero()) return *this;
  const Rational lead = leading();
  Poly out = *this;
  for (auto& c : out.coeffs_) c /= lead;
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rational& c, const Poly& p) {
  if (sgn(c) == 0) return {};
  Poly out = p;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.isZero()) throw AlgebraError("polynomial division by zero");
  std::vector<Rational> rem = dividend.coeffs_;
  const std::size_t dd = divisor.coeffs_.size();
  if (rem.size() < dd) return {Poly{}, dividend};
  std::vector<Rational> quot(rem.size() - dd + 1);
  const Rational& lead = divisor.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + dd - 1] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd - 1);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

namespace {

using Residues = std::vector<std::uint64_t>;
__extension__ using Wide = unsigned __int128;

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % p);
}

std::uint64_t powMod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulMod(a, a, p))
    if (e & 1) r = mulMod(r, a, p);
  return r;
}

// Coefficients of c * p with c chosen to clear denominators, reduced mod
// `prime`. Empty if the leading coefficient vanishes mod `prime`.
Residues reduceMod(const std::vector<Rational>& coeffs, std::uint64_t prime) {
  BigInt scale = 1;
  for (const auto& c : coeffs) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  Residues out(coeffs.size());
  BigInt t;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    t = scale / coeffs[k].get_den() * coeffs[k].get_num();
    out[k] = mpz_fdiv_ui(t.get_mpz_t(), prime);
  }
  if (out.empty() || out.back() == 0) return {};
  return out;
}

void trimResidues(Residues& r) {
  while (!r.empty() && r.back() == 0) r.pop_back();
}

std::size_t gcdDegreeMod(Residues a, Residues b, std::uint64_t p) {
  while (!b.empty()) {
    const std::uint64_t inv = powMod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t q = mulMod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = (a[shift + j] + p - mulMod(q, b[j], p)) % p;
      trimResidues(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

// True when a and b are certainly coprime over Q: a coprime image modulo a
// prime not dividing either leading coefficient bounds the true gcd degree.
bool coprimeByReduction(const Poly& a, const Poly& b) {
  static constexpr std::uint64_t kPrimes[] = {2305843009213693951ULL, 4294967291ULL,
                                              1000000007ULL};
  for (const std::uint64_t p : kPrimes) {
    Residues ra = reduceMod(a.coeffs(), p), rb = reduceMod(b.coeffs(), p);
    if (ra.empty() || rb.empty()) continue;
    return gcdDegreeMod(std::move(ra), std::move(rb), p) == 0;
  }
  return false;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  if (!a.isZero() && !b.isZero() && (a.degree() == 0 || b.degree() == 0 || coprimeByReduction(a, b)))
    return Poly::constant(1);
  while (!b.isZero()) {
    Poly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Poly::str(const std::string& var) const {
  if (isZero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    const bool unit = mag == 1;
    if (k == 0 || !unit) {
      out += mag.get_str();
      if (k > 0) out += "*";
    }
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace permclass
