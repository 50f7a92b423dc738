#include "vanish/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "vanish/numtheory.hpp"
#include "vanish/error.hpp"

namespace vanish {

namespace {

std::vector<long long> exact_divide(std::vector<long long> num, const std::vector<long long>& den) {
  // den is monic
  const auto dn = den.size() - 1;
  std::vector<long long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const auto t = num[i];
    q[i - dn] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= t * den[j];
  }
  return q;
}

/// Solves A x = b over Q for a full-column-rank A; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const auto rows = a.size();
  const auto cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[row][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
      b[r] -= f * b[row];
    }
    pivots.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (b[r] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r] / a[r][pivots[r]];
  return x;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<long long>> cache;
  if (n == 0) throw Error("cyclotomic polynomial of order 0");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (auto d : divisors(n))
    if (d < n) poly = exact_divide(std::move(poly), cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

// GMP arithmetic assumes canonical operands; callers may hand us e.g. 8/4.
static Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

Cyc::Cyc() : coeffs_{Rational(0)} {}
Cyc::Cyc(long long n) : coeffs_{Rational(static_cast<long>(n))} {}
Cyc::Cyc(const Rational& q) : coeffs_{canonical(q)} {}

Cyc Cyc::from_powers(std::size_t e, const std::vector<Rational>& coeffs) {
  if (e == 0) throw Error("conductor must be positive");
  const auto& phi_poly = cyclotomic_polynomial(e);
  const auto phi = phi_poly.size() - 1;
  std::vector<Rational> acc(std::max(e, phi), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) acc[k % e] += canonical(coeffs[k]);
  for (std::size_t i = acc.size(); i-- > phi;) {
    if (acc[i] == 0) continue;
    const Rational t = acc[i];
    for (std::size_t j = 0; j <= phi; ++j)
      if (phi_poly[j] != 0) acc[i - phi + j] -= t * static_cast<long>(phi_poly[j]);
  }
  acc.resize(phi);
  Cyc out;
  out.conductor_ = e;
  out.coeffs_ = std::move(acc);
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> Cyc::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

std::optional<Integer> Cyc::as_integer() const {
  auto q = as_rational();
  if (!q || q->get_den() != 1) return std::nullopt;
  return Integer(q->get_num());
}

Cyc Cyc::lifted(std::size_t m) const {
  if (m % conductor_ != 0) throw Error("lift: conductor does not divide target");
  if (m == conductor_) return *this;
  const auto step = m / conductor_;
  std::vector<Rational> poly(m, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[(i * step) % m] += coeffs_[i];
  return from_powers(m, poly);
}

Cyc Cyc::reduced() const {
  if (auto q = as_rational()) return Cyc(*q);
  const auto e = conductor_;
  for (auto d : divisors(e)) {
    if (d == 1 || d == e) continue;
    if (d % 4 == 2) continue;  // Q(zeta_d) = Q(zeta_{d/2})
    const auto phi_d = euler_phi(d);
    // column i = zeta_d^i written in the basis of Q(zeta_e)
    std::vector<std::vector<Rational>> a(coeffs_.size(), std::vector<Rational>(phi_d, Rational(0)));
    for (std::size_t i = 0; i < phi_d; ++i) {
      std::vector<Rational> poly(e, Rational(0));
      poly[(i * (e / d)) % e] = 1;
      const auto col = from_powers(e, poly);
      for (std::size_t r = 0; r < col.coeffs_.size(); ++r) a[r][i] = col.coeffs_[r];
    }
    if (auto x = solve(std::move(a), coeffs_)) {
      Cyc out;
      out.conductor_ = d;
      out.coeffs_ = std::move(*x);
      return out;
    }
  }
  return *this;
}

Cyc Cyc::galois(long long k) const {
  const auto e = static_cast<long long>(conductor_);
  if (std::gcd(((k % e) + e) % e, e) != 1 && e != 1) throw Error("galois: exponent not coprime to conductor");
  std::vector<Rational> poly(conductor_, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto idx = ((static_cast<long long>(i) * k) % e + e) % e;
    poly[static_cast<std::size_t>(idx)] += coeffs_[i];
  }
  return from_powers(conductor_, poly);
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& b) {
  const auto m = std::lcm(conductor_, b.conductor_);
  if (m != conductor_) *this = lifted(m);
  const Cyc& bb = b.conductor_ == m ? b : b.lifted(m);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += bb.coeffs_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& b) { return *this += -b; }

Cyc& Cyc::operator*=(const Cyc& b) {
  const auto m = std::lcm(conductor_, b.conductor_);
  const Cyc aa = conductor_ == m ? *this : lifted(m);
  const Cyc bb = b.conductor_ == m ? b : b.lifted(m);
  if (auto q = bb.as_rational()) {
    *this = aa.scaled(*q);
    return *this;
  }
  if (auto q = aa.as_rational()) {
    *this = bb.scaled(*q);
    return *this;
  }
  std::vector<Rational> conv(aa.coeffs_.size() + bb.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < aa.coeffs_.size(); ++i) {
    if (aa.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < bb.coeffs_.size(); ++j)
      if (bb.coeffs_[j] != 0) conv[i + j] += aa.coeffs_[i] * bb.coeffs_[j];
  }
  *this = from_powers(m, conv);
  return *this;
}

Cyc Cyc::scaled(const Rational& q) const {
  Cyc out = *this;
  const auto r = canonical(q);
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const auto m = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

std::strong_ordering compare(const Cyc& a, const Cyc& b) {
  const auto ra = a.reduced();
  const auto rb = b.reduced();
  if (auto c = ra.conductor_ <=> rb.conductor_; c != 0) return c;
  for (std::size_t i = 0; i < ra.coeffs_.size(); ++i) {
    const int c = cmp(ra.coeffs_[i], rb.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyc::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      out << (c < 0 ? "-" : "");
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Rational mag = abs(c);
    out << mag.get_str();
    if (i > 0) out << "*z(" << conductor_ << ")^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Cyc root_of_unity(std::size_t e, long long k) {
  if (e == 0) throw Error("root_of_unity: e must be positive");
  const auto ee = static_cast<long long>(e);
  std::vector<Rational> poly(e, Rational(0));
  poly[static_cast<std::size_t>(((k % ee) + ee) % ee)] = 1;
  return Cyc::from_powers(e, poly);
}

Cyc add(const Cyc& a, const Cyc& b) { return a + b; }
Cyc mul(const Cyc& a, const Cyc& b) { return a * b; }
Cyc neg(const Cyc& a) { return -a; }
Cyc conj(const Cyc& a) { return a.conj(); }
bool is_zero(const Cyc& a) { return a.is_zero(); }
std::optional<Integer> is_rational_integer(const Cyc& a) { return a.as_integer(); }

}  // namespace vanish
