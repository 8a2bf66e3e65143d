#include "degen/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "degen/int_polynomial.hpp"

namespace degen {

struct CyclotomicField {
  unsigned order;
  std::size_t degree;
  const IntPolynomial* modulus;
  // fold[j] = x^(degree + j) mod Phi_m, for j in [0, degree - 1)
  std::vector<std::vector<BigInt>> fold;
};

namespace {

const CyclotomicField* field_for(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic field of order 0");
  static std::mutex mutex;
  static std::map<unsigned, CyclotomicField> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return &it->second;
  }
  const IntPolynomial& phi = cyclotomic_polynomial(m);
  CyclotomicField f{m, static_cast<std::size_t>(phi.degree()), &phi, {}};

  // x^deg = -(lower terms of Phi_m); multiply through by x for higher powers.
  std::vector<BigInt> cur(f.degree);
  for (std::size_t i = 0; i < f.degree; ++i) cur[i] = -phi[i];
  for (std::size_t j = 0; j + 1 < f.degree; ++j) {
    f.fold.push_back(cur);
    std::vector<BigInt> next(f.degree, BigInt(0));
    for (std::size_t i = 0; i + 1 < f.degree; ++i) next[i + 1] = cur[i];
    const BigInt top = cur[f.degree - 1];
    for (std::size_t i = 0; i < f.degree; ++i) next[i] -= top * phi[i];
    cur = std::move(next);
  }

  std::lock_guard lock(mutex);
  return &cache.emplace(m, std::move(f)).first->second;
}

// Reduce a polynomial in zeta of arbitrary length modulo Phi_m.
std::vector<Rational> reduce(const CyclotomicField& f, std::vector<Rational> c) {
  if (c.size() <= f.degree) {
    c.resize(f.degree);
    return c;
  }
  // Use zeta^m = 1 first so the fold table covers what remains.
  if (c.size() > f.order) {
    for (std::size_t i = f.order; i < c.size(); ++i) c[i % f.order] += c[i];
    c.resize(f.order);
  }
  std::vector<Rational> out(c.begin(), c.begin() + static_cast<long>(std::min(c.size(), f.degree)));
  out.resize(f.degree);
  for (std::size_t k = f.degree; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    const std::size_t j = k - f.degree;
    if (j < f.fold.size()) {
      for (std::size_t i = 0; i < f.degree; ++i)
        if (f.fold[j][i] != 0) out[i] += c[k] * Rational(f.fold[j][i]);
    } else {
      // Degree beyond 2*deg-2 only arises for m < length; push back through
      // the recurrence term by term.
      std::vector<Rational> tail(k + 1, Rational(0));
      tail[k] = c[k];
      for (std::size_t t = k; t >= f.degree; --t) {
        if (tail[t].is_zero()) continue;
        const Rational lead = tail[t];
        tail[t] = Rational(0);
        for (std::size_t i = 0; i < f.degree; ++i)
          tail[t - f.degree + i] -= lead * Rational((*f.modulus)[i]);
      }
      for (std::size_t i = 0; i < f.degree; ++i) out[i] += tail[i];
    }
  }
  return out;
}

// Rational polynomial helpers for the inverse (lowest degree first, trimmed).
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly r = a;
  if (q.empty() || b.empty()) return r;
  r.resize(std::max(a.size(), q.size() + b.size() - 1), Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  trim(r);
  return r;
}

QPoly quotient(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational factor = a.back() * lead_inv;
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

}  // namespace

Cyclotomic::Cyclotomic() : Cyclotomic(Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& r) : field_(field_for(1)), coeffs_{r} {}

Cyclotomic Cyclotomic::zero(unsigned order) {
  const CyclotomicField* f = field_for(order);
  return Cyclotomic(f, std::vector<Rational>(f->degree, Rational(0)));
}

Cyclotomic Cyclotomic::from_rational(unsigned order, const Rational& r) {
  Cyclotomic z = zero(order);
  z.coeffs_[0] = r;
  return z;
}

Cyclotomic Cyclotomic::from_polynomial(unsigned order, std::vector<Rational> coefficients) {
  const CyclotomicField* f = field_for(order);
  return Cyclotomic(f, reduce(*f, std::move(coefficients)));
}

Cyclotomic Cyclotomic::from_coefficients(unsigned order, std::vector<Rational> coefficients) {
  const CyclotomicField* f = field_for(order);
  if (coefficients.size() != f->degree)
    throw std::invalid_argument("coefficient vector length must equal phi(order)");
  return Cyclotomic(f, std::move(coefficients));
}

unsigned Cyclotomic::order() const { return field_->order; }

Cyclotomic Cyclotomic::embed(unsigned multiple) const {
  if (multiple == 0 || multiple % order() != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(order()) + ") into Q(zeta_" +
                                std::to_string(multiple) + ")");
  if (multiple == order()) return *this;
  const std::size_t step = multiple / order();
  std::vector<Rational> c((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return from_polynomial(multiple, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
  if (is_rational()) return from_rational(order(), coeffs_[0].inverse());

  // Extended Euclid in Q[x]: s * a == gcd (mod Phi_m), gcd a nonzero constant.
  QPoly r0;
  for (const auto& c : field_->modulus->coefficients()) r0.emplace_back(c);
  QPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (!r1.empty()) {
    const QPoly q = quotient(r0, r1);
    QPoly r2 = sub_mul(r0, q, r1);
    QPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: nontrivial gcd");
  const Rational scale = r0[0].inverse();
  for (auto& c : s0) c *= scale;
  return from_polynomial(order(), std::move(s0));
}

Cyclotomic Cyclotomic::pow(unsigned long exponent) const {
  Cyclotomic result = from_rational(order(), Rational(1));
  Cyclotomic base = *this;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::evaluate(std::span<const Rational> poly) const {
  Cyclotomic acc = zero(order());
  for (std::size_t i = poly.size(); i-- > 0;) {
    acc *= *this;
    acc += from_rational(order(), poly[i]);
  }
  return acc;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << coeffs_[i];
      continue;
    }
    if (coeffs_[i] != Rational(1)) os << "(" << coeffs_[i] << ")*";
    os << "z" << order();
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (order() != o.order()) {
    const unsigned l = std::lcm(order(), o.order());
    *this = embed(l);
    return *this += o.embed(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (order() != o.order()) {
    const unsigned l = std::lcm(order(), o.order());
    *this = embed(l);
    return *this -= o.embed(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (order() != o.order()) {
    if (o.order() <= 2) return *this *= o.coeffs_[0];
    if (order() <= 2) {
      const Rational r = coeffs_[0];
      *this = o;
      return *this *= r;
    }
    const unsigned l = std::lcm(order(), o.order());
    *this = embed(l);
    return *this *= o.embed(l);
  }
  if (field_->degree == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * field_->degree - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      if (!o.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = reduce(*field_, std::move(prod));
  return *this;
}

Cyclotomic operator-(Cyclotomic a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
  const unsigned l = std::lcm(a.order(), b.order());
  return a.embed(l).coeffs_ == b.embed(l).coeffs_;
}

Cyclotomic root_of_unity(unsigned m, long k) {
  const long mm = static_cast<long>(m);
  const long e = ((k % mm) + mm) % mm;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = Rational(1);
  return Cyclotomic::from_polynomial(m, std::move(c));
}

}  // namespace degen
