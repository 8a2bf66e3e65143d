#include "degen/int_polynomial.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace degen {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = -1;
  c[n] += 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const BigInt mag = abs(c);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

IntDivision divide_monic(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const auto& dv = divisor.coefficients();
  if (dv.back() != 1) throw std::invalid_argument("divisor is not monic");

  std::vector<BigInt> rem = dividend.coefficients();
  const std::size_t ds = dv.size();
  if (rem.size() < ds) return {IntPolynomial(), dividend};

  std::vector<BigInt> quot(rem.size() - ds + 1, BigInt(0));
  for (std::size_t k = rem.size(); k-- >= ds;) {
    const BigInt lead = rem[k];
    if (lead == 0) continue;
    const std::size_t shift = k - (ds - 1);
    quot[shift] = lead;
    for (std::size_t j = 0; j < ds; ++j) rem[shift + j] -= lead * dv[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

const IntPolynomial& cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // Phi_m = (x^m - 1) / prod_{e | m, e < m} Phi_e
  IntPolynomial divisor(std::vector<BigInt>{BigInt(1)});
  for (unsigned e = 1; e < m; ++e)
    if (m % e == 0) divisor = divisor * cyclotomic_polynomial(e);
  IntDivision qr = divide_monic(IntPolynomial::x_pow_minus_one(m), divisor);
  if (!qr.remainder.is_zero()) throw std::logic_error("cyclotomic division left a remainder");

  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(qr.quotient)).first->second;
}

unsigned euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return static_cast<unsigned>(result);
}

}  // namespace degen
