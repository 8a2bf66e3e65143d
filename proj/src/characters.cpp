#include "degen/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace degen {

namespace {

unsigned multiplicative_order(unsigned g, unsigned modulus) {
  unsigned long x = g % modulus;
  for (unsigned k = 1; k <= modulus; ++k) {
    if (x == 1 % modulus) return k;
    x = (x * g) % modulus;
  }
  return 0;
}

}  // namespace

UnitGroupStructure unit_group(unsigned d) {
  if (d == 0 || d % 2 == 0) throw std::invalid_argument("unit_group needs an odd positive modulus, got " + std::to_string(d));
  UnitGroupStructure group{d, {}};
  unsigned rest = d;
  for (unsigned q = 3; rest > 1; q += 2) {
    if (rest % q != 0) continue;
    CyclicFactor f{q, 0, 1, 0, 0, {}};
    while (rest % q == 0) {
      rest /= q;
      ++f.exponent;
      f.prime_power *= q;
    }
    f.order = f.prime_power / q * (q - 1);
    for (unsigned g = 2; g < f.prime_power; ++g) {
      if (g % q == 0) continue;
      if (multiplicative_order(g, f.prime_power) == f.order) {
        f.generator = g;
        break;
      }
    }
    if (f.generator == 0) throw std::logic_error("no primitive root found mod " + std::to_string(f.prime_power));

    f.discrete_log.assign(f.prime_power, 0);
    unsigned long x = 1;
    for (unsigned k = 0; k < f.order; ++k) {
      f.discrete_log[x] = k;
      x = (x * f.generator) % f.prime_power;
    }
    group.factors.push_back(std::move(f));
  }
  return group;
}

DirichletCharacter::DirichletCharacter(const UnitGroupStructure& group, std::vector<unsigned> exponents,
                                       std::size_t index)
    : modulus_(group.modulus), exponents_(std::move(exponents)), index_(index), order_(1) {
  if (exponents_.size() != group.factors.size())
    throw std::invalid_argument("exponent vector does not match the unit group");
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const CyclicFactor& f = group.factors[i];
    if (exponents_[i] >= f.order) throw std::invalid_argument("character exponent out of range");
    order_ = std::lcm(order_, f.order / std::gcd(exponents_[i], f.order));
  }

  values_.reserve(modulus_);
  if (modulus_ == 1) {
    values_.push_back(Cyclotomic::from_rational(1, Rational(1)));
    return;
  }
  for (unsigned n = 0; n < modulus_; ++n) {
    if (std::gcd(n, modulus_) != 1) {
      values_.push_back(Cyclotomic::zero(order_));
      continue;
    }
    unsigned long e = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      const CyclicFactor& f = group.factors[i];
      // k_i * order / phi_i is integral because phi_i / gcd(k_i, phi_i) divides order.
      const unsigned long scale = static_cast<unsigned long>(exponents_[i]) * order_ / f.order;
      e += scale * f.discrete_log[n % f.prime_power];
    }
    values_.push_back(root_of_unity(order_, static_cast<long>(e % order_)));
  }
}

const Cyclotomic& DirichletCharacter::operator()(long n) const {
  const long d = static_cast<long>(modulus_);
  return values_[static_cast<std::size_t>(((n % d) + d) % d)];
}

std::vector<DirichletCharacter> enumerate_characters(unsigned d) {
  const UnitGroupStructure group = unit_group(d);
  std::size_t count = 1;
  for (const auto& f : group.factors) count *= f.order;

  std::vector<DirichletCharacter> chars;
  chars.reserve(count);
  for (std::size_t index = 0; index < count; ++index) {
    std::vector<unsigned> exps(group.factors.size());
    std::size_t rem = index;
    for (std::size_t i = group.factors.size(); i-- > 0;) {
      exps[i] = static_cast<unsigned>(rem % group.factors[i].order);
      rem /= group.factors[i].order;
    }
    chars.emplace_back(group, std::move(exps), index);
  }
  return chars;
}

const std::vector<DirichletCharacter>& characters_mod(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<DirichletCharacter>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, enumerate_characters(d)).first;
  return it->second;
}

const DirichletCharacter& character(unsigned d, std::size_t index) {
  const auto& chars = characters_mod(d);
  if (index >= chars.size())
    throw std::out_of_range("character index " + std::to_string(index) + " out of range for modulus " +
                            std::to_string(d) + " (" + std::to_string(chars.size()) + " characters)");
  return chars[index];
}

unsigned conductor(const DirichletCharacter& chi) {
  const unsigned d = chi.modulus();
  for (unsigned f = 1; f < d; ++f) {
    if (d % f != 0) continue;
    // chi must be constant on unit classes mod f
    std::vector<const Cyclotomic*> seen(f, nullptr);
    bool ok = true;
    for (unsigned a = 1; a < d && ok; ++a) {
      if (std::gcd(a, d) != 1) continue;
      const Cyclotomic*& slot = seen[a % f];
      if (slot == nullptr) slot = &chi(a);
      else ok = (*slot == chi(a));
    }
    if (ok) return f;
  }
  return d;
}

int parity(const DirichletCharacter& chi) {
  if (chi.modulus() == 1) return 1;
  const auto r = chi(static_cast<long>(chi.modulus()) - 1).to_rational();
  if (!r) throw std::logic_error("chi(-1) is not rational");
  return r->sign();
}

}  // namespace degen
