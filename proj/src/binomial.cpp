#include "degen/binomial.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace degen {

namespace {

std::vector<std::vector<BigInt>> build_pascal() {
  std::vector<std::vector<BigInt>> rows(kPascalRows);
  for (unsigned n = 0; n < kPascalRows; ++n) {
    rows[n].assign(n + 1, BigInt(1));
    for (unsigned k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
  }
  return rows;
}

}  // namespace

const BigInt& binomial(unsigned n, unsigned k) {
  static const BigInt zero(0);
  if (k > n) return zero;
  static const auto pascal = build_pascal();
  if (n < kPascalRows) return pascal[n][k];

  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, BigInt> overflow;
  std::lock_guard lock(mutex);
  auto [it, inserted] = overflow.try_emplace({n, k});
  if (inserted) mpz_bin_uiui(it->second.get_mpz_t(), n, k);
  return it->second;
}

}  // namespace degen
