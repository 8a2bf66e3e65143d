#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "degen/identities.hpp"

namespace degen {

/// Parameter grid for a batch of identity checks. Each identity expands over
/// the axes it uses; the others are left at their defaults.
struct SweepGrid {
  std::vector<IdentityId> identities;
  std::vector<unsigned> d{1, 3, 5};
  std::optional<std::vector<std::size_t>> chi;  // nullopt: every character mod d
  std::vector<Rational> lambda{Rational(0), Rational(1, 2), Rational(-2, 3), Rational(3)};
  std::vector<unsigned> w1{1, 3, 5};
  std::vector<unsigned> w2{1, 3, 5};
  std::vector<Rational> x{Rational(0), Rational(1), Rational(1, 2)};
  unsigned L = 8;
  std::vector<unsigned> n{1, 3, 5};
  std::vector<unsigned long> p{3, 5};
  unsigned N = 4;
  std::vector<std::vector<BigInt>> f{{BigInt(1)}, {BigInt(0), BigInt(1)}, {BigInt(0), BigInt(0), BigInt(1)},
                                     {BigInt(0), BigInt(2), BigInt(0), BigInt(1)}};
  std::optional<unsigned> fault_degree;
};

/// The default grid over every identity.
SweepGrid default_grid();

/// Expands the grid into parameter tuples in a fixed order: identity, d, chi,
/// lambda, w1, w2, x, n, p, f. padic_limit skips primes dividing d. Throws
/// std::invalid_argument for invalid axes (even d/w, out-of-range chi).
std::vector<IdentityParams> expand(const SweepGrid& grid);

/// Reference implementation: checks each tuple in order on the calling thread.
std::vector<IdentityReport> sweep_serial(const std::vector<IdentityParams>& tuples);

/// OpenMP kernel over tuples. Reports come back in tuple order; `workers` <= 0
/// uses the OpenMP default.
std::vector<IdentityReport> sweep_parallel(const std::vector<IdentityParams>& tuples, int workers = 0);

inline std::vector<IdentityReport> sweep(const SweepGrid& grid, int workers = 0) {
  return sweep_parallel(expand(grid), workers);
}

struct SweepSummary {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::optional<std::size_t> first_failed_report;
  bool all_hold() const { return failed == 0; }
};

SweepSummary summarize(const std::vector<IdentityReport>& reports);

}  // namespace degen
