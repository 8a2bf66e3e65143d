#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/characters.hpp"
#include "degen/cyclotomic.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"
#include "degen/valuation.hpp"

namespace degen {

enum class IdentityId {
  thm1,
  thm2,
  eq18,
  corollary_w2_1,
  corollary_x0,
  dual_oracle,
  distribution,
  i_series_consistency,
  padic_limit,
};

std::string_view to_string(IdentityId id);
/// Accepts the canonical names above; "consistency" is an alias for
/// i_series_consistency.
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();

/// One parameter tuple for one identity. Fields an identity does not use are
/// ignored by its checker (and echoed unchanged in the report).
struct IdentityParams {
  IdentityId id = IdentityId::thm1;
  unsigned d = 1;
  std::size_t chi = 0;  // index in enumerate_characters(d)
  Rational lambda;
  unsigned w1 = 1;
  unsigned w2 = 1;
  Rational x;
  unsigned L = 8;  // degree bound
  unsigned n = 1;  // eq18 multiplier, odd
  unsigned long p = 3;
  unsigned N = 1;  // padic_limit: levels 1..N
  std::vector<BigInt> f{BigInt(0), BigInt(1)};  // padic_limit integrand, lowest degree first
  /// Negative control: perturb the RHS at this degree (sign flip; a zero RHS
  /// becomes 1) so the check must fail there.
  std::optional<unsigned> fault_degree;
};

/// Throws std::invalid_argument when d, w1, w2 (or n for eq18) are even,
/// the character index is out of range, or padic settings are invalid.
void validate(const IdentityParams& params);

struct ReportRow {
  unsigned n;
  Cyclotomic lhs;
  Cyclotomic rhs;
  bool equal;
  /// Third route, when an identity compares three computations.
  std::optional<Cyclotomic> aux;
  /// v_p(lhs - rhs) for padic_limit rows; equal means valuation >= level.
  std::optional<Valuation> valuation;
};

struct IdentityReport {
  IdentityParams params;
  bool holds = true;
  std::vector<ReportRow> rows;
  std::optional<unsigned> first_failure;
  std::string note;
  std::chrono::nanoseconds elapsed{0};
};

/// EGF of 2 I_chi(w1, w2 | lambda) from the closed form
///   4 ((1+lt)^{d w1 w2/l} + 1) (1+lt)^{w1 w2 x/l} S(w1) S(w2)
///     / (((1+lt)^{w1 d/l} + 1) ((1+lt)^{w2 d/l} + 1)),
/// S(w) = sum_{a<d} (-1)^a chi(a) (1+lt)^{w a/l}. Throws on even w1 or w2.
EgfSeries<Cyclotomic> double_i_series(unsigned w1, unsigned w2, const Rational& lambda, const Rational& x,
                                      const DirichletCharacter& chi, std::size_t truncation_order);

/// sum_i C(l,i) E_{i,lambda/wa,chi}(wb x) wa^i wb^(l-i) R_{l-i}(d wa - 1, lambda/wb | chi), l <= L.
std::vector<Cyclotomic> cauchy_product_side(const DirichletCharacter& chi, const Rational& lambda, unsigned wa,
                                            unsigned wb, const Rational& x, std::size_t L);

/// wa^n sum_{l < d wa} (-1)^l chi(l) E_{n,lambda/wa,chi}(wb x + (wb/wa) l), n <= L.
std::vector<Cyclotomic> character_sum_side(const DirichletCharacter& chi, const Rational& lambda, unsigned wa,
                                           unsigned wb, const Rational& x, std::size_t L);

IdentityReport check_thm1(const IdentityParams& params);
IdentityReport check_thm2(const IdentityParams& params);
IdentityReport check_eq18(const IdentityParams& params);
IdentityReport check_corollary_w2_1(const IdentityParams& params);
IdentityReport check_corollary_x0(const IdentityParams& params);
IdentityReport check_dual_oracle(const IdentityParams& params);
IdentityReport check_distribution(const IdentityParams& params);
IdentityReport check_consistency(const IdentityParams& params);
IdentityReport check_padic_limit(const IdentityParams& params);

/// Dispatches on params.id.
IdentityReport check(const IdentityParams& params);

}  // namespace degen
