#include "degen/sweep.hpp"

#include <exception>
#include <stdexcept>

#include <omp.h>

namespace degen {

SweepGrid default_grid() {
  SweepGrid g;
  g.identities = all_identities();
  return g;
}

namespace {

bool uses(IdentityId id, char axis) {
  switch (axis) {
    case 'w':  // w1
      return id == IdentityId::thm1 || id == IdentityId::thm2 || id == IdentityId::i_series_consistency ||
             id == IdentityId::corollary_w2_1 || id == IdentityId::corollary_x0;
    case 'v':  // w2
      return id == IdentityId::thm1 || id == IdentityId::thm2 || id == IdentityId::i_series_consistency;
    case 'x':
      return id == IdentityId::thm1 || id == IdentityId::thm2 || id == IdentityId::i_series_consistency ||
             id == IdentityId::corollary_w2_1 || id == IdentityId::dual_oracle || id == IdentityId::distribution;
    case 'l':  // lambda
      return id != IdentityId::padic_limit;
    case 'n':
      return id == IdentityId::eq18;
    case 'p':
      return id == IdentityId::padic_limit;
    default:
      return false;
  }
}

template <class T>
std::vector<T> axis_or_default(bool used, const std::vector<T>& values, T fallback) {
  if (used) return values;
  return {fallback};
}

}  // namespace

std::vector<IdentityParams> expand(const SweepGrid& grid) {
  std::vector<IdentityParams> out;
  for (IdentityId id : grid.identities) {
    const auto lambdas = axis_or_default(uses(id, 'l'), grid.lambda, Rational(0));
    const auto w1s = axis_or_default(uses(id, 'w'), grid.w1, 1u);
    const auto w2s = axis_or_default(uses(id, 'v'), grid.w2, 1u);
    const auto xs = axis_or_default(uses(id, 'x'), grid.x, Rational(0));
    const auto ns = axis_or_default(uses(id, 'n'), grid.n, 1u);
    const auto ps = axis_or_default(uses(id, 'p'), grid.p, 3ul);
    const auto fs = axis_or_default(uses(id, 'p'), grid.f, std::vector<BigInt>{BigInt(0), BigInt(1)});

    for (unsigned d : grid.d) {
      if (d == 0 || d % 2 == 0) throw std::invalid_argument("grid modulus must be odd: " + std::to_string(d));
      std::vector<std::size_t> chis;
      if (grid.chi) chis = *grid.chi;
      else
        for (std::size_t i = 0; i < characters_mod(d).size(); ++i) chis.push_back(i);

      for (std::size_t chi : chis)
        for (const Rational& lambda : lambdas)
          for (unsigned w1 : w1s)
            for (unsigned w2 : w2s)
              for (const Rational& x : xs)
                for (unsigned n : ns)
                  for (unsigned long p : ps) {
                    if (id == IdentityId::padic_limit && d % p == 0) continue;
                    for (const auto& f : fs) {
                      IdentityParams params;
                      params.id = id;
                      params.d = d;
                      params.chi = chi;
                      params.lambda = lambda;
                      params.w1 = w1;
                      params.w2 = w2;
                      params.x = x;
                      params.L = grid.L;
                      params.n = n;
                      params.p = p;
                      params.N = grid.N;
                      params.f = f;
                      params.fault_degree = grid.fault_degree;
                      validate(params);
                      out.push_back(std::move(params));
                    }
                  }
    }
  }
  return out;
}

std::vector<IdentityReport> sweep_serial(const std::vector<IdentityParams>& tuples) {
  std::vector<IdentityReport> reports;
  reports.reserve(tuples.size());
  for (const auto& t : tuples) reports.push_back(check(t));
  return reports;
}

std::vector<IdentityReport> sweep_parallel(const std::vector<IdentityParams>& tuples, int workers) {
  std::vector<IdentityReport> reports(tuples.size());
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto count = static_cast<long>(tuples.size());
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      reports[static_cast<std::size_t>(i)] = check(tuples[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(degen_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return reports;
}

SweepSummary summarize(const std::vector<IdentityReport>& reports) {
  SweepSummary s;
  s.total = reports.size();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].holds) continue;
    ++s.failed;
    if (!s.first_failed_report) s.first_failed_report = i;
  }
  return s;
}

}  // namespace degen
