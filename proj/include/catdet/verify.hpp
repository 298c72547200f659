#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "catdet/boundary.hpp"
#include "catdet/catalan.hpp"
#include "catdet/combinat.hpp"
#include "catdet/io.hpp"
#include "catdet/lattice.hpp"
#include "catdet/matrix.hpp"
#include "catdet/pascal.hpp"
#include "catdet/series.hpp"

namespace catdet {

// -- reports ------------------------------------------------------------------

/// One counterexample from a sweep: the parameter point plus both sides of
/// the disagreement, everything already rendered as decimal strings.
struct VerificationFailure {
  std::vector<std::pair<std::string, std::string>> params;
  std::string expected;
  std::string actual;
};

/// The outcome of sweeping one identity over a parameter grid.
struct VerificationReport {
  std::string identity_id;
  std::vector<std::pair<std::string, std::string>> swept_ranges;
  long long checked = 0;
  std::vector<VerificationFailure> failures;

  bool passed() const { return failures.empty(); }

  json to_json() const {
    json j;
    j["identity_id"] = identity_id;
    j["status"] = passed() ? "pass" : "fail";
    json ranges = json::object();
    for (const auto& [key, value] : swept_ranges) ranges[key] = value;
    j["swept_ranges"] = std::move(ranges);
    j["checked"] = std::to_string(checked);
    json fails = json::array();
    for (const VerificationFailure& f : failures) {
      json entry;
      json params = json::object();
      for (const auto& [key, value] : f.params) params[key] = value;
      entry["params"] = std::move(params);
      entry["expected"] = f.expected;
      entry["actual"] = f.actual;
      fails.push_back(std::move(entry));
    }
    j["failures"] = std::move(fails);
    return j;
  }
};

inline VerificationFailure make_failure(std::vector<std::pair<std::string, std::string>> params,
                                        const ExactInt& expected, const ExactInt& actual) {
  return VerificationFailure{std::move(params), to_decimal(expected), to_decimal(actual)};
}

// -- deterministic parallelism --------------------------------------------------

/// Worker cap: CATDET_THREADS when set (anything unparsable or < 1 falls back
/// to 1), otherwise the hardware count.
inline unsigned worker_count() {
  if (const char* env = std::getenv("CATDET_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1)
      return static_cast<unsigned>(std::min<long>(value, 256));
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Run fn(0) .. fn(count-1) across a small thread pool. Tasks are claimed
/// from a shared counter; callers keep results deterministic by writing into
/// per-index slots and merging afterwards. The first exception wins, stops
/// the pool claiming further work, and is rethrown on the calling thread.
template <typename Fn>
void run_indexed_tasks(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(count, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

/// Merge per-index failure slots back into grid order so the report does not
/// depend on thread scheduling.
inline std::vector<VerificationFailure> merge_slots(
    std::vector<std::vector<VerificationFailure>>& slots) {
  std::vector<VerificationFailure> merged;
  for (auto& slot : slots)
    for (VerificationFailure& f : slot) merged.push_back(std::move(f));
  return merged;
}

// -- reproducible randomness ------------------------------------------------------

/// Per-trial seed derived from the sweep seed by a splitmix64 round, so
/// trial i sees the same stream no matter how trials are scheduled.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform-ish draw in [lo, hi] by reduction. The slight modulo bias is
/// irrelevant here and, unlike std::uniform_int_distribution, the stream is
/// identical on every implementation.
inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// Random valid boundaries: lower heights sorted in [0,5], upper = lower +
/// increments in [0,5] re-sorted and repaired pointwise, so heights stay in
/// [0,10]. The repair takes a max of two nondecreasing sequences, which is
/// again nondecreasing, so the construction cannot produce an invalid pair.
inline BoundaryPair random_boundary_pair(std::mt19937_64& rng, long long n_max = 8) {
  const long long n = draw(rng, 1, n_max);
  std::vector<long long> lower(static_cast<std::size_t>(n));
  for (long long& v : lower) v = draw(rng, 0, 5);
  std::sort(lower.begin(), lower.end());
  std::vector<long long> upper(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < upper.size(); ++i) upper[i] = lower[i] + draw(rng, 0, 5);
  std::sort(upper.begin(), upper.end());
  for (std::size_t i = 0; i < upper.size(); ++i) upper[i] = std::max(upper[i], lower[i]);
  return BoundaryPair(std::move(upper), std::move(lower));
}

/// Random upper Hessenberg matrix with entries in [-9, 9] on and above the
/// subdiagonal.
inline HessenbergMatrix random_hessenberg(std::mt19937_64& rng, long long n_max = 12) {
  const long long n = draw(rng, 1, n_max);
  std::vector<ExactInt> entries(static_cast<std::size_t>(n * n));
  for (long long i = 0; i < n; ++i)
    for (long long j = std::max<long long>(0, i - 1); j < n; ++j)
      entries[static_cast<std::size_t>(i * n + j)] = draw(rng, -9, 9);
  return HessenbergMatrix(static_cast<std::size_t>(n), std::move(entries));
}

/// Random series with constant term 1 and the rest in [-9, 9].
inline TruncatedSeries random_unit_series(std::mt19937_64& rng, long long order_max = 30) {
  const long long order = draw(rng, 0, order_max);
  std::vector<ExactInt> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = 1;
  for (std::size_t k = 1; k < coeffs.size(); ++k) coeffs[k] = draw(rng, -9, 9);
  return TruncatedSeries(std::move(coeffs));
}

inline std::string join_heights(const std::vector<long long>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i == 0 ? "" : ",") << values[i];
  return out.str();
}

// -- identity sweeps ----------------------------------------------------------

/// Catalan numbers out of the deformed-Pascal determinant vs. the closed
/// form, n = 1..n_max.
inline VerificationReport verify_thm1(long long n_max = 30) {
  if (n_max < 1) throw std::invalid_argument("verify thm1: --n-max must be >= 1");
  VerificationReport report;
  report.identity_id = "thm1";
  report.swept_ranges = {{"n", "1.." + std::to_string(n_max)}};
  report.checked = n_max;
  std::vector<std::vector<VerificationFailure>> slots(static_cast<std::size_t>(n_max));
  run_indexed_tasks(slots.size(), [&](std::size_t i) {
    const long long n = static_cast<long long>(i) + 1;
    const ExactInt expected = catalan_closed(n);
    const ExactInt actual = catalan_det(n);
    if (actual != expected)
      slots[i].push_back(make_failure({{"n", std::to_string(n)}}, expected, actual));
  });
  report.failures = merge_slots(slots);
  return report;
}

/// Catalan numbers out of the alternating self-convolution vs. the closed
/// form, n = 1..n_max, computed in one prefix pass.
inline VerificationReport verify_thm2(long long n_max = 500) {
  if (n_max < 1) throw std::invalid_argument("verify thm2: --n-max must be >= 1");
  VerificationReport report;
  report.identity_id = "thm2";
  report.swept_ranges = {{"n", "1.." + std::to_string(n_max)}};
  report.checked = n_max;
  const std::vector<ExactInt> prefix = catalan_mingantu_prefix(n_max);
  for (long long n = 1; n <= n_max; ++n) {
    const ExactInt expected = catalan_closed(n);
    const ExactInt& actual = prefix[static_cast<std::size_t>(n)];
    if (actual != expected)
      report.failures.push_back(make_failure({{"n", std::to_string(n)}}, expected, actual));
  }
  return report;
}

/// Path counts: determinant vs. dynamic programming on seeded random
/// boundaries, plus the staircase specialization against the Catalan closed
/// form for n = 1..25.
inline VerificationReport verify_thm3(long long trials = 200, long long n_max = 8,
                                      std::uint64_t seed = 42) {
  if (trials < 1) throw std::invalid_argument("verify thm3: --trials must be >= 1");
  if (n_max < 1) throw std::invalid_argument("verify thm3: --n-max must be >= 1");
  constexpr long long kDyckMax = 25;
  VerificationReport report;
  report.identity_id = "thm3";
  report.swept_ranges = {{"trials", std::to_string(trials)},
                         {"n", "1.." + std::to_string(n_max)},
                         {"seed", std::to_string(seed)},
                         {"dyck_n", "1.." + std::to_string(kDyckMax)}};
  report.checked = trials + kDyckMax;
  std::vector<std::vector<VerificationFailure>> slots(static_cast<std::size_t>(trials + kDyckMax));
  run_indexed_tasks(slots.size(), [&](std::size_t i) {
    if (i < static_cast<std::size_t>(trials)) {
      std::mt19937_64 rng(mix_seed(seed, i));
      const BoundaryPair bounds = random_boundary_pair(rng, n_max);
      const ExactInt expected = count_paths_dp(bounds);
      const ExactInt actual = count_paths_det(bounds);
      if (actual != expected)
        slots[i].push_back(make_failure({{"trial", std::to_string(i)},
                                         {"a", join_heights(bounds.upper())},
                                         {"b", join_heights(bounds.lower())}},
                                        expected, actual));
    } else {
      const long long n = static_cast<long long>(i - static_cast<std::size_t>(trials)) + 1;
      const ExactInt expected = catalan_closed(n);
      const ExactInt actual = count_dyck(n);
      if (actual != expected)
        slots[i].push_back(make_failure({{"dyck_n", std::to_string(n)}}, expected, actual));
    }
  });
  report.failures = merge_slots(slots);
  return report;
}

/// Principal minors of the C(n, .)-band Toeplitz-Hessenberg matrix against
/// the closed form C(n+k-1, k), over the full (n, k) grid.
inline VerificationReport verify_prop_a(long long n_max = 20, long long k_max = 40) {
  if (n_max < 1) throw std::invalid_argument("verify prop_a: --n-max must be >= 1");
  if (k_max < 0) throw std::invalid_argument("verify prop_a: --k-max must be >= 0");
  VerificationReport report;
  report.identity_id = "prop_a";
  report.swept_ranges = {{"n", "1.." + std::to_string(n_max)},
                         {"k", "0.." + std::to_string(k_max)}};
  report.checked = n_max * (k_max + 1);
  std::vector<std::vector<VerificationFailure>> slots(static_cast<std::size_t>(n_max));
  run_indexed_tasks(slots.size(), [&](std::size_t i) {
    const long long n = static_cast<long long>(i) + 1;
    const auto minors =
        principal_minors(build_toeplitz_hessenberg(n, std::max<long long>(1, k_max)),
                         static_cast<std::size_t>(k_max));
    for (long long k = 0; k <= k_max; ++k) {
      const ExactInt expected = binomial(n + k - 1, k);
      const ExactInt& actual = minors[static_cast<std::size_t>(k)];
      if (actual != expected)
        slots[i].push_back(make_failure(
            {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, expected, actual));
    }
  });
  report.failures = merge_slots(slots);
  return report;
}

/// The same minor sequence read off the square Pascal table instead: the
/// minors of order 0..k_max must reproduce column n-1 of the table.
inline VerificationReport verify_prop_b(long long n_max = 12, long long k_max = 40) {
  if (n_max < 1) throw std::invalid_argument("verify prop_b: --n-max must be >= 1");
  if (k_max < 0) throw std::invalid_argument("verify prop_b: --k-max must be >= 0");
  VerificationReport report;
  report.identity_id = "prop_b";
  report.swept_ranges = {{"n", "1.." + std::to_string(n_max)},
                         {"k", "0.." + std::to_string(k_max)}};
  report.checked = n_max * (k_max + 1);
  std::vector<std::vector<VerificationFailure>> slots(static_cast<std::size_t>(n_max));
  run_indexed_tasks(slots.size(), [&](std::size_t i) {
    const long long n = static_cast<long long>(i) + 1;
    const auto minors =
        principal_minors(build_toeplitz_hessenberg(n, std::max<long long>(1, k_max)),
                         static_cast<std::size_t>(k_max));
    const auto column = pascal_table(static_cast<std::size_t>(k_max) + 1,
                                     static_cast<std::size_t>(n) - 1)
                            .highlighted();
    for (long long k = 0; k <= k_max; ++k) {
      const ExactInt& expected = column[static_cast<std::size_t>(k)];
      const ExactInt& actual = minors[static_cast<std::size_t>(k)];
      if (actual != expected)
        slots[i].push_back(make_failure(
            {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, expected, actual));
    }
  });
  report.failures = merge_slots(slots);
  return report;
}

/// The alternating convolution sum collapses to [k = 0] on the whole grid.
inline VerificationReport verify_prop_c(long long n_max = 20, long long k_max = 40) {
  if (n_max < 1) throw std::invalid_argument("verify prop_c: --n-max must be >= 1");
  if (k_max < 0) throw std::invalid_argument("verify prop_c: --k-max must be >= 0");
  VerificationReport report;
  report.identity_id = "prop_c";
  report.swept_ranges = {{"n", "1.." + std::to_string(n_max)},
                         {"k", "0.." + std::to_string(k_max)}};
  report.checked = n_max * (k_max + 1);
  std::vector<std::vector<VerificationFailure>> slots(static_cast<std::size_t>(n_max));
  run_indexed_tasks(slots.size(), [&](std::size_t i) {
    const long long n = static_cast<long long>(i) + 1;
    for (long long k = 0; k <= k_max; ++k) {
      const ExactInt expected = k == 0 ? 1 : 0;
      const ExactInt actual = verify_convolution_identity(n, k);
      if (actual != expected)
        slots[i].push_back(make_failure(
            {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, expected, actual));
    }
  });
  report.failures = merge_slots(slots);
  return report;
}

/// Recurrence value, closed form and determinant of the minor identity all
/// agree on the whole (n, m) grid.
inline VerificationReport verify_prop_d(long long n_max = 15, long long m_max = 40) {
  if (n_max < 1) throw std::invalid_argument("verify prop_d: --n-max must be >= 1");
  if (m_max < 0) throw std::invalid_argument("verify prop_d: --m-max must be >= 0");
  VerificationReport report;
  report.identity_id = "prop_d";
  report.swept_ranges = {{"n", "1.." + std::to_string(n_max)},
                         {"m", "0.." + std::to_string(m_max)}};
  report.checked = n_max * (m_max + 1);
  std::vector<std::vector<VerificationFailure>> slots(static_cast<std::size_t>(n_max));
  run_indexed_tasks(slots.size(), [&](std::size_t i) {
    const long long n = static_cast<long long>(i) + 1;
    for (long long m = 0; m <= m_max; ++m) {
      const RecurrenceIdentity r = verify_recurrence_identity(n, m);
      if (r.consistent()) continue;
      const std::string& which = r.lhs_recurrence != r.rhs_closed ? "lhs_recurrence" : "det_value";
      slots[i].push_back(make_failure({{"n", std::to_string(n)},
                                       {"m", std::to_string(m)},
                                       {"field", which}},
                                      r.rhs_closed,
                                      which == "lhs_recurrence" ? r.lhs_recurrence : r.det_value));
    }
  });
  report.failures = merge_slots(slots);
  return report;
}

/// Reciprocal engine: random unit-constant series times their reciprocals
/// give 1, and the three routes to the reciprocal of (1+x)^n agree
/// coefficientwise.
inline VerificationReport verify_recip(long long trials = 100, std::uint64_t seed = 42,
                                       long long order_max = 30, long long n_max = 12,
                                       long long k_max = 50) {
  if (trials < 1) throw std::invalid_argument("verify recip: --trials must be >= 1");
  if (order_max < 0) throw std::invalid_argument("verify recip: --m-max must be >= 0");
  if (n_max < 1) throw std::invalid_argument("verify recip: --n-max must be >= 1");
  if (k_max < 0) throw std::invalid_argument("verify recip: --k-max must be >= 0");
  VerificationReport report;
  report.identity_id = "recip";
  report.swept_ranges = {{"trials", std::to_string(trials)},
                         {"order", "0.." + std::to_string(order_max)},
                         {"seed", std::to_string(seed)},
                         {"n", "1.." + std::to_string(n_max)},
                         {"k", "0.." + std::to_string(k_max)}};
  report.checked = trials + n_max * (k_max + 1);
  std::vector<std::vector<VerificationFailure>> slots(
      static_cast<std::size_t>(trials + n_max));
  run_indexed_tasks(slots.size(), [&](std::size_t i) {
    if (i < static_cast<std::size_t>(trials)) {
      std::mt19937_64 rng(mix_seed(seed, i));
      const TruncatedSeries f = random_unit_series(rng, order_max);
      const TruncatedSeries product = convolve(f, reciprocal(f, f.order()), f.order());
      for (std::size_t k = 0; k <= f.order(); ++k) {
        const ExactInt expected = k == 0 ? 1 : 0;
        if (product.coeff(k) != expected) {
          slots[i].push_back(make_failure({{"trial", std::to_string(i)},
                                           {"order", std::to_string(f.order())},
                                           {"k", std::to_string(k)}},
                                          expected, product.coeff(k)));
          break;  // one counterexample per trial is plenty
        }
      }
    } else {
      const long long n = static_cast<long long>(i - static_cast<std::size_t>(trials)) + 1;
      const std::size_t order = static_cast<std::size_t>(k_max);
      const TruncatedSeries by_division = reciprocal(binomial_power(n, order), order);
      const TruncatedSeries by_minors = reciprocal_via_minors(n, order);
      for (long long k = 0; k <= k_max; ++k) {
        ExactInt closed = binomial(n + k - 1, k);
        if (k % 2 == 1) closed = -closed;
        const ExactInt& division_k = by_division.coeff(static_cast<std::size_t>(k));
        const ExactInt& minors_k = by_minors.coeff(static_cast<std::size_t>(k));
        if (division_k != closed || minors_k != closed) {
          const bool division_bad = division_k != closed;
          slots[i].push_back(
              make_failure({{"n", std::to_string(n)},
                            {"k", std::to_string(k)},
                            {"route", division_bad ? "reciprocal" : "reciprocal_via_minors"}},
                           closed, division_bad ? division_k : minors_k));
        }
      }
    }
  });
  report.failures = merge_slots(slots);
  return report;
}

// -- dispatch -------------------------------------------------------------------

/// Range overrides for run_verification; -1 means "use the identity's
/// documented default".
struct VerifyOptions {
  long long n_max = -1;
  long long k_max = -1;
  long long m_max = -1;
  long long trials = -1;
  std::uint64_t seed = 42;
};

inline VerificationReport run_verification(const std::string& identity,
                                           const VerifyOptions& opt = {}) {
  const auto pick = [](long long value, long long fallback) {
    return value >= 0 ? value : fallback;
  };
  if (identity == "thm1") return verify_thm1(pick(opt.n_max, 30));
  if (identity == "thm2") return verify_thm2(pick(opt.n_max, 500));
  if (identity == "thm3")
    return verify_thm3(pick(opt.trials, 200), pick(opt.n_max, 8), opt.seed);
  if (identity == "prop_a") return verify_prop_a(pick(opt.n_max, 20), pick(opt.k_max, 40));
  if (identity == "prop_b") return verify_prop_b(pick(opt.n_max, 12), pick(opt.k_max, 40));
  if (identity == "prop_c") return verify_prop_c(pick(opt.n_max, 20), pick(opt.k_max, 40));
  if (identity == "prop_d") return verify_prop_d(pick(opt.n_max, 15), pick(opt.m_max, 40));
  if (identity == "recip")
    return verify_recip(pick(opt.trials, 100), opt.seed, pick(opt.m_max, 30),
                        pick(opt.n_max, 12), pick(opt.k_max, 50));
  throw std::invalid_argument(
      "unknown identity \"" + identity +
      "\" (expected one of thm1, thm2, thm3, prop_a, prop_b, prop_c, prop_d, recip)");
}

}  // namespace catdet
