#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "soficonv/rational.hpp"

namespace soficonv::spectrum {

/// f(n) by the recursion f(n) = sum of f((n - w)/b) over digits w in {0..d-1}
/// with w = n mod b, w <= n, and f(0) = 1. For (b, d) = (2, 3) this is
/// f(2m) = f(m) + f(m - 1), f(2m + 1) = f(m).
Integer stern(const Integer& n, int b = 2, int d = 3);

/// Bottom-up table of the (2, 3) function for 0 <= n < size.
class SternTable {
 public:
  explicit SternTable(std::uint64_t size);
  std::uint64_t size() const { return values_.size(); }
  std::uint64_t operator()(std::uint64_t n) const { return values_.at(n); }

 private:
  std::vector<std::uint64_t> values_;
};

/// n = 1^{a_s} 0^{a_{s-1}} ... 0^{a_1} 1^{a_0} in binary; a[0] counts the
/// trailing ones and may be zero, the other runs are positive.
struct RunDecomposition {
  std::vector<unsigned> a;
  std::size_t s() const { return a.empty() ? 0 : a.size() - 1; }
  /// a_1 .. a_s.
  std::vector<unsigned> quotients() const { return {a.begin() + (a.empty() ? 0 : 1), a.end()}; }
};

RunDecomposition binary_runs(std::uint64_t n);

/// q_s for [0; a_1, ..., a_s]: q_{-1} = 0, q_0 = 1, q_i = a_i q_{i-1} + q_{i-2}.
Integer cf_denominator(const std::vector<unsigned>& quotients);

/// Positive function on the integers, evaluated in floating point.
struct GrowthFunction {
  std::string name;
  std::function<double(std::uint64_t)> value;
};

/// stern (table-backed up to n_max), "n" (identity) or "nsin" (n^{1 + sin n}).
GrowthFunction growth_function(const std::string& name, std::uint64_t n_max = 1u << 16);

/// log f(n) / log n for n >= 2; throws NonPositiveValue when f(n) <= 0.
double growth_ratio(const GrowthFunction& f, std::uint64_t n);

struct Checkpoint {
  std::uint64_t N;
  std::uint64_t count;  // #S in [1, N)
};

/// Densities of a finite set observed at a finite horizon. The natural and
/// exponential densities are the extremes over the checkpoints (powers of two
/// in [sqrt N, N) and N itself); the *_at_horizon values use N only.
struct DensityProfile {
  std::uint64_t horizon = 0;
  std::uint64_t count = 0;
  Rational d_minus;
  Rational d_plus;
  double dexp_minus = 0;
  double dexp_plus = 0;
  Rational d_at_horizon;
  double dexp_at_horizon = 0;
  std::vector<Checkpoint> series;
};

/// Members must be sorted ascending.
DensityProfile density_profile(const std::vector<std::uint64_t>& members, std::uint64_t horizon);

double exponential_density(std::uint64_t count, std::uint64_t N);

struct LevelSet {
  std::vector<std::uint64_t> members;  // within [2, N)
  DensityProfile profile;
};

/// {n : alpha - eps <= log f(n) / log n <= alpha + eps} in [2, N).
LevelSet level_set(const GrowthFunction& f, double alpha, double eps, std::uint64_t N);

struct ProfilePoint {
  std::uint64_t n;
  double ratio;
};

/// (n, log f(n) / log n) for lo <= n < hi, lo >= 2.
std::vector<ProfilePoint> profile(const GrowthFunction& f, std::uint64_t lo, std::uint64_t hi);

/// Mean of ln f(n) over [2^{K-1}, 2^K) divided by ln 2^{K-1}, f the (2, 3) function.
double alpha0_estimate(int K);

enum class LyapunovMode { BinaryDrive, Levy };

LyapunovMode parse_lyapunov_mode(const std::string& text);
std::string lyapunov_mode_name(LyapunovMode mode);

struct LyapunovEstimate {
  std::size_t s = 0;
  double per_quotient = 0;  // log q_s / s
  double normalized = 0;    // log q_s / (s log 4)
};

/// binary_drive: the quotients are the run lengths of the binary expansion of
/// a random t in [1/2, 1). levy: the continued fraction of a random dyadic
/// rational with 16 s bits. Both use mt19937_64 seeded with seed.
LyapunovEstimate lyapunov_estimate(LyapunovMode mode, std::uint64_t seed, std::size_t s);

/// log q_s for explicit quotients, by a rescaled floating recurrence.
double log_cf_denominator(const std::vector<std::uint64_t>& quotients);

/// log3/log2 - alpha0 and log3/log2 - log2(golden ratio).
struct SpectrumEndpoints {
  double typical;
  double minimal;
};
SpectrumEndpoints spectrum_endpoints(double alpha0);

struct DensityTargets {
  double d_minus = 0;
  double d_plus = 0;
  double dexp_minus = 0;
  double dexp_plus = 0;
};

DensityTargets targets_from_profile(const DensityProfile& p);

/// Membership n in E_k, for k >= 1.
using Family = std::function<bool(int k, std::uint64_t n)>;

struct InterleaveResult {
  std::uint64_t horizon = 0;
  std::vector<std::uint64_t> cuts;  // N_1 = 1 < N_2 < ...
  std::vector<std::uint64_t> members;
  /// +1 when the sampled family grows with k, -1 when it shrinks, 0 if constant on samples.
  int direction = 0;
  /// Inequality that prevented the next cut below the horizon.
  std::string stop_reason;
};

/// E = union of E_k in [N_k, N_{k+1}). Each N_{k+1} is the least N >= 2 N_k
/// below the horizon at which the density inequalities for E_k and E_{k+1}
/// hold with slack 1/k. Throws NotMonotone when a sampled pair of sets is not
/// nested, NoCutPoint when not even N_2 exists.
InterleaveResult interleave(const Family& family, const std::function<DensityTargets(int)>& targets,
                            std::uint64_t horizon, int max_k = 64);

}  // namespace soficonv::spectrum
