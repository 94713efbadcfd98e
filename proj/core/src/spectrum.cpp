#include "soficonv/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <random>

#include "soficonv/error.hpp"

namespace soficonv::spectrum {

namespace {

Integer stern_memo(const Integer& n, int b, int d, std::map<Integer, Integer>& memo) {
  if (n == 0) return Integer(1);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Integer total = 0;
  Integer r = n % b;
  for (Integer w = r; w <= d - 1 && w <= n; w += b) total += stern_memo((n - w) / b, b, d, memo);
  memo.emplace(n, total);
  return total;
}

// log of the denominator recurrence, rescaling to stay within double range.
double log_denominator(const std::vector<double>& quotients) {
  double prev = 0;  // q_{-1}
  double cur = 1;   // q_0
  double log_scale = 0;
  for (double a : quotients) {
    double next = a * cur + prev;
    prev = cur;
    cur = next;
    if (cur > 0x1p600) {
      prev = std::ldexp(prev, -600);
      cur = std::ldexp(cur, -600);
      log_scale += 600 * std::log(2.0);
    }
  }
  return std::log(cur) + log_scale;
}

}  // namespace

Integer stern(const Integer& n, int b, int d) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "stern needs n >= 0");
  if (b < 2 || d < b) throw Error(ErrorCode::InvalidArgument, "need d >= b >= 2");
  std::map<Integer, Integer> memo;
  return stern_memo(n, b, d, memo);
}

SternTable::SternTable(std::uint64_t size) : values_(std::max<std::uint64_t>(size, 1)) {
  values_[0] = 1;
  for (std::uint64_t n = 1; n < values_.size(); ++n) {
    values_[n] = (n % 2 == 0) ? values_[n / 2] + values_[n / 2 - 1] : values_[n / 2];
  }
}

RunDecomposition binary_runs(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "binary runs need n >= 1");
  RunDecomposition r;
  unsigned ones = 0;
  while (n & 1u) {
    ++ones;
    n >>= 1;
  }
  r.a.push_back(ones);
  unsigned bit = 0;
  while (n != 0) {
    unsigned run = 0;
    while (n != 0 && (n & 1u) == bit) {
      ++run;
      n >>= 1;
    }
    r.a.push_back(run);
    bit ^= 1u;
  }
  return r;
}

Integer cf_denominator(const std::vector<unsigned>& quotients) {
  Integer prev = 0;
  Integer cur = 1;
  for (unsigned a : quotients) {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "continued fraction quotients must be positive");
    Integer next = a * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

GrowthFunction growth_function(const std::string& name, std::uint64_t n_max) {
  if (name == "stern") {
    auto table = std::make_shared<SternTable>(n_max);
    return {name, [table](std::uint64_t n) {
              if (n < table->size()) return static_cast<double>((*table)(n));
              return stern(Integer(std::to_string(n))).get_d();
            }};
  }
  if (name == "n") return {name, [](std::uint64_t n) { return static_cast<double>(n); }};
  if (name == "nsin") {
    return {name, [](std::uint64_t n) {
              const double x = static_cast<double>(n);
              return std::pow(x, 1.0 + std::sin(x));
            }};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown function '" + name + "' (stern, n, nsin)");
}

double growth_ratio(const GrowthFunction& f, std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "ratios start at n = 2");
  const double v = f.value(n);
  if (!(v > 0)) {
    throw Error(ErrorCode::NonPositiveValue, f.name + "(" + std::to_string(n) + ") is not positive");
  }
  return std::log(v) / std::log(static_cast<double>(n));
}

double exponential_density(std::uint64_t count, std::uint64_t N) {
  if (count == 0 || N < 2) return 0;
  return std::log(static_cast<double>(count)) / std::log(static_cast<double>(N));
}

DensityProfile density_profile(const std::vector<std::uint64_t>& members, std::uint64_t horizon) {
  if (horizon == 0) throw Error(ErrorCode::InvalidArgument, "horizon must be positive");
  DensityProfile p;
  p.horizon = horizon;
  std::vector<std::uint64_t> checkpoints;
  std::uint64_t c = 1;
  while (c < horizon && c * c < horizon) c *= 2;
  for (; c < horizon; c *= 2) checkpoints.push_back(c);
  checkpoints.push_back(horizon);

  auto count_below = [&](std::uint64_t N) {
    auto lo = std::lower_bound(members.begin(), members.end(), std::uint64_t{1});
    auto hi = std::lower_bound(members.begin(), members.end(), N);
    return static_cast<std::uint64_t>(hi > lo ? hi - lo : 0);
  };
  bool first = true;
  for (std::uint64_t N : checkpoints) {
    const std::uint64_t k = count_below(N);
    p.series.push_back({N, k});
    Rational d(Integer(std::to_string(k)), Integer(std::to_string(N)));
    d.canonicalize();
    const double e = exponential_density(k, N);
    if (first) {
      p.d_minus = p.d_plus = d;
      p.dexp_minus = p.dexp_plus = e;
      first = false;
    } else {
      p.d_minus = std::min(p.d_minus, d);
      p.d_plus = std::max(p.d_plus, d);
      p.dexp_minus = std::min(p.dexp_minus, e);
      p.dexp_plus = std::max(p.dexp_plus, e);
    }
  }
  p.count = p.series.back().count;
  p.d_at_horizon = Rational(Integer(std::to_string(p.count)), Integer(std::to_string(horizon)));
  p.d_at_horizon.canonicalize();
  p.dexp_at_horizon = exponential_density(p.count, horizon);
  return p;
}

LevelSet level_set(const GrowthFunction& f, double alpha, double eps, std::uint64_t N) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  LevelSet ls;
  for (std::uint64_t n = 2; n < N; ++n) {
    const double r = growth_ratio(f, n);
    if (alpha - eps <= r && r <= alpha + eps) ls.members.push_back(n);
  }
  ls.profile = density_profile(ls.members, std::max<std::uint64_t>(N, 1));
  return ls;
}

std::vector<ProfilePoint> profile(const GrowthFunction& f, std::uint64_t lo, std::uint64_t hi) {
  if (lo < 2) throw Error(ErrorCode::InvalidArgument, "profile starts at n >= 2");
  std::vector<ProfilePoint> out;
  if (hi > lo) out.reserve(hi - lo);
  for (std::uint64_t n = lo; n < hi; ++n) out.push_back({n, growth_ratio(f, n)});
  return out;
}

double alpha0_estimate(int K) {
  if (K < 4 || K > 40) throw Error(ErrorCode::InvalidArgument, "alpha0 needs 4 <= K <= 40");
  const std::uint64_t lo = std::uint64_t{1} << (K - 1);
  const std::uint64_t hi = std::uint64_t{1} << K;
  SternTable table(hi);
  double total = 0;
  for (std::uint64_t n = lo; n < hi; ++n) total += std::log(static_cast<double>(table(n)));
  return total / (static_cast<double>(hi - lo) * std::log(static_cast<double>(lo)));
}

LyapunovMode parse_lyapunov_mode(const std::string& text) {
  if (text == "binary_drive" || text == "binary-drive") return LyapunovMode::BinaryDrive;
  if (text == "levy") return LyapunovMode::Levy;
  throw Error(ErrorCode::InvalidArgument, "unknown mode '" + text + "' (binary_drive, levy)");
}

std::string lyapunov_mode_name(LyapunovMode mode) {
  return mode == LyapunovMode::BinaryDrive ? "binary_drive" : "levy";
}

double log_cf_denominator(const std::vector<std::uint64_t>& quotients) {
  std::vector<double> q(quotients.begin(), quotients.end());
  for (double a : q)
    if (a <= 0) throw Error(ErrorCode::InvalidArgument, "continued fraction quotients must be positive");
  return log_denominator(q);
}

LyapunovEstimate lyapunov_estimate(LyapunovMode mode, std::uint64_t seed, std::size_t s) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "need at least one quotient");
  std::mt19937_64 gen(seed);
  std::vector<double> quotients;
  quotients.reserve(s);

  if (mode == LyapunovMode::BinaryDrive) {
    // t = 0.1^{a1} 0^{a2} 1^{a3} ... with fair bits after the leading 1.
    unsigned current = 1;
    double run = 1;
    std::uint64_t word = 0;
    int left = 0;
    while (quotients.size() < s) {
      if (left == 0) {
        word = gen();
        left = 64;
      }
      const unsigned bit = static_cast<unsigned>(word & 1u);
      word >>= 1;
      --left;
      if (bit == current) {
        run += 1;
      } else {
        quotients.push_back(run);
        current = bit;
        run = 1;
      }
    }
  } else {
    const std::size_t bits = 16 * s;
    Integer num = 0;
    while (num == 0) {
      for (std::size_t filled = 0; filled < bits; filled += 64) {
        num <<= 64;
        const std::uint64_t chunk = gen();
        Integer part = static_cast<unsigned long>(chunk >> 32);
        part <<= 32;
        part += static_cast<unsigned long>(chunk & 0xffffffffu);
        num += part;
      }
      num >>= (bits % 64 == 0 ? 0 : 64 - bits % 64);
    }
    Integer den = 1;
    den <<= bits;
    Integer q, r;
    while (quotients.size() < s && num != 0) {
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
      quotients.push_back(q.get_d());
      den = num;
      num = r;
    }
    if (quotients.size() < s) {
      throw Error(ErrorCode::InsufficientBits, "random rational has only " + std::to_string(quotients.size()) +
                                                   " partial quotients, " + std::to_string(s) + " requested");
    }
  }

  LyapunovEstimate est;
  est.s = s;
  est.per_quotient = log_denominator(quotients) / static_cast<double>(s);
  est.normalized = est.per_quotient / std::log(4.0);
  return est;
}

SpectrumEndpoints spectrum_endpoints(double alpha0) {
  const double log2_3 = std::log(3.0) / std::log(2.0);
  const double log2_phi = std::log((1 + std::sqrt(5.0)) / 2) / std::log(2.0);
  return {log2_3 - alpha0, log2_3 - log2_phi};
}

DensityTargets targets_from_profile(const DensityProfile& p) {
  return {to_double(p.d_minus), to_double(p.d_plus), p.dexp_minus, p.dexp_plus};
}

InterleaveResult interleave(const Family& family, const std::function<DensityTargets(int)>& targets,
                            std::uint64_t horizon, int max_k) {
  if (horizon < 2) throw Error(ErrorCode::InvalidArgument, "horizon must be at least 2");
  InterleaveResult res;
  res.horizon = horizon;

  // Spot check that consecutive sets are nested, all in the same direction.
  bool grows = false;
  bool shrinks = false;
  const std::uint64_t sample_end = std::min<std::uint64_t>(horizon, 4096);
  for (int k = 1; k < std::min(max_k, 8); ++k)
    for (std::uint64_t n = 1; n < sample_end; ++n) {
      const bool a = family(k, n);
      const bool b = family(k + 1, n);
      if (a && !b) shrinks = true;
      if (b && !a) grows = true;
    }
  if (grows && shrinks) throw Error(ErrorCode::NotMonotone, "family is not monotone for inclusion on samples");
  res.direction = grows ? 1 : (shrinks ? -1 : 0);

  std::uint64_t Nk = 1;
  res.cuts.push_back(Nk);
  for (int k = 1;; ++k) {
    if (k >= max_k) {
      res.stop_reason = "reached k = " + std::to_string(max_k);
      break;
    }
    const DensityTargets tk = targets(k);
    const DensityTargets tk1 = targets(k + 1);
    const double slack = 1.0 / k;

    auto check = [&](std::uint64_t N, std::uint64_t c_prime, std::uint64_t c_next) -> std::optional<std::string> {
      const double n = static_cast<double>(N);
      const double cp = static_cast<double>(c_prime);
      const double cpp = static_cast<double>(Nk - 1 + c_prime);
      const double cn = static_cast<double>(c_next);
      if (n * (tk.d_minus - slack) > cp) return "N (d-(E_k) - 1/k) <= #E'_k";
      if (cpp > n * (tk.d_plus + slack)) return "#E''_k <= N (d+(E_k) + 1/k)";
      if (std::pow(n, tk.dexp_minus - slack) > cp) return "N^(dexp-(E_k) - 1/k) <= #E'_k";
      if (cpp > std::pow(n, tk.dexp_plus + slack)) return "#E''_k <= N^(dexp+(E_k) + 1/k)";
      if (n * (tk1.d_minus - slack) > cn) return "N (d-(E_k+1) - 1/k) <= #E_k+1";
      if (cn > n * (tk1.d_plus + slack)) return "#E_k+1 <= N (d+(E_k+1) + 1/k)";
      if (std::pow(n, tk1.dexp_minus - slack) > cn) return "N^(dexp-(E_k+1) - 1/k) <= #E_k+1";
      if (cn > std::pow(n, tk1.dexp_plus + slack)) return "#E_k+1 <= N^(dexp+(E_k+1) + 1/k)";
      return std::nullopt;
    };

    const std::uint64_t lo = 2 * Nk;
    std::optional<std::uint64_t> cut;
    std::string failure;
    if (lo > horizon) {
      failure = "2 N_k = " + std::to_string(lo) + " exceeds the horizon";
    } else {
      std::uint64_t c_prime = 0;
      std::uint64_t c_next = 0;
      for (std::uint64_t N = 1;; ++N) {
        if (N >= lo) {
          auto fail = check(N, c_prime, c_next);
          if (!fail) {
            cut = N;
            break;
          }
          if (N == horizon) {
            failure = *fail + " fails at N = " + std::to_string(N) + ", k = " + std::to_string(k);
            break;
          }
        }
        if (N >= horizon) break;
        if (N >= Nk && family(k, N)) ++c_prime;
        if (family(k + 1, N)) ++c_next;
      }
    }

    const std::uint64_t end = cut ? *cut : horizon;
    for (std::uint64_t n = Nk; n < end; ++n)
      if (family(k, n)) res.members.push_back(n);
    if (!cut) {
      if (k == 1) throw Error(ErrorCode::NoCutPoint, "no cut point N_2 below the horizon: " + failure);
      res.stop_reason = failure;
      break;
    }
    Nk = *cut;
    res.cuts.push_back(Nk);
  }
  return res;
}

}  // namespace soficonv::spectrum
