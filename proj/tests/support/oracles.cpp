#include "oracles.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace oracle {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<std::uint64_t> enumerate_counts(int k, int b, int d) {
  std::uint64_t bk = 1;
  for (int i = 0; i < k; ++i) bk *= static_cast<std::uint64_t>(b);
  const std::uint64_t max_value = static_cast<std::uint64_t>(d - 1) * (bk - 1) / static_cast<std::uint64_t>(b - 1);
  std::vector<std::uint64_t> counts(max_value + 1, 0);
  std::vector<int> digits(static_cast<std::size_t>(k), 0);
  while (true) {
    std::uint64_t v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * static_cast<std::uint64_t>(b) + static_cast<std::uint64_t>(digits[i]);
    ++counts[v];
    int i = 0;
    while (i < k && digits[i] == d - 1) digits[i++] = 0;
    if (i == k) break;
    ++digits[i];
  }
  return counts;
}

Integer cf_denominator_by_matrices(const std::vector<unsigned>& a) {
  // [[p_{i}, p_{i-1}], [q_i, q_{i-1}]] = prod [[a_i, 1], [1, 0]] starting from [[0,1],[1,0]].
  Integer m00 = 0, m01 = 1, m10 = 1, m11 = 0;
  for (unsigned ai : a) {
    Integer n00 = m00 * ai + m01, n10 = m10 * ai + m11;
    m01 = m00;
    m11 = m10;
    m00 = n00;
    m10 = n10;
  }
  return m10;
}

bool has_even_gap(const std::string& word) {
  std::size_t last_one = std::string::npos;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != '1') continue;
    if (last_one != std::string::npos && (i - last_one - 1) % 2 == 0) return true;
    last_one = i;
  }
  return false;
}

std::vector<std::string> words_over(const std::string& alphabet, std::size_t length) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (char c : alphabet) next.push_back(w + c);
    out = std::move(next);
  }
  return out;
}

IntegerField::IntegerField(std::vector<long> minpoly) : minpoly_(std::move(minpoly)) {
  if (minpoly_.size() < 2 || minpoly_.back() != 1) throw std::invalid_argument("monic polynomial expected");
}

std::vector<long> IntegerField::times_beta(const std::vector<long>& v) const {
  const std::size_t n = degree();
  std::vector<long> out(n, 0);
  const long top = v[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) out[i] = v[i - 1];
  for (std::size_t i = 0; i < n; ++i) out[i] -= top * minpoly_[i];
  return out;
}

std::vector<long> IntegerField::horner(const std::vector<int>& word) const {
  std::vector<long> v(degree(), 0);
  for (int w : word) {
    v = times_beta(v);
    v[0] += w;
  }
  return v;
}

std::map<std::vector<long>, std::uint64_t> group_by_value(const IntegerField& f, int d, int k) {
  std::map<std::vector<long>, std::uint64_t> groups;
  std::vector<int> word(static_cast<std::size_t>(k), 0);
  std::function<void(int, const std::vector<long>&)> rec = [&](int pos, const std::vector<long>& v) {
    if (pos == k) {
      ++groups[v];
      return;
    }
    const auto shifted = f.times_beta(v);
    for (int w = 0; w < d; ++w) {
      auto next = shifted;
      next[0] += w;
      rec(pos + 1, next);
    }
  };
  rec(0, std::vector<long>(f.degree(), 0));
  return groups;
}

std::vector<std::uint64_t> truncated_convolution(int b, int d, int depth) {
  std::vector<std::uint64_t> dist{1};
  for (int k = 0; k < depth; ++k) {
    std::vector<std::uint64_t> next((dist.size() - 1) * static_cast<std::size_t>(b) + static_cast<std::size_t>(d), 0);
    for (std::size_t m = 0; m < dist.size(); ++m) {
      if (!dist[m]) continue;
      for (int w = 0; w < d; ++w) next[m * static_cast<std::size_t>(b) + static_cast<std::size_t>(w)] += dist[m];
    }
    dist = std::move(next);
  }
  return dist;
}

double monte_carlo(double beta, int d, int depth, double lo, double hi, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    double x = 0, scale = 1;
    for (int k = 0; k < depth; ++k) {
      scale /= beta;
      x += static_cast<double>(rng.next() % static_cast<std::uint64_t>(d)) * scale;
    }
    if (x >= lo && x < hi) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

namespace {

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational small_weight(Rng& rng) {
  // One in four entries is zero.
  if (rng.uniform(0, 3) == 0) return Rational(0);
  return frac(rng.uniform(1, 9), rng.uniform(1, 5));
}

}  // namespace

soficonv::sofic::LinearRepresentation random_linrep(Rng& rng, std::size_t b, std::size_t r) {
  soficonv::sofic::LinearRepresentation lr;
  lr.C.resize(r);
  for (auto& c : lr.C) c = frac(rng.uniform(1, 7), rng.uniform(1, 3));
  std::vector<RationalMatrix> A(b, RationalMatrix(r, r));
  for (auto& a : A)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a(i, j) = small_weight(rng);
  // Each row of sum A needs some mass.
  for (std::size_t i = 0; i < r; ++i) {
    Rational row_mass = 0;
    for (const auto& a : A)
      for (std::size_t j = 0; j < r; ++j) row_mass += a(i, j) * lr.C[j];
    if (row_mass == 0) {
      A[rng.next() % b](i, rng.next() % r) = 1;
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    Rational row_mass = 0;
    for (const auto& a : A)
      for (std::size_t j = 0; j < r; ++j) row_mass += a(i, j) * lr.C[j];
    const Rational factor = lr.C[i] / row_mass;
    for (auto& a : A)
      for (std::size_t j = 0; j < r; ++j) a(i, j) *= factor;
  }
  lr.M = A;
  lr.R.assign(b, RationalVector(r));
  Rational total = 0;
  for (auto& row : lr.R)
    for (std::size_t j = 0; j < r; ++j) {
      row[j] = small_weight(rng);
      total += row[j] * lr.C[j];
    }
  if (total == 0) {
    lr.R[0][0] = 1;
    total = lr.C[0];
  }
  for (auto& row : lr.R)
    for (auto& x : row) x /= total;
  return lr;
}

soficonv::sofic::MarkovMeasure random_markov(Rng& rng, std::size_t b) {
  soficonv::sofic::MarkovMeasure m;
  m.p.resize(b);
  Rational total = 0;
  for (auto& x : m.p) total += (x = small_weight(rng));
  if (total == 0) total = m.p[0] = 1;
  for (auto& x : m.p) x /= total;
  m.P = RationalMatrix(b, b);
  for (std::size_t i = 0; i < b; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < b; ++j) row += (m.P(i, j) = small_weight(rng));
    if (row == 0) row = m.P(i, i) = 1;
    for (std::size_t j = 0; j < b; ++j) m.P(i, j) /= row;
  }
  return m;
}

std::vector<Rational> all_cylinders(const soficonv::sofic::LinearRepresentation& lr, std::size_t length) {
  std::vector<Rational> out;
  const std::size_t b = lr.R.size();
  if (length == 0) {
    RationalVector total(lr.C.size(), 0);
    for (const auto& row : lr.R)
      for (std::size_t j = 0; j < row.size(); ++j) total[j] += row[j];
    out.push_back(soficonv::dot(total, lr.C));
    return out;
  }
  std::function<void(const RationalVector&, std::size_t)> rec = [&](const RationalVector& v, std::size_t depth) {
    if (depth == length) {
      out.push_back(soficonv::dot(v, lr.C));
      return;
    }
    for (std::size_t e = 0; e < b; ++e) rec(v * lr.M[e], depth + 1);
  };
  for (std::size_t e = 0; e < b; ++e) rec(lr.R[e], 1);
  return out;
}

}  // namespace oracle
