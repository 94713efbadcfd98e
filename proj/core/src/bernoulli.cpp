#include "soficonv/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "soficonv/error.hpp"

namespace soficonv::bernoulli {

BernoulliSpec BernoulliSpec::uniform(int b, int d) {
  BernoulliSpec s;
  s.b = b;
  s.d = d;
  if (d > 0) s.p.assign(static_cast<std::size_t>(d), Rational(1, d));
  return s;
}

void BernoulliSpec::validate() const {
  if (b < 2) throw Error(ErrorCode::InvalidArgument, "base b must be >= 2");
  if (d < b) throw Error(ErrorCode::InvalidArgument, "digit count d must be >= b");
  if (p.size() != static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::InvalidArgument, "probability vector must have d entries");
  }
  for (const auto& x : p)
    if (x <= 0) throw Error(ErrorCode::NotPositive, "digit probabilities must be positive");
  if (sum(p) != 1) throw Error(ErrorCode::NotStochastic, "digit probabilities must sum to 1");
}

int BernoulliSpec::a() const { return static_cast<int>(ceil_div(d - 1, b - 1)) - 1; }

bool BernoulliSpec::is_uniform() const {
  return std::all_of(p.begin(), p.end(), [&](const Rational& x) { return x == p.front(); });
}

Rational BernoulliSpec::prob(long i) const {
  if (i < 0 || i >= d) return Rational(0);
  return p[static_cast<std::size_t>(i)];
}

std::vector<RationalMatrix> build_matrices(const BernoulliSpec& spec) {
  spec.validate();
  const std::size_t n = spec.size();
  std::vector<RationalMatrix> out;
  for (int j = 0; j < spec.b; ++j) {
    RationalMatrix m(n, n);
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t qq = 0; qq < n; ++qq) {
        m(q, qq) = spec.prob(j + spec.b * static_cast<long>(q) - static_cast<long>(qq));
      }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

RationalVector solve_stationary(const std::vector<RationalMatrix>& matrices) {
  RationalMatrix total(matrices.front().rows(), matrices.front().cols());
  for (const auto& m : matrices) total += m;
  if (!is_irreducible(total)) {
    throw Error(ErrorCode::Reducible, "sum of the digit matrices is reducible");
  }
  RationalVector c = fixed_vector(total);
  Rational s = sum(c);
  for (auto& x : c) x /= s;
  for (const auto& x : c)
    if (x <= 0) throw Error(ErrorCode::NotPositive, "eigenvector is not positive");
  return c;
}

void check_digits(const std::vector<int>& digits, int b) {
  for (int e : digits) {
    if (e < 0 || e >= b) {
      throw Error(ErrorCode::LetterOutOfRange, "digit " + std::to_string(e) + " outside {0.." +
                                                   std::to_string(b - 1) + "}");
    }
  }
}

}  // namespace

RationalVector stationary_vector(const BernoulliSpec& spec) { return solve_stationary(build_matrices(spec)); }

BernoulliMeasure::BernoulliMeasure(BernoulliSpec spec)
    : spec_(std::move(spec)), matrices_(build_matrices(spec_)), C_(solve_stationary(matrices_)) {}

RationalVector BernoulliMeasure::interval_column(const std::vector<int>& digits) const {
  check_digits(digits, spec_.b);
  RationalVector col = C_;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    col = matrices_[static_cast<std::size_t>(*it)] * col;
  }
  return col;
}

Rational BernoulliMeasure::interval_measure(int q, const std::vector<int>& digits) const {
  if (q < 0 || q > spec_.a()) {
    throw Error(ErrorCode::InvalidArgument, "translation q must lie in 0.." + std::to_string(spec_.a()));
  }
  return interval_column(digits)[static_cast<std::size_t>(q)];
}

sofic::LinearRepresentation BernoulliMeasure::symbolic_representation(int q) const {
  if (q < 0 || q > spec_.a()) {
    throw Error(ErrorCode::InvalidArgument, "translation q must lie in 0.." + std::to_string(spec_.a()));
  }
  const auto qi = static_cast<std::size_t>(q);
  sofic::LinearRepresentation lr;
  lr.M = matrices_;
  lr.C = C_;
  for (const auto& m : matrices_) {
    RationalVector r = m.row(qi);
    for (auto& x : r) x /= C_[qi];
    lr.R.push_back(std::move(r));
  }
  return lr;
}

sofic::LinearRepresentation BernoulliMeasure::summed_representation() const {
  sofic::LinearRepresentation lr;
  lr.M = matrices_;
  lr.C = C_;
  RationalVector ones(C_.size(), Rational(1));
  for (const auto& m : matrices_) lr.R.push_back(ones * m);
  return lr;
}

Integer count_representations_k(const Integer& n, int k, int b, int d) {
  if (n < 0) return Integer(0);
  std::map<Integer, Integer> level{{n, Integer(1)}};
  for (int step = 0; step < k && !level.empty(); ++step) {
    std::map<Integer, Integer> next;
    for (const auto& [m, c] : level) {
      Integer r = m % b;
      for (Integer w = r; w <= d - 1 && w <= m; w += b) next[(m - w) / b] += c;
    }
    level = std::move(next);
  }
  auto it = level.find(Integer(0));
  return it == level.end() ? Integer(0) : it->second;
}

Integer count_representations(const Integer& n, int b, int d) {
  if (b < 2 || d < b) throw Error(ErrorCode::InvalidArgument, "need d >= b >= 2");
  if (n < 0) return Integer(0);
  Integer total = 0;
  std::map<Integer, Integer> level{{n, Integer(1)}};
  while (!level.empty()) {
    std::map<Integer, Integer> next;
    for (const auto& [m, c] : level) {
      if (m == 0) {
        total += c;  // all remaining digits are zero
        continue;
      }
      Integer r = m % b;
      for (Integer w = r; w <= d - 1 && w <= m; w += b) next[(m - w) / b] += c;
    }
    level = std::move(next);
  }
  return total;
}

IntegerMatrix matrix_count_table(const BernoulliSpec& spec, const std::vector<int>& word) {
  spec.validate();
  if (!spec.is_uniform()) throw Error(ErrorCode::NonUniform, "count table needs uniform probabilities");
  check_digits(word, spec.b);
  const std::size_t n = spec.size();
  IntegerMatrix acc = IntegerMatrix::identity(n);
  for (int e : word) {
    IntegerMatrix step(n, n);
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t qq = 0; qq < n; ++qq) {
        long idx = e + spec.b * static_cast<long>(q) - static_cast<long>(qq);
        if (idx >= 0 && idx < spec.d) step(q, qq) = 1;
      }
    acc = acc * step;
  }
  return acc;
}

std::vector<TransducerEdge> integer_transducer(int b, int d) {
  if (b < 2 || d < b) throw Error(ErrorCode::InvalidArgument, "need d >= b >= 2");
  const int a = static_cast<int>(ceil_div(d - 1, b - 1)) - 1;
  std::vector<TransducerEdge> edges;
  for (int q = 0; q <= a; ++q)
    for (int w = 0; w < d; ++w) edges.push_back({q, w, (q + w) % b, (q + w) / b});
  return edges;
}

std::vector<int> normalize_digits(const std::vector<int>& digits, int b, int d) {
  if (b < 2 || d < b) throw Error(ErrorCode::InvalidArgument, "need d >= b >= 2");
  for (int w : digits) {
    if (w < 0 || w >= d) {
      throw Error(ErrorCode::LetterOutOfRange, "digit " + std::to_string(w) + " outside {0.." +
                                                   std::to_string(d - 1) + "}");
    }
  }
  std::vector<int> out;  // least significant first
  long carry = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    long t = carry + *it;
    out.push_back(static_cast<int>(t % b));
    carry = t / b;
  }
  while (carry > 0) {
    out.push_back(static_cast<int>(carry % b));
    carry /= b;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  if (out.empty()) out.push_back(0);
  std::reverse(out.begin(), out.end());
  return out;
}

MarkovExport symbolic_markov_export(const BernoulliSpec& spec) {
  BernoulliMeasure measure(spec);
  const auto& M = measure.matrices();
  const auto& C = measure.C();
  const std::size_t r = C.size();
  const std::size_t b = static_cast<std::size_t>(spec.b);
  const std::size_t n = r * b;
  MarkovExport out;
  out.markov.P = RationalMatrix(n, n);
  out.markov.p.assign(n, Rational(0));
  out.block_initial.assign(n, Rational(0));
  out.block_initial_scale = spec.b;
  for (std::size_t e = 0; e < b; ++e) {
    RationalVector mc = M[e] * C;
    for (std::size_t q = 0; q < r; ++q) {
      out.markov.p[e * r + q] = mc[q];
      out.block_initial[e * r + q] = C[q] / spec.b;
    }
    for (std::size_t row_block = 0; row_block < b; ++row_block)
      for (std::size_t q = 0; q < r; ++q)
        for (std::size_t qq = 0; qq < r; ++qq) out.markov.P(row_block * r + q, e * r + qq) = M[e](qq, q);
  }
  std::vector<int> image(n);
  for (std::size_t s = 0; s < n; ++s) image[s] = static_cast<int>(s / r);
  out.projection = sofic::LetterMap::from_image(std::move(image));
  out.markov.validate();
  return out;
}

}  // namespace soficonv::bernoulli
