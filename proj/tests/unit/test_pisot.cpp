#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "soficonv/bernoulli.hpp"
#include "soficonv/error.hpp"
#include "soficonv/pisot.hpp"
#include "soficonv/sofic.hpp"

using namespace soficonv;
using namespace soficonv::pisot;

namespace {

FieldDescriptor golden() { return {{Integer(-1), Integer(-1), Integer(1)}, Rational(3, 2), Rational(17, 10)}; }
FieldDescriptor beta3() { return {{Integer(1), Integer(-3), Integer(1)}, Rational(5, 2), Rational(27, 10)}; }
FieldDescriptor silver() { return {{Integer(-1), Integer(-2), Integer(1)}, Rational(12, 5), Rational(5, 2)}; }
FieldDescriptor tribonacci() {
  return {{Integer(-1), Integer(-1), Integer(-1), Integer(1)}, Rational(9, 5), Rational(19, 10)};
}

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::vector<Word> words(int d, std::size_t k) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int e = 0; e < d; ++e) {
        auto x = w;
        x.push_back(e);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<long> minpoly_of(const FieldDescriptor& d) {
  std::vector<long> out;
  for (const auto& c : d.minpoly) out.push_back(c.get_si());
  return out;
}

bool contains(const std::vector<FieldElement>& states, const FieldElement& x) {
  return std::find(states.begin(), states.end(), x) != states.end();
}

}  // namespace

TEST(Pisot, BaseValidation) {
  EXPECT_THROW(PisotBase::create(beta3(), 2), Error);
  auto b = PisotBase::create(golden(), 2);
  EXPECT_EQ(b.ceil_beta, 2);
  EXPECT_EQ(b.alpha, b.beta);  // 1 / (beta - 1) = beta
}

TEST(Pisot, GoldenCarryStates) {
  auto base = PisotBase::create(golden(), 2);
  auto open = carry_states(base, Window::Open);
  const auto& f = *base.field;
  EXPECT_EQ(open.size(), 3u);
  EXPECT_TRUE(contains(open, f.zero()));
  EXPECT_TRUE(contains(open, f.one()));
  EXPECT_TRUE(contains(open, base.beta - Rational(1)));

  auto closed = carry_states(base, Window::HalfOpenRightClosed);
  EXPECT_EQ(closed.size(), 4u);
  EXPECT_TRUE(contains(closed, base.beta));
  for (const auto& s : open) EXPECT_TRUE(contains(closed, s));
}

TEST(Pisot, Beta3HalfOpenClosureExcludesReciprocal) {
  auto base = PisotBase::create(beta3(), 3);
  auto states = carry_states(base, Window::HalfOpenRightClosed);
  EXPECT_FALSE(contains(states, base.field->from_rational(3) - base.beta));
  EXPECT_TRUE(contains(states, base.field->zero()));
}

TEST(Pisot, IntegerBaseStates) {
  // alpha = 2 here, so the closed right end adds the carry 2 = 2 * 1 - 0 + 0.
  auto base = PisotBase::create(FieldDescriptor::integer_base(2), 3);
  auto open = carry_states(base, Window::Open);
  ASSERT_EQ(open.size(), 2u);
  EXPECT_EQ(open[0], base.field->zero());
  EXPECT_EQ(open[1], base.field->one());
  auto closed = carry_states(base, Window::HalfOpenRightClosed);
  ASSERT_EQ(closed.size(), 3u);
  EXPECT_EQ(closed[2], base.field->from_rational(2));
}

TEST(Pisot, StateCap) {
  auto base = PisotBase::create(golden(), 2);
  try {
    carry_states(base, Window::HalfOpenRightClosed, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StateCapExceeded);
  }
}

TEST(Pisot, GoldenOpenTransducer) {
  auto base = PisotBase::create(golden(), 2);
  auto t = build_transducer(base, Window::Open);
  EXPECT_EQ(t.edges.size(), 7u);
  const std::size_t zero = t.index_of(base.field->zero());
  const std::size_t one = t.index_of(base.field->one());
  bool to_one = false;
  for (const auto& e : t.edges) {
    EXPECT_EQ(t.states[e.to], base.beta * t.states[e.from] - Rational(e.input) + Rational(e.output));
    if (e.from == zero && e.input == 0 && e.output == 1 && e.to == one) to_one = true;
    EXPECT_FALSE(e.from == zero && e.input == 1 && e.output == 0);
  }
  EXPECT_TRUE(to_one);
}

TEST(Pisot, QuasiExpansions) {
  auto g = quasi_expansion(PisotBase::create(golden(), 2));
  EXPECT_EQ(g.digits, (Word{1, 0}));
  EXPECT_EQ(g.period(), 2u);
  auto two = quasi_expansion(PisotBase::create(FieldDescriptor::integer_base(2), 2));
  EXPECT_EQ(two.digits, Word{1});
  EXPECT_EQ(quasi_expansion(PisotBase::create(silver(), 3)).digits, (Word{2, 0}));
  EXPECT_EQ(quasi_expansion(PisotBase::create(tribonacci(), 2)).digits, (Word{1, 1, 0}));
  try {
    quasi_expansion(PisotBase::create(beta3(), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFiniteRenyi);
  }
  for (auto d : {golden(), silver(), tribonacci()}) {
    auto base = PisotBase::create(d, 3);
    EXPECT_TRUE(verify_quasi_expansion(base, quasi_expansion(base)));
  }
}

TEST(Pisot, WordSets) {
  EXPECT_EQ(word_set(PisotBase::create(golden(), 2)), (std::vector<Word>{{0}, {1, 0}}));
  EXPECT_EQ(word_set(PisotBase::create(FieldDescriptor::integer_base(3), 3)), (std::vector<Word>{{0}, {1}, {2}}));
  EXPECT_EQ(word_set(PisotBase::create(tribonacci(), 2)), (std::vector<Word>{{0}, {1, 0}, {1, 1, 0}}));
  auto w = word_set(PisotBase::create(golden(), 2));
  EXPECT_EQ(parse_w(w, {1, 0, 0, 1, 0}), (std::vector<std::size_t>{1, 0, 1}));
  try {
    parse_w(w, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotWParseable);
  }
}

TEST(Pisot, Admissibility) {
  auto base = PisotBase::create(golden(), 2);
  EXPECT_FALSE(is_admissible({1, 1}, base));
  EXPECT_TRUE(is_admissible({1, 0, 1, 0}, base));
  EXPECT_TRUE(is_admissible({0, 0, 0}, base));
  EXPECT_TRUE(is_admissible({}, base));
}

TEST(Pisot, RedundancyCounts) {
  auto golden2 = PisotBase::create(golden(), 2);
  EXPECT_EQ(count_redundant({1, 0, 0}, golden2), 2);  // 100 = 011
  for (const auto& w : words(2, 5)) EXPECT_GE(count_redundant(w, golden2), 1);

  auto two = PisotBase::create(FieldDescriptor::integer_base(2), 3);
  for (int k = 1; k <= 8; ++k) {
    for (long n = 0; n < (1L << k); ++n) {
      Word w(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(k - 1 - i)] = static_cast<int>((n >> i) & 1);
      ASSERT_EQ(count_redundant(w, two), bernoulli::count_representations_k(n, k, 2, 3)) << n;
    }
  }
}

TEST(Pisot, NormalizeGolden) {
  auto base = PisotBase::create(golden(), 2);
  auto nf = normalize_pisot({1, 1}, base);
  EXPECT_EQ(nf.integer_part, Word{1});
  EXPECT_EQ(nf.fractional_part, (Word{0, 0}));
  EXPECT_EQ(nf.to_string(), "1.00");
  EXPECT_EQ(normalize_pisot({0, 1, 1}, base).digits(), (Word{1, 0, 0}));
  EXPECT_EQ(normalize_pisot({0, 1, 1}, base).shift(), 0u);
  EXPECT_EQ(normalize_pisot({0, 0, 0, 0}, base).digits(), (Word{0, 0, 0, 0}));
}

TEST(Pisot, NormalizeNeedsLongerFractionWhenDigitsExceedBase) {
  auto base = PisotBase::create(golden(), 3);
  auto nf = normalize_pisot({2}, base);
  EXPECT_EQ(nf.to_string(), "1.001");
}

TEST(Pisot, NormalizeRejectsInfiniteExpansion) {
  auto base = PisotBase::create(beta3(), 3);
  EXPECT_THROW(normalize_pisot({1}, base), Error);
}

TEST(Pisot, GoldenMeasureMatrices) {
  auto base = PisotBase::create(golden(), 2);
  for (auto [p0, p1] : {std::pair{q(1, 2), q(1, 2)}, std::pair{q(1, 3), q(2, 3)}}) {
    auto pm = measure_matrices(base, {p0, p1});
    ASSERT_EQ(pm.states.size(), 3u);
    EXPECT_EQ(pm.states[1], base.field->one());
    EXPECT_EQ(pm.states[2], base.beta - Rational(1));
    EXPECT_EQ(pm.M[0], (RationalMatrix{{p0, 0, 0}, {0, 0, p1}, {p1, p0, 0}}));
    EXPECT_EQ(pm.M[1], (RationalMatrix{{p1, p0, 0}, {0, 0, 0}, {0, p1, 0}}));
    EXPECT_TRUE(pm.absolute_scale);
    EXPECT_EQ(pm.C[0] + pm.C[1], 1);
    for (const auto& c : pm.C) EXPECT_GT(c, 0);
    RationalMatrix sum_w = pm.M_w[0] + pm.M_w[1];
    EXPECT_EQ(sum_w * pm.C, pm.C);
    EXPECT_EQ(pm.normalized_measure(0, {0}) + pm.normalized_measure(0, {1, 0}), 1);
  }
}

TEST(Pisot, BlockTransitionMatrix) {
  auto base = PisotBase::create(golden(), 2);
  const Rational p0 = q(1, 3), p1 = q(2, 3);
  auto pm = measure_matrices(base, {p0, p1});
  const RationalMatrix expected_row_block{{p0, 0, 0, p0 * p1, 0, p0 * p1},
                                          {0, 0, p1, 0, 0, 0},
                                          {p1, p0, 0, 0, 0, p1 * p1}};
  auto block = pm.block_transition_matrix();
  ASSERT_EQ(block.rows(), 6u);
  for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(block.row(r), expected_row_block.row(r % 3));
}

TEST(Pisot, IntegerBaseMatchesBernoulliMatrices) {
  auto base = PisotBase::create(FieldDescriptor::integer_base(2), 3);
  auto pm = measure_matrices(base, {q(1, 3), q(1, 3), q(1, 3)});
  auto bm = bernoulli::build_matrices(bernoulli::BernoulliSpec::uniform(2, 3));
  ASSERT_EQ(pm.M.size(), bm.size());
  for (std::size_t i = 0; i < bm.size(); ++i) EXPECT_EQ(pm.M[i], bm[i]);
  EXPECT_EQ(pm.C, bernoulli::stationary_vector(bernoulli::BernoulliSpec::uniform(2, 3)));
}

TEST(Pisot, MeasureAgreesWithMonteCarlo) {
  auto base = PisotBase::create(golden(), 2);
  auto pm = measure_matrices(base, {q(1, 2), q(1, 2)});
  const double beta = (1 + std::sqrt(5.0)) / 2;
  const double mass = oracle::monte_carlo(beta, 2, 24, 0, 1 / beta, 200000, 11);
  const double unit = oracle::monte_carlo(beta, 2, 24, 0, 1, 200000, 11);
  EXPECT_NEAR(to_double(pm.interval_measure(0, {0})), mass, 1e-2);
  EXPECT_NEAR(to_double(pm.normalized_measure(0, {0})), mass / unit, 1e-2);
  EXPECT_NEAR(to_double(pm.C[0]), unit, 1e-2);
}

TEST(Pisot, SymbolicRepresentationMatchesMeasure) {
  auto base = PisotBase::create(golden(), 2);
  auto pm = measure_matrices(base, {q(1, 2), q(1, 2)});
  auto lr = pm.symbolic_representation(0);
  lr.validate();
  EXPECT_EQ(sofic::linrep_cylinder(lr, {0}), pm.normalized_measure(0, {0}));
  EXPECT_EQ(sofic::linrep_cylinder(lr, {1, 0, 1}), pm.normalized_measure(0, {1, 0, 0, 1, 0}));
  EXPECT_EQ(pm.normalized_measure(0, {0}), (pm.M[0] * pm.C)[0] / pm.C[0]);
}

TEST(Pisot, InvalidMeasureWord) {
  auto base = PisotBase::create(golden(), 2);
  auto pm = measure_matrices(base, {q(1, 2), q(1, 2)});
  EXPECT_THROW(pm.interval_measure(0, {1, 1}), Error);
}

TEST(PisotProperty, WindowsTerminateAndStatesAreReachable) {
  for (auto [desc, d] : {std::pair{golden(), 2}, std::pair{golden(), 3}, std::pair{beta3(), 3}, std::pair{silver(), 3},
                         std::pair{tribonacci(), 2}}) {
    auto base = PisotBase::create(desc, d);
    for (auto w : {Window::HalfOpenRightClosed, Window::Open, Window::Symmetric}) {
      auto t = build_transducer(base, w);
      std::vector<bool> seen(t.states.size(), false);
      seen[0] = true;
      for (bool changed = true; changed;) {
        changed = false;
        for (const auto& e : t.edges)
          if (seen[e.from] && !seen[e.to]) changed = seen[e.to] = true;
      }
      for (bool s : seen) EXPECT_TRUE(s);
      for (const auto& s : t.states) EXPECT_TRUE(in_window(base, w, s));
    }
  }
}

TEST(PisotProperty, RedundancyMatchesGroupedEnumeration) {
  for (auto [desc, d] : {std::pair{golden(), 2}, std::pair{golden(), 3}, std::pair{beta3(), 3}}) {
    auto base = PisotBase::create(desc, d);
    RedundancyCounter counter(base);
    oracle::IntegerField field(minpoly_of(desc));
    for (std::size_t k = 1; k <= 6; ++k) {
      auto groups = oracle::group_by_value(field, d, static_cast<int>(k));
      for (const auto& w : words(d, k)) {
        ASSERT_EQ(counter.count(w), groups.at(field.horner(w))) << format_digits(w);
      }
    }
  }
}

TEST(PisotProperty, NormalFormIsAdmissibleAndValueEqual) {
  oracle::Rng rng(7);
  for (auto [desc, d] : {std::pair{golden(), 2}, std::pair{golden(), 3}, std::pair{silver(), 3},
                         std::pair{tribonacci(), 2}}) {
    auto base = PisotBase::create(desc, d);
    for (int trial = 0; trial < 60; ++trial) {
      Word w(static_cast<std::size_t>(rng.uniform(0, 10)));
      for (auto& x : w) x = static_cast<int>(rng.uniform(0, d - 1));
      auto nf = normalize_pisot(w, base);
      ASSERT_TRUE(is_admissible(nf.digits(), base));
      auto value = polynomial_value(base, nf.integer_part) + fractional_value(base, nf.fractional_part);
      ASSERT_EQ(value, fractional_value(base, w)) << format_digits(w);
      ASSERT_GE(nf.fractional_part.size(), w.size());
    }
  }
}

TEST(PisotProperty, AdmissibleWordsHaveUniqueWParse) {
  for (auto desc : {golden(), tribonacci()}) {
    auto base = PisotBase::create(desc, 2);
    auto quasi = quasi_expansion(base);
    auto w_set = word_set(quasi);
    for (std::size_t len = 1; len <= 12; ++len) {
      for (const auto& w : words(2, len)) {
        // Admissible words followed by enough zeros to close the last block.
        Word padded = w;
        padded.insert(padded.end(), quasi.period(), 0);
        if (!is_admissible(padded, quasi)) continue;
        std::size_t parses = 0;
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
          if (pos == padded.size()) {
            ++parses;
            return;
          }
          for (const auto& block : w_set)
            if (pos + block.size() <= padded.size() &&
                std::equal(block.begin(), block.end(), padded.begin() + static_cast<std::ptrdiff_t>(pos)))
              rec(pos + block.size());
        };
        rec(0);
        ASSERT_EQ(parses, 1u) << format_digits(padded);
        EXPECT_NO_THROW(parse_w(w_set, padded));
      }
    }
  }
}

TEST(PisotProperty, IntervalMeasureIsAdditiveOverW) {
  auto base = PisotBase::create(golden(), 2);
  auto pm = measure_matrices(base, {q(2, 5), q(3, 5)});
  std::vector<Word> prefixes{{}};
  for (int depth = 0; depth < 3; ++depth) {
    std::vector<Word> next;
    for (const auto& pre : prefixes)
      for (const auto& w : pm.w_set) {
        auto x = pre;
        x.insert(x.end(), w.begin(), w.end());
        next.push_back(x);
      }
    for (const auto& pre : next) {
      for (std::size_t i = 0; i < pm.states.size(); ++i) {
        Rational total = 0;
        for (const auto& w : pm.w_set) {
          auto x = pre;
          x.insert(x.end(), w.begin(), w.end());
          total += pm.interval_measure(i, x);
        }
        ASSERT_EQ(total, pm.interval_measure(i, pre));
      }
    }
    prefixes = next;
  }
}
