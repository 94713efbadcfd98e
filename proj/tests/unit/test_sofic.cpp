#include <gtest/gtest.h>

#include "oracles.hpp"
#include "soficonv/error.hpp"
#include "soficonv/sofic.hpp"

using namespace soficonv;
using namespace soficonv::sofic;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

MarkovMeasure two_letter() {
  MarkovMeasure m;
  m.p = {q(1, 2), q(1, 2)};
  m.P = RationalMatrix{{q(1, 2), q(1, 2)}, {q(1), q(0)}};
  return m;
}

LinearRepresentation bernoulli_lr(const RationalVector& p) {
  LinearRepresentation lr;
  for (const auto& x : p) {
    lr.R.push_back({x});
    lr.M.push_back(RationalMatrix{{x}});
  }
  lr.C = {q(1)};
  return lr;
}

}  // namespace

TEST(Sofic, MarkovCylinders) {
  auto m = two_letter();
  EXPECT_EQ(markov_cylinder(m, {0, 1}), q(1, 4));
  EXPECT_EQ(markov_cylinder(m, {0, 1, 1}), q(0));
  EXPECT_EQ(markov_cylinder(m, {0}), q(1, 2));
  EXPECT_THROW(markov_cylinder(m, {}), Error);
  EXPECT_THROW(markov_cylinder(m, {2}), Error);
}

TEST(Sofic, ColumnSplitting) {
  auto lr = markov_to_linear(two_letter());
  EXPECT_EQ(lr.R[0], (RationalVector{q(1, 2), q(0)}));
  EXPECT_EQ(lr.R[1], (RationalVector{q(0), q(1, 2)}));
  EXPECT_EQ(lr.M[0], (RationalMatrix{{q(1, 2), q(0)}, {q(1), q(0)}}));
  EXPECT_EQ(lr.M[1], (RationalMatrix{{q(0), q(1, 2)}, {q(0), q(0)}}));
  EXPECT_EQ(lr.C, (RationalVector{q(1), q(1)}));
}

TEST(Sofic, ColumnSplittingRoundtripOnAllWords) {
  auto m = two_letter();
  auto lr = markov_to_linear(m);
  for (const auto& w : all_words(2, 6)) EXPECT_EQ(linrep_cylinder(lr, w), markov_cylinder(m, w));
}

TEST(Sofic, OneLetterAlphabet) {
  MarkovMeasure m{{q(1)}, RationalMatrix{{q(1)}}};
  auto lr = markov_to_linear(m);
  EXPECT_EQ(lr.R[0], RationalVector{q(1)});
  EXPECT_EQ(lr.M[0], RationalMatrix{{q(1)}});
  EXPECT_EQ(lr.C, RationalVector{q(1)});
}

TEST(Sofic, PushForward) {
  auto lr = markov_to_linear(two_letter());
  auto same = push_forward(lr, LetterMap::identity(2));
  EXPECT_EQ(same.M, lr.M);
  EXPECT_EQ(same.R, lr.R);

  auto collapsed = push_forward(lr, LetterMap::from_image({0, 0}));
  ASSERT_EQ(collapsed.M.size(), 1u);
  EXPECT_EQ(collapsed.M[0] * collapsed.C, collapsed.C);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(linrep_cylinder(collapsed, Word(n, 0)), q(1));
}

TEST(Sofic, BernoulliCaseToMarkov) {
  auto cover = linear_to_markov(bernoulli_lr({q(1, 3), q(2, 3)}));
  ASSERT_EQ(cover.markov.P.rows(), 2u);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(cover.markov.P.row(i), (RationalVector{q(1, 3), q(2, 3)}));
  EXPECT_EQ(linrep_cylinder(bernoulli_lr({q(1, 3), q(2, 3)}), {1, 0}), q(2, 9));
}

TEST(Sofic, ValidationRejectsBrokenSideConditions) {
  auto lr = bernoulli_lr({q(1, 3), q(1, 3)});
  try {
    lr.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConditionViolated);
  }
  lr = bernoulli_lr({q(1, 3), q(2, 3)});
  lr.C = {q(0)};
  EXPECT_THROW(lr.validate(), Error);
}

TEST(Sofic, Stationarity) {
  EXPECT_TRUE(is_stationary(bernoulli_lr({q(1, 4), q(3, 4)})));
  MarkovMeasure m = two_letter();
  EXPECT_FALSE(is_stationary(markov_to_linear(m)));
  m.p = {q(2, 3), q(1, 3)};  // stationary law of P
  EXPECT_TRUE(is_stationary(markov_to_linear(m)));
}

TEST(SoficProperty, TotalMassIsOneAtEveryLength) {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    auto lr = oracle::random_linrep(rng, static_cast<std::size_t>(rng.uniform(1, 3)),
                                    static_cast<std::size_t>(rng.uniform(1, 4)));
    lr.validate();
    for (std::size_t n = 1; n <= 8; ++n) {
      Rational total = 0;
      for (const auto& v : oracle::all_cylinders(lr, n)) total += v;
      ASSERT_EQ(total, 1) << "length " << n;
    }
  }
}

TEST(SoficProperty, ConversionsPreserveCylinders) {
  oracle::Rng rng(4);
  for (int trial = 0; trial < 12; ++trial) {
    const auto b = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto r = static_cast<std::size_t>(rng.uniform(1, 5));
    auto lr = oracle::random_linrep(rng, b, r);
    auto cover = linear_to_markov(lr);
    cover.markov.validate();
    auto back = push_forward(markov_to_linear(cover.markov), cover.projection);
    const std::size_t max_len = b >= 4 ? 5 : 7;
    for (std::size_t n = 1; n <= max_len; ++n) ASSERT_EQ(oracle::all_cylinders(back, n), oracle::all_cylinders(lr, n));

    auto m = oracle::random_markov(rng, b);
    auto words = all_words(b, 4);
    auto via_linear = oracle::all_cylinders(markov_to_linear(m), 4);
    for (std::size_t i = 0; i < words.size(); ++i) ASSERT_EQ(via_linear[i], markov_cylinder(m, words[i]));
  }
}

TEST(SoficProperty, PushForwardCommutesWithCylinders) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto b = static_cast<std::size_t>(rng.uniform(2, 4));
    auto lr = oracle::random_linrep(rng, b, static_cast<std::size_t>(rng.uniform(1, 3)));
    std::vector<int> image(b);
    for (auto& x : image) x = static_cast<int>(rng.uniform(0, 1));
    image[0] = 0;
    image[1] = 1;
    auto psi = LetterMap::from_image(image);
    auto nu = push_forward(lr, psi);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::map<Word, Rational> summed;
      for (const auto& w : all_words(b, n)) {
        Word img;
        for (int x : w) img.push_back(psi(x));
        summed[img] += linrep_cylinder(lr, w);
      }
      for (const auto& w : all_words(2, n)) ASSERT_EQ(linrep_cylinder(nu, w), summed[w]);
    }
  }
}
