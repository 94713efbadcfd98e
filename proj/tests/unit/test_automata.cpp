#include <gtest/gtest.h>

#include "oracles.hpp"
#include "soficonv/automata.hpp"
#include "soficonv/error.hpp"

using namespace soficonv;
using namespace soficonv::automata;

TEST(Automata, EvenGapRecognizer) {
  auto g = fixtures::even_gap_automaton();
  EXPECT_FALSE(accepts_factor(g, "11"));
  EXPECT_TRUE(accepts_factor(g, "101"));
  EXPECT_TRUE(accepts_factor(g, ""));
  EXPECT_FALSE(accepts_factor(g, "1001"));
  EXPECT_TRUE(accepts_factor(g, "10001"));
}

TEST(Automata, UnknownLetter) {
  try {
    accepts_factor(fixtures::even_gap_automaton(), "102");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLetter);
  }
}

TEST(Automata, MorphismImage) {
  auto g = fixtures::three_letter_markov_graph();
  auto psi = fixtures::three_letter_projection();
  EXPECT_EQ(morphism_image_language(g, psi, 2), (std::set<Word>{"00", "01", "10"}));
  EXPECT_EQ(morphism_image_language(g, psi, 0), (std::set<Word>{""}));
  auto loop = LabeledGraph::build({"s"}, {{"s", 'x', "s"}});
  EXPECT_EQ(morphism_image_language(loop, {{'x', '0'}}, 3), (std::set<Word>{"000"}));
}

TEST(Automata, LanguageComparisons) {
  auto recognizer = factor_language(fixtures::even_gap_automaton(), "recognizer");
  auto image = image_language(fixtures::three_letter_markov_graph(), fixtures::three_letter_projection());
  EXPECT_TRUE(languages_equal_up_to(recognizer, image, 12).equal);

  auto r = languages_equal_up_to(recognizer, full_shift("01"), 2);
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(*r.counterexample, "11");
  EXPECT_EQ(r.present_in, "b");

  EXPECT_TRUE(languages_equal_up_to(image, image, 8).equal);
}

TEST(Automata, CoverProjectsOntoTheSameLanguage) {
  auto cover = factor_language(fixtures::even_gap_cover(), "cover");
  auto recognizer = factor_language(fixtures::even_gap_automaton(), "recognizer");
  EXPECT_TRUE(languages_equal_up_to(cover, recognizer, 12).equal);
}

TEST(Automata, DotMentionsEveryEdge) {
  auto g = fixtures::even_gap_automaton();
  auto dot = to_dot(g);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arrows;
  EXPECT_EQ(arrows, g.edges().size());
}

TEST(AutomataProperty, RecognizerMatchesForbiddenFactorScanner) {
  auto g = fixtures::even_gap_automaton();
  for (std::size_t len = 0; len <= 14; ++len) {
    for (const auto& w : oracle::words_over("01", len)) {
      ASSERT_EQ(accepts_factor(g, w), !oracle::has_even_gap(w)) << w;
    }
  }
}
