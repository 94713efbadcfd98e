#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace soficonv::automata {

/// Words over single-character letters.
using Word = std::string;

/// Finite graph with letter-labelled edges. With every state initial, the
/// labels of its paths form a sofic subshift's factor language.
class LabeledGraph {
 public:
  struct Edge {
    std::size_t from;
    char label;
    std::size_t to;
  };

  LabeledGraph() = default;

  /// Builds from state names; edges reference states by name. An empty
  /// initial list means every state is initial (subshift semantics).
  static LabeledGraph build(std::vector<std::string> states,
                            const std::vector<std::tuple<std::string, char, std::string>>& edges,
                            const std::vector<std::string>& initial = {});

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& initial() const { return initial_; }
  std::set<char> alphabet() const;
  std::size_t index_of(const std::string& state) const;

  /// Successors of a state along edges with the given label.
  const std::vector<std::size_t>& next(std::size_t state, char label) const;

 private:
  std::vector<std::string> states_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> initial_;
  std::vector<std::map<char, std::vector<std::size_t>>> out_;
};

/// True iff some path starting at an initial state carries `word`.
/// Throws UnknownLetter for letters outside the graph's alphabet.
bool accepts_factor(const LabeledGraph& g, std::string_view word);

/// {psi(w) : w the label of a length-L path from an initial state}.
std::set<Word> morphism_image_language(const LabeledGraph& g, const std::map<char, char>& psi,
                                       std::size_t length);

/// Anything that can list its words of a given length.
struct WordSource {
  std::string name;
  std::function<std::set<Word>(std::size_t)> words_of_length;
};

WordSource factor_language(LabeledGraph g, std::string name = "automaton");
WordSource image_language(LabeledGraph g, std::map<char, char> psi, std::string name = "image");
WordSource full_shift(std::string alphabet);

struct LanguageComparison {
  bool equal = true;
  /// Shortest, then lexicographically first, word in exactly one language.
  std::optional<Word> counterexample;
  /// Which side the counterexample belongs to ("a" or "b").
  std::string present_in;
};

/// Compares the two languages at every length 0..max_length.
LanguageComparison languages_equal_up_to(const WordSource& a, const WordSource& b,
                                         std::size_t max_length);

std::string to_dot(const LabeledGraph& g, const std::string& name = "G");

/// Graphs for the subshift of binary sequences avoiding 1 0^{2i} 1.
namespace fixtures {
/// Three-state recognizer: free / even zeros since last 1 / odd zeros since last 1.
LabeledGraph even_gap_automaton();
/// Four-state Markov cover on (a,0),(b,0),(b,1),(c,0), edges labelled by the
/// second coordinate of their source.
LabeledGraph even_gap_cover();
/// Markov graph on {a,b,c} (edge labelled by its source letter).
LabeledGraph three_letter_markov_graph();
/// a,b -> 0 and c -> 1.
std::map<char, char> three_letter_projection();
}  // namespace fixtures

}  // namespace soficonv::automata
