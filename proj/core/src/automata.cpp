#include "soficonv/automata.hpp"

#include <algorithm>
#include <sstream>

#include "soficonv/error.hpp"

namespace soficonv::automata {

LabeledGraph LabeledGraph::build(std::vector<std::string> states,
                                 const std::vector<std::tuple<std::string, char, std::string>>& edges,
                                 const std::vector<std::string>& initial) {
  LabeledGraph g;
  g.states_ = std::move(states);
  std::set<std::string> unique(g.states_.begin(), g.states_.end());
  if (unique.size() != g.states_.size()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate state names");
  }
  g.out_.resize(g.states_.size());
  for (const auto& [from, label, to] : edges) {
    Edge e{g.index_of(from), label, g.index_of(to)};
    g.edges_.push_back(e);
    g.out_[e.from][label].push_back(e.to);
  }
  if (initial.empty()) {
    for (std::size_t i = 0; i < g.states_.size(); ++i) g.initial_.push_back(i);
  } else {
    for (const auto& s : initial) g.initial_.push_back(g.index_of(s));
  }
  return g;
}

std::size_t LabeledGraph::index_of(const std::string& state) const {
  auto it = std::find(states_.begin(), states_.end(), state);
  if (it == states_.end()) throw Error(ErrorCode::InvalidArgument, "undeclared state '" + state + "'");
  return static_cast<std::size_t>(it - states_.begin());
}

std::set<char> LabeledGraph::alphabet() const {
  std::set<char> out;
  for (const auto& e : edges_) out.insert(e.label);
  return out;
}

const std::vector<std::size_t>& LabeledGraph::next(std::size_t state, char label) const {
  static const std::vector<std::size_t> kNone;
  auto it = out_[state].find(label);
  return it == out_[state].end() ? kNone : it->second;
}

namespace {

using StateSet = std::vector<bool>;

StateSet step(const LabeledGraph& g, const StateSet& from, char label) {
  StateSet to(g.states().size(), false);
  for (std::size_t s = 0; s < from.size(); ++s) {
    if (!from[s]) continue;
    for (auto t : g.next(s, label)) to[t] = true;
  }
  return to;
}

bool any(const StateSet& s) { return std::find(s.begin(), s.end(), true) != s.end(); }

StateSet initial_set(const LabeledGraph& g) {
  StateSet s(g.states().size(), false);
  for (auto i : g.initial()) s[i] = true;
  return s;
}

}  // namespace

bool accepts_factor(const LabeledGraph& g, std::string_view word) {
  const auto alphabet = g.alphabet();
  for (char c : word) {
    if (!alphabet.count(c)) {
      throw Error(ErrorCode::UnknownLetter, std::string("letter '") + c + "' not in the graph alphabet");
    }
  }
  StateSet current = initial_set(g);
  for (char c : word) {
    current = step(g, current, c);
    if (!any(current)) return false;
  }
  return any(current) || word.empty();
}

std::set<Word> morphism_image_language(const LabeledGraph& g, const std::map<char, char>& psi,
                                       std::size_t length) {
  for (char c : g.alphabet()) {
    if (!psi.count(c)) {
      throw Error(ErrorCode::InvalidArgument, std::string("letter map undefined on '") + c + "'");
    }
  }
  // Image word -> set of states reachable by some preimage path.
  std::map<Word, StateSet> frontier{{Word(), initial_set(g)}};
  for (std::size_t k = 0; k < length; ++k) {
    std::map<Word, StateSet> next;
    for (const auto& [word, states] : frontier) {
      for (const auto& e : g.edges()) {
        if (!states[e.from]) continue;
        Word extended = word + psi.at(e.label);
        auto [it, inserted] = next.try_emplace(extended, StateSet(g.states().size(), false));
        it->second[e.to] = true;
      }
    }
    frontier = std::move(next);
  }
  std::set<Word> out;
  for (const auto& [word, states] : frontier)
    if (any(states)) out.insert(word);
  return out;
}

WordSource factor_language(LabeledGraph g, std::string name) {
  return WordSource{std::move(name), [g = std::move(g)](std::size_t n) {
                      std::map<char, char> identity;
                      for (char c : g.alphabet()) identity[c] = c;
                      return morphism_image_language(g, identity, n);
                    }};
}

WordSource image_language(LabeledGraph g, std::map<char, char> psi, std::string name) {
  return WordSource{std::move(name), [g = std::move(g), psi = std::move(psi)](std::size_t n) {
                      return morphism_image_language(g, psi, n);
                    }};
}

WordSource full_shift(std::string alphabet) {
  std::string name = "full shift on {" + alphabet + "}";
  return WordSource{std::move(name), [alphabet = std::move(alphabet)](std::size_t n) {
                      std::set<Word> words{Word()};
                      for (std::size_t k = 0; k < n; ++k) {
                        std::set<Word> next;
                        for (const auto& w : words)
                          for (char c : alphabet) next.insert(w + c);
                        words = std::move(next);
                      }
                      return words;
                    }};
}

LanguageComparison languages_equal_up_to(const WordSource& a, const WordSource& b,
                                         std::size_t max_length) {
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto wa = a.words_of_length(n);
    auto wb = b.words_of_length(n);
    if (wa == wb) continue;
    std::vector<Word> only_a, only_b;
    std::set_difference(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(only_a));
    std::set_difference(wb.begin(), wb.end(), wa.begin(), wa.end(), std::back_inserter(only_b));
    LanguageComparison r;
    r.equal = false;
    if (only_b.empty() || (!only_a.empty() && only_a.front() < only_b.front())) {
      r.counterexample = only_a.front();
      r.present_in = "a";
    } else {
      r.counterexample = only_b.front();
      r.present_in = "b";
    }
    return r;
  }
  return LanguageComparison{};
}

std::string to_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=LR;\n";
  std::set<std::size_t> initial(g.initial().begin(), g.initial().end());
  for (std::size_t i = 0; i < g.states().size(); ++i) {
    os << "  s" << i << " [label=\"" << g.states()[i] << "\""
       << (initial.count(i) ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  s" << e.from << " -> s" << e.to << " [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

namespace fixtures {

LabeledGraph even_gap_automaton() {
  return LabeledGraph::build({"free", "even", "odd"}, {
                                                          {"free", '0', "free"},
                                                          {"free", '1', "even"},
                                                          {"even", '0', "odd"},
                                                          {"odd", '0', "even"},
                                                          {"odd", '1', "even"},
                                                      });
}

LabeledGraph even_gap_cover() {
  return LabeledGraph::build({"(a,0)", "(b,0)", "(b,1)", "(c,0)"}, {
                                                                       {"(a,0)", '0', "(b,0)"},
                                                                       {"(a,0)", '0', "(b,1)"},
                                                                       {"(b,0)", '0', "(a,0)"},
                                                                       {"(b,1)", '1', "(c,0)"},
                                                                       {"(c,0)", '0', "(b,0)"},
                                                                       {"(c,0)", '0', "(b,1)"},
                                                                   });
}

LabeledGraph three_letter_markov_graph() {
  return LabeledGraph::build({"a", "b", "c"}, {
                                                  {"a", 'a', "b"},
                                                  {"a", 'a', "c"},
                                                  {"b", 'b', "a"},
                                                  {"c", 'c', "a"},
                                              });
}

std::map<char, char> three_letter_projection() { return {{'a', '0'}, {'b', '0'}, {'c', '1'}}; }

}  // namespace fixtures

}  // namespace soficonv::automata
