#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "soficonv/algebra.hpp"
#include "soficonv/linalg.hpp"
#include "soficonv/sofic.hpp"

namespace soficonv::pisot {

using Word = std::vector<int>;

inline constexpr std::size_t kDefaultStateCap = 10000;

/// Base beta > 1 of Q(beta) with digit alphabet {0..d-1}, d >= ceil(beta).
struct PisotBase {
  std::shared_ptr<const NumberField> field;
  int d = 2;
  int ceil_beta = 2;
  FieldElement beta;
  FieldElement alpha;  // (d-1)/(beta-1), right end of the support

  static PisotBase create(const FieldDescriptor& descriptor, int d);
};

/// Carry windows: (-1, alpha], (-1, alpha) and (-alpha, alpha).
enum class Window { HalfOpenRightClosed, Open, Symmetric };

std::string window_name(Window w);
Window parse_window(const std::string& text);

bool in_window(const PisotBase& base, Window window, const FieldElement& q);

/// Breadth-first closure of {0} under q -> beta q - w + e, w in {0..d-1},
/// e in {0..output_digits-1}, keeping only values inside the window. States
/// are listed in discovery order. output_digits = 0 means ceil(beta).
std::vector<FieldElement> carry_states(const PisotBase& base, Window window,
                                       std::size_t state_cap = kDefaultStateCap,
                                       int output_digits = 0);

struct TransducerEdge {
  std::size_t from;
  int input;   // omega
  int output;  // epsilon
  std::size_t to;
};

struct Transducer {
  std::vector<FieldElement> states;
  std::vector<TransducerEdge> edges;
  Window window = Window::HalfOpenRightClosed;

  /// Index of a state, or states.size() if absent.
  std::size_t index_of(const FieldElement& q) const;
};

Transducer build_transducer(const PisotBase& base, Window window,
                            std::size_t state_cap = kDefaultStateCap, int output_digits = 0);

/// Purely periodic quasi-expansion of 1, one period alpha_1..alpha_T.
struct QuasiExpansion {
  Word digits;
  std::size_t period() const { return digits.size(); }
};

/// Greedy expansion of 1; throws NotFiniteRenyi when it does not terminate.
QuasiExpansion quasi_expansion(const PisotBase& base, std::size_t iteration_cap = 1000);

/// Checks sum over the periodic word of alpha_i beta^-i = 1 and that no shift
/// of the periodic word exceeds it.
bool verify_quasi_expansion(const PisotBase& base, const QuasiExpansion& q);

/// The prefix-free set W: alpha_1..alpha_T and every alpha_1..alpha_{i-1} a
/// with a < alpha_i.
std::vector<Word> word_set(const QuasiExpansion& q);
std::vector<Word> word_set(const PisotBase& base);

/// Splits a concatenation of W-words; throws NotWParseable otherwise.
std::vector<std::size_t> parse_w(const std::vector<Word>& w_set, const Word& word);

/// Every suffix, padded with zeros, is strictly below the periodic quasi-expansion.
bool is_admissible(const Word& word, const QuasiExpansion& q);
bool is_admissible(const Word& word, const PisotBase& base);

/// Exact value sum_i w_i beta^{-i} of a fractional digit word.
FieldElement fractional_value(const PisotBase& base, const Word& word);

/// Exact value sum_i w_i beta^{k-i} of a digit word read as an integer-like polynomial.
FieldElement polynomial_value(const PisotBase& base, const Word& word);

/// Counts omega-words over {0..d-1} with the same polynomial value as a word
/// by products of the 0/1 matrices N_l on the symmetric-window carry states.
class RedundancyCounter {
 public:
  explicit RedundancyCounter(const PisotBase& base, std::size_t state_cap = kDefaultStateCap);

  const std::vector<FieldElement>& states() const { return states_; }
  const std::vector<IntegerMatrix>& matrices() const { return N_; }

  Integer count(const Word& word) const;

 private:
  int d_;
  std::vector<FieldElement> states_;
  std::vector<IntegerMatrix> N_;
};

Integer count_redundant(const Word& word, const PisotBase& base, std::size_t state_cap = kDefaultStateCap);

/// Normal form of sum_i w_i beta^{-i}: integer-part digits (most significant
/// first, shift() of them) followed by fractional digits.
struct NormalForm {
  Word integer_part;
  Word fractional_part;

  std::size_t shift() const { return integer_part.size(); }
  Word digits() const;
  std::string to_string() const;
};

/// Greedy beta-expansion of the value of an arbitrary digit word over
/// {0..d-1}. The fractional part is padded with zeros to the input length.
/// The result is checked admissible, value-equal, and the output label of a
/// path from 0 to 0 in the (-1, alpha] transducer.
NormalForm normalize_pisot(const Word& word, const PisotBase& base, std::size_t iteration_cap = 1000,
                           std::size_t state_cap = kDefaultStateCap);

/// Carries of the path 0 -> ... -> 0 in the (-1, alpha] transducer reading
/// 0..0 word with output nf; throws ConditionViolated when no such path exists.
std::vector<std::size_t> reconstruct_path(const Transducer& t, const PisotBase& base, const Word& word,
                                          const NormalForm& nf);

/// Matrices M_l of the Bernoulli convolution on the open-window states.
struct PisotMeasure {
  PisotBase base;
  RationalVector p;
  std::vector<FieldElement> states;
  std::vector<RationalMatrix> M;  // l = 0..ceil(beta)-1
  QuasiExpansion quasi;
  std::vector<Word> w_set;
  std::vector<RationalMatrix> M_w;  // aligned with w_set
  RationalVector C;
  /// False when C is only known up to a positive factor.
  bool absolute_scale = true;

  RationalMatrix word_matrix(const Word& word) const;

  /// E_i M_w C for a W-concatenation w.
  Rational interval_measure(std::size_t i, const Word& word) const;
  /// E_i M_w C / C_i, independent of the scale of C.
  Rational normalized_measure(std::size_t i, const Word& word) const;

  /// [[M_w ...]; ...; [M_w ...]] with |W| identical block rows.
  RationalMatrix block_transition_matrix() const;

  /// eta_i as a linear representation over the letters of W.
  sofic::LinearRepresentation symbolic_representation(std::size_t i) const;
};

PisotMeasure measure_matrices(const PisotBase& base, const RationalVector& p,
                              std::size_t state_cap = kDefaultStateCap);

}  // namespace soficonv::pisot
