#pragma once

#include <cstddef>
#include <vector>

#include "soficonv/linalg.hpp"
#include "soficonv/rational.hpp"
#include "soficonv/sofic.hpp"

namespace soficonv::bernoulli {

/// Bernoulli convolution in integer base b with digits {0..d-1} drawn with
/// probabilities p. The matrices have size a + 1 = ceil((d-1)/(b-1)).
struct BernoulliSpec {
  int b = 2;
  int d = 3;
  RationalVector p;

  static BernoulliSpec uniform(int b, int d);

  /// Throws unless d >= b >= 2, p has d positive entries summing to 1.
  void validate() const;
  int a() const;
  std::size_t size() const { return static_cast<std::size_t>(a() + 1); }
  bool is_uniform() const;
  /// p_i with p_i = 0 outside {0..d-1}.
  Rational prob(long i) const;
};

/// M_j(q, q') = p_{j + b q - q'} for j = 0..b-1.
std::vector<RationalMatrix> build_matrices(const BernoulliSpec& spec);

/// Positive C with (sum_j M_j) C = C and entries summing to 1; C_q is the
/// mass of [q, q+1).
RationalVector stationary_vector(const BernoulliSpec& spec);

/// Precomputed matrices and eigenvector; evaluation is then a matrix chain.
class BernoulliMeasure {
 public:
  explicit BernoulliMeasure(BernoulliSpec spec);

  const BernoulliSpec& spec() const { return spec_; }
  const std::vector<RationalMatrix>& matrices() const { return matrices_; }
  const RationalVector& C() const { return C_; }

  /// Mass of q + I_{e1...ek} for the b-adic interval I of the digit word.
  Rational interval_measure(int q, const std::vector<int>& digits) const;

  /// Column (eta(q + I))_q = M_{e1} ... M_{ek} C.
  RationalVector interval_column(const std::vector<int>& digits) const;

  /// eta(q + I_w) / eta(q + [0,1)) as a linear representation over {0..b-1}.
  sofic::LinearRepresentation symbolic_representation(int q) const;

  /// sum over q of eta(q + I_w) as a linear representation over {0..b-1}.
  sofic::LinearRepresentation summed_representation() const;

 private:
  BernoulliSpec spec_;
  std::vector<RationalMatrix> matrices_;
  RationalVector C_;
};

/// Number of ways to write n = sum w_i b^i with digits in {0..d-1}.
Integer count_representations(const Integer& n, int b, int d);
/// Same with exactly k digit positions (higher digits zero). Zero for n < 0.
Integer count_representations_k(const Integer& n, int k, int b, int d);

/// d^k M_{e1}...M_{ek} for uniform p, as an integer matrix whose entry (q,q')
/// equals N_k(n + q b^k - q'), n the value of the word.
IntegerMatrix matrix_count_table(const BernoulliSpec& spec, const std::vector<int>& word);

/// One move of the integer-base normalization transducer: reading input digit
/// w in state q, with q + w = b q' + e, emits e and moves to q'.
struct TransducerEdge {
  int from;
  int input;
  int output;
  int to;
};

/// All edges over states {0..a}.
std::vector<TransducerEdge> integer_transducer(int b, int d);

/// Canonical base-b digits (most significant first, no leading zeros) of the
/// value of an arbitrary digit word over {0..d-1}, computed by running the
/// transducer from state 0 on the digits least significant first.
std::vector<int> normalize_digits(const std::vector<int>& digits, int b, int d);

/// Markov chain on (a+1) b states whose projection i -> floor(i/(a+1)) gives
/// eta'[e1..ek] = sum_q eta(q + I_{ek...e1}).
struct MarkovExport {
  sofic::MarkovMeasure markov;
  sofic::LetterMap projection;
  /// The block-repeated vector (C, ..., C) scaled by 1/b; started from it the
  /// chain reproduces eta' after one leading symbol: nu[e w] = eta'[w] / b.
  RationalVector block_initial;
  int block_initial_scale = 1;
};

MarkovExport symbolic_markov_export(const BernoulliSpec& spec);

}  // namespace soficonv::bernoulli
