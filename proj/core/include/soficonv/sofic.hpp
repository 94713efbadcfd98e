#pragma once

#include <cstddef>
#include <vector>

#include "soficonv/linalg.hpp"
#include "soficonv/rational.hpp"

namespace soficonv::sofic {

/// Letters of the symbolic space {0, ..., b-1}.
using Word = std::vector<int>;

/// Homogeneous Markov probability measure: initial vector p, stochastic P.
struct MarkovMeasure {
  RationalVector p;
  RationalMatrix P;

  std::size_t alphabet_size() const { return p.size(); }

  /// Throws unless p is a probability vector and P is a nonnegative
  /// stochastic matrix of matching size. Zero entries of p are accepted.
  void validate() const;
};

/// Cylinder values R_{w1} M_{w2} ... M_{wn} C.
struct LinearRepresentation {
  std::vector<RationalVector> R;
  std::vector<RationalMatrix> M;
  RationalVector C;

  std::size_t alphabet_size() const { return R.size(); }
  std::size_t dimension() const { return C.size(); }

  /// Checks shapes, nonnegativity, C > 0, (sum R) C = 1 and (sum M) C = C.
  void validate() const;
};

/// Total map {0..b-1} -> {0..b'-1}.
struct LetterMap {
  std::vector<int> image;
  int target_size = 0;

  static LetterMap from_image(std::vector<int> image);
  static LetterMap identity(std::size_t b);
  int operator()(int letter) const { return image.at(static_cast<std::size_t>(letter)); }
};

Rational markov_cylinder(const MarkovMeasure& m, const Word& word);

/// Column-splitting representation pi_i = p_i e_i, P_i = P with only column i kept, C = 1.
LinearRepresentation markov_to_linear(const MarkovMeasure& m);

/// Image measure under a letter-to-letter map: R_{i'} = sum of R_i over the
/// preimage of i', likewise for M.
LinearRepresentation push_forward(const LinearRepresentation& lr, const LetterMap& psi);

struct MarkovCover {
  MarkovMeasure markov;
  LetterMap projection;  // i -> floor(i / r)
};

/// Markov measure on r*b letters whose image under i -> floor(i/r) is lr.
MarkovCover linear_to_markov(const LinearRepresentation& lr);

Rational linrep_cylinder(const LinearRepresentation& lr, const Word& word);

/// Sufficient shift-invariance test: sum M irreducible and R_i = R M_i for the
/// positive left eigenvector R of sum M normalised by R C = 1.
bool is_stationary(const LinearRepresentation& lr);

/// All words of the given length over {0..b-1} in lexicographic order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length);

}  // namespace soficonv::sofic
