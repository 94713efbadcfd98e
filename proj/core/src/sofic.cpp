#include "soficonv/sofic.hpp"

#include <algorithm>
#include <string>

#include "soficonv/error.hpp"

namespace soficonv::sofic {

namespace {

void check_word(const Word& word, std::size_t b) {
  if (word.empty()) throw Error(ErrorCode::EmptyWord, "cylinder of the empty word is not defined");
  for (int w : word) {
    if (w < 0 || static_cast<std::size_t>(w) >= b) {
      throw Error(ErrorCode::LetterOutOfRange, "letter " + std::to_string(w) + " outside alphabet of size " +
                                                   std::to_string(b));
    }
  }
}

}  // namespace

void MarkovMeasure::validate() const {
  const std::size_t b = p.size();
  if (b == 0 || P.rows() != b || P.cols() != b) {
    throw Error(ErrorCode::InvalidArgument, "Markov measure needs p of length b and a b x b matrix");
  }
  for (const auto& x : p)
    if (x < 0) throw Error(ErrorCode::NotPositive, "initial vector has a negative entry");
  if (sum(p) != 1) throw Error(ErrorCode::NotStochastic, "initial vector does not sum to 1");
  for (std::size_t i = 0; i < b; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < b; ++j) {
      if (P(i, j) < 0) throw Error(ErrorCode::NotPositive, "transition matrix has a negative entry");
      row += P(i, j);
    }
    if (row != 1) throw Error(ErrorCode::NotStochastic, "row " + std::to_string(i) + " does not sum to 1");
  }
}

void LinearRepresentation::validate() const {
  const std::size_t b = R.size();
  const std::size_t r = C.size();
  if (b == 0 || M.size() != b || r == 0) {
    throw Error(ErrorCode::InvalidArgument, "representation needs b row vectors, b matrices and C");
  }
  for (std::size_t i = 0; i < b; ++i) {
    if (R[i].size() != r || M[i].rows() != r || M[i].cols() != r) {
      throw Error(ErrorCode::InvalidArgument, "representation dimensions disagree");
    }
    for (const auto& x : R[i])
      if (x < 0) throw Error(ErrorCode::NotPositive, "R has a negative entry");
    for (const auto& x : M[i].data())
      if (x < 0) throw Error(ErrorCode::NotPositive, "M has a negative entry");
  }
  for (const auto& c : C)
    if (c <= 0) throw Error(ErrorCode::NotPositive, "C must be strictly positive");
  RationalVector r_sum(r, Rational(0));
  RationalMatrix m_sum(r, r);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < r; ++j) r_sum[j] += R[i][j];
    m_sum += M[i];
  }
  if (dot(r_sum, C) != 1) throw Error(ErrorCode::ConditionViolated, "(sum R) C != 1");
  if (m_sum * C != C) throw Error(ErrorCode::ConditionViolated, "(sum M) C != C");
}

LetterMap LetterMap::from_image(std::vector<int> image) {
  LetterMap m;
  for (int v : image)
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "letter map values must be nonnegative");
  m.target_size = image.empty() ? 0 : *std::max_element(image.begin(), image.end()) + 1;
  m.image = std::move(image);
  return m;
}

LetterMap LetterMap::identity(std::size_t b) {
  std::vector<int> image(b);
  for (std::size_t i = 0; i < b; ++i) image[i] = static_cast<int>(i);
  return from_image(std::move(image));
}

Rational markov_cylinder(const MarkovMeasure& m, const Word& word) {
  check_word(word, m.alphabet_size());
  Rational value = m.p[static_cast<std::size_t>(word[0])];
  for (std::size_t k = 1; k < word.size() && value != 0; ++k) {
    value *= m.P(static_cast<std::size_t>(word[k - 1]), static_cast<std::size_t>(word[k]));
  }
  return value;
}

LinearRepresentation markov_to_linear(const MarkovMeasure& m) {
  m.validate();
  const std::size_t b = m.alphabet_size();
  LinearRepresentation lr;
  for (std::size_t i = 0; i < b; ++i) {
    RationalVector pi(b, Rational(0));
    pi[i] = m.p[i];
    lr.R.push_back(std::move(pi));
    RationalMatrix Pi(b, b);
    for (std::size_t row = 0; row < b; ++row) Pi(row, i) = m.P(row, i);
    lr.M.push_back(std::move(Pi));
  }
  lr.C.assign(b, Rational(1));
  return lr;
}

LinearRepresentation push_forward(const LinearRepresentation& lr, const LetterMap& psi) {
  if (psi.image.size() != lr.alphabet_size()) {
    throw Error(ErrorCode::InvalidArgument, "letter map must be defined on the whole alphabet");
  }
  const std::size_t r = lr.dimension();
  const auto target = static_cast<std::size_t>(psi.target_size);
  LinearRepresentation out;
  out.R.assign(target, RationalVector(r, Rational(0)));
  out.M.assign(target, RationalMatrix(r, r));
  out.C = lr.C;
  for (std::size_t i = 0; i < lr.alphabet_size(); ++i) {
    auto j = static_cast<std::size_t>(psi(static_cast<int>(i)));
    for (std::size_t k = 0; k < r; ++k) out.R[j][k] += lr.R[i][k];
    out.M[j] += lr.M[i];
  }
  return out;
}

MarkovCover linear_to_markov(const LinearRepresentation& lr) {
  lr.validate();
  const std::size_t b = lr.alphabet_size();
  const std::size_t r = lr.dimension();
  const std::size_t n = r * b;
  // Conjugating by diag(C) makes the column vector all ones; then letter i
  // owns the block of states i*r .. i*r + r - 1.
  MarkovCover cover;
  cover.markov.p.assign(n, Rational(0));
  cover.markov.P = RationalMatrix(n, n);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t k = 0; k < r; ++k) cover.markov.p[i * r + k] = lr.R[i][k] * lr.C[k];
    for (std::size_t row_block = 0; row_block < b; ++row_block)
      for (std::size_t u = 0; u < r; ++u)
        for (std::size_t v = 0; v < r; ++v) {
          cover.markov.P(row_block * r + u, i * r + v) = lr.M[i](u, v) * lr.C[v] / lr.C[u];
        }
  }
  std::vector<int> image(n);
  for (std::size_t s = 0; s < n; ++s) image[s] = static_cast<int>(s / r);
  cover.projection = LetterMap::from_image(std::move(image));
  cover.projection.target_size = static_cast<int>(b);
  return cover;
}

Rational linrep_cylinder(const LinearRepresentation& lr, const Word& word) {
  check_word(word, lr.alphabet_size());
  RationalVector row = lr.R[static_cast<std::size_t>(word[0])];
  for (std::size_t k = 1; k < word.size(); ++k) row = row * lr.M[static_cast<std::size_t>(word[k])];
  return dot(row, lr.C);
}

bool is_stationary(const LinearRepresentation& lr) {
  lr.validate();
  const std::size_t r = lr.dimension();
  RationalMatrix m_sum(r, r);
  for (const auto& m : lr.M) m_sum += m;
  if (!is_irreducible(m_sum)) return false;
  RationalVector left;
  try {
    left = left_fixed_vector(m_sum);
  } catch (const Error&) {
    return false;
  }
  Rational scale = dot(left, lr.C);
  if (scale == 0) return false;
  for (auto& x : left) x /= scale;
  for (const auto& x : left)
    if (x <= 0) return false;
  for (std::size_t i = 0; i < lr.alphabet_size(); ++i)
    if (left * lr.M[i] != lr.R[i]) return false;
  return true;
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length) {
  std::vector<Word> words{Word()};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    next.reserve(words.size() * alphabet_size);
    for (const auto& w : words)
      for (std::size_t c = 0; c < alphabet_size; ++c) {
        Word e = w;
        e.push_back(static_cast<int>(c));
        next.push_back(std::move(e));
      }
    words = std::move(next);
  }
  return words;
}

}  // namespace soficonv::sofic
