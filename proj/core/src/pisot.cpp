#include "soficonv/pisot.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "soficonv/error.hpp"

namespace soficonv::pisot {

namespace {

using StateIndex = std::map<FieldElement, std::size_t, CoefficientLess>;

void check_letters(const Word& word, int limit, const char* what) {
  for (int x : word) {
    if (x < 0 || x >= limit) {
      throw Error(ErrorCode::LetterOutOfRange, std::string(what) + " " + std::to_string(x) +
                                                   " outside {0.." + std::to_string(limit - 1) + "}");
    }
  }
}

Integer ceiling(const FieldElement& x) {
  if (auto n = x.as_integer()) return *n;
  return x.floor() + 1;
}

StateIndex index_states(const std::vector<FieldElement>& states) {
  StateIndex idx;
  for (std::size_t i = 0; i < states.size(); ++i) idx.emplace(states[i], i);
  return idx;
}

}  // namespace

PisotBase PisotBase::create(const FieldDescriptor& descriptor, int d) {
  PisotBase base;
  base.field = NumberField::create(descriptor);
  base.beta = base.field->beta();
  Integer c = ceiling(base.beta);
  if (!c.fits_sint_p()) throw Error(ErrorCode::InvalidArgument, "base too large");
  base.ceil_beta = static_cast<int>(c.get_si());
  if (d < base.ceil_beta) {
    throw Error(ErrorCode::InvalidArgument,
                "digit count d = " + std::to_string(d) + " is below ceil(beta) = " + std::to_string(base.ceil_beta));
  }
  base.d = d;
  base.alpha = (base.beta - Rational(1)).inverse() * Rational(d - 1);
  return base;
}

std::string window_name(Window w) {
  switch (w) {
    case Window::HalfOpenRightClosed:
      return "half-open";
    case Window::Open:
      return "open";
    case Window::Symmetric:
      return "symmetric";
  }
  return "?";
}

Window parse_window(const std::string& text) {
  if (text == "half-open" || text == "HALF_OPEN_RIGHT_CLOSED" || text == "half_open") {
    return Window::HalfOpenRightClosed;
  }
  if (text == "open" || text == "OPEN") return Window::Open;
  if (text == "symmetric" || text == "SYMMETRIC") return Window::Symmetric;
  throw Error(ErrorCode::ParseError, "unknown window '" + text + "' (half-open, open, symmetric)");
}

bool in_window(const PisotBase& base, Window window, const FieldElement& q) {
  const int upper = (base.alpha - q).sign();
  switch (window) {
    case Window::HalfOpenRightClosed:
      return (q + Rational(1)).sign() > 0 && upper >= 0;
    case Window::Open:
      return (q + Rational(1)).sign() > 0 && upper > 0;
    case Window::Symmetric:
      return (q + base.alpha).sign() > 0 && upper > 0;
  }
  return false;
}

std::vector<FieldElement> carry_states(const PisotBase& base, Window window, std::size_t state_cap,
                                       int output_digits) {
  const int e_count = output_digits > 0 ? output_digits : base.ceil_beta;
  std::vector<FieldElement> states{base.field->zero()};
  StateIndex seen{{states.front(), 0}};
  for (std::size_t head = 0; head < states.size(); ++head) {
    const FieldElement bq = base.beta * states[head];
    for (int w = 0; w < base.d; ++w)
      for (int e = 0; e < e_count; ++e) {
        FieldElement next = bq + Rational(e - w);
        if (seen.count(next) || !in_window(base, window, next)) continue;
        seen.emplace(next, states.size());
        states.push_back(std::move(next));
        if (states.size() > state_cap) {
          throw Error(ErrorCode::StateCapExceeded,
                      "carry closure exceeds the state cap of " + std::to_string(state_cap));
        }
      }
  }
  return states;
}

std::size_t Transducer::index_of(const FieldElement& q) const {
  auto it = std::find(states.begin(), states.end(), q);
  return static_cast<std::size_t>(it - states.begin());
}

Transducer build_transducer(const PisotBase& base, Window window, std::size_t state_cap, int output_digits) {
  const int e_count = output_digits > 0 ? output_digits : base.ceil_beta;
  Transducer t;
  t.window = window;
  t.states = carry_states(base, window, state_cap, output_digits);
  const StateIndex idx = index_states(t.states);
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    const FieldElement bq = base.beta * t.states[i];
    for (int w = 0; w < base.d; ++w)
      for (int e = 0; e < e_count; ++e) {
        auto it = idx.find(bq + Rational(e - w));
        if (it != idx.end()) t.edges.push_back({i, w, e, it->second});
      }
  }
  return t;
}

QuasiExpansion quasi_expansion(const PisotBase& base, std::size_t iteration_cap) {
  FieldElement r = base.field->one();
  std::map<FieldElement, std::size_t, CoefficientLess> seen;
  Word digits;
  for (std::size_t i = 0; i < iteration_cap; ++i) {
    FieldElement x = base.beta * r;
    Integer t = x.floor();
    r = x - Rational(t);
    digits.push_back(static_cast<int>(t.get_si()));
    if (r.is_zero()) {
      digits.back() -= 1;
      return QuasiExpansion{std::move(digits)};
    }
    if (!seen.emplace(r, i).second) {
      throw Error(ErrorCode::NotFiniteRenyi,
                  "greedy expansion of 1 is infinite (remainder " + r.to_string() + " repeats)");
    }
  }
  throw Error(ErrorCode::NotFiniteRenyi,
              "greedy expansion of 1 did not terminate within " + std::to_string(iteration_cap) + " digits");
}

bool verify_quasi_expansion(const PisotBase& base, const QuasiExpansion& q) {
  const std::size_t T = q.period();
  if (T == 0) return false;
  // sum_{i<=T} a_i beta^{T-i} = beta^T - 1 is the periodic sum equal to 1.
  FieldElement lhs = polynomial_value(base, q.digits);
  FieldElement power = base.field->one();
  for (std::size_t i = 0; i < T; ++i) power = power * base.beta;
  if (!(lhs == power - Rational(1))) return false;
  for (std::size_t s = 1; s < T; ++s) {
    for (std::size_t j = 0; j < T; ++j) {
      int shifted = q.digits[(s + j) % T];
      if (shifted < q.digits[j]) break;
      if (shifted > q.digits[j]) return false;
    }
  }
  return true;
}

std::vector<Word> word_set(const QuasiExpansion& q) {
  std::vector<Word> out;
  Word prefix;
  for (int a : q.digits) {
    for (int x = 0; x < a; ++x) {
      Word w = prefix;
      w.push_back(x);
      out.push_back(std::move(w));
    }
    prefix.push_back(a);
  }
  out.push_back(prefix);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i == j || out[i].size() > out[j].size()) continue;
      if (std::equal(out[i].begin(), out[i].end(), out[j].begin())) {
        throw Error(ErrorCode::ConditionViolated, "word set W is not prefix-free");
      }
    }
  return out;
}

std::vector<Word> word_set(const PisotBase& base) { return word_set(quasi_expansion(base)); }

std::vector<std::size_t> parse_w(const std::vector<Word>& w_set, const Word& word) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t match = w_set.size();
    for (std::size_t k = 0; k < w_set.size(); ++k) {
      const Word& w = w_set[k];
      if (pos + w.size() <= word.size() && std::equal(w.begin(), w.end(), word.begin() + static_cast<std::ptrdiff_t>(pos))) {
        match = k;
        break;
      }
    }
    if (match == w_set.size()) {
      throw Error(ErrorCode::NotWParseable,
                  "word " + format_digits(word) + " is not a concatenation of W-words at position " +
                      std::to_string(pos));
    }
    out.push_back(match);
    pos += w_set[match].size();
  }
  return out;
}

bool is_admissible(const Word& word, const QuasiExpansion& q) {
  const std::size_t T = q.period();
  for (std::size_t k = 0; k < word.size(); ++k) {
    const std::size_t rest = word.size() - k;
    bool below = false;
    for (std::size_t j = 0; j < rest + T; ++j) {
      int a = j < rest ? word[k + j] : 0;
      int b = q.digits[j % T];
      if (a < b) {
        below = true;
        break;
      }
      if (a > b) return false;
    }
    if (!below) return false;
  }
  return true;
}

bool is_admissible(const Word& word, const PisotBase& base) { return is_admissible(word, quasi_expansion(base)); }

FieldElement fractional_value(const PisotBase& base, const Word& word) {
  const FieldElement inv = base.beta.inverse();
  FieldElement v = base.field->zero();
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = (v + Rational(*it)) * inv;
  return v;
}

FieldElement polynomial_value(const PisotBase& base, const Word& word) {
  FieldElement v = base.field->zero();
  for (int x : word) v = v * base.beta + Rational(x);
  return v;
}

RedundancyCounter::RedundancyCounter(const PisotBase& base, std::size_t state_cap)
    : d_(base.d), states_(carry_states(base, Window::Symmetric, state_cap, base.d)) {
  const std::size_t n = states_.size();
  for (int l = 0; l < d_; ++l) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const FieldElement bi = base.beta * states_[i] + Rational(l);
      for (std::size_t j = 0; j < n; ++j) {
        auto w = (bi - states_[j]).as_integer();
        if (w && *w >= 0 && *w < d_) m(i, j) = 1;
      }
    }
    N_.push_back(std::move(m));
  }
}

Integer RedundancyCounter::count(const Word& word) const {
  check_letters(word, d_, "digit");
  std::vector<Integer> row(states_.size(), Integer(0));
  row[0] = 1;
  for (int l : word) row = row * N_[static_cast<std::size_t>(l)];
  return row[0];
}

Integer count_redundant(const Word& word, const PisotBase& base, std::size_t state_cap) {
  return RedundancyCounter(base, state_cap).count(word);
}

Word NormalForm::digits() const {
  Word out = integer_part;
  out.insert(out.end(), fractional_part.begin(), fractional_part.end());
  return out;
}

std::string NormalForm::to_string() const {
  std::string ip = integer_part.empty() ? "0" : format_digits(integer_part);
  return ip + "." + format_digits(fractional_part);
}

NormalForm normalize_pisot(const Word& word, const PisotBase& base, std::size_t iteration_cap,
                           std::size_t state_cap) {
  check_letters(word, base.d, "digit");
  const FieldElement x = fractional_value(base, word);
  NormalForm nf;
  if (x.is_zero()) {
    nf.fractional_part.assign(word.size(), 0);
    return nf;
  }

  std::size_t shift = 0;
  FieldElement scale = base.field->one();  // beta^shift
  while (compare(x, scale) >= 0) {
    scale = scale * base.beta;
    ++shift;
  }

  FieldElement r = x * scale.inverse();
  Word digits;
  std::map<FieldElement, std::size_t, CoefficientLess> seen;
  while (!r.is_zero()) {
    if (digits.size() >= iteration_cap + shift || !seen.emplace(r, digits.size()).second) {
      throw Error(ErrorCode::NotFiniteExpansion, "greedy expansion of " + x.to_string() + " is not finite");
    }
    FieldElement y = base.beta * r;
    Integer t = y.floor();
    r = y - Rational(t);
    digits.push_back(static_cast<int>(t.get_si()));
  }
  if (digits.size() < shift) digits.resize(shift, 0);
  nf.integer_part.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(shift));
  nf.fractional_part.assign(digits.begin() + static_cast<std::ptrdiff_t>(shift), digits.end());
  if (nf.fractional_part.size() < word.size()) nf.fractional_part.resize(word.size(), 0);

  if (!is_admissible(nf.digits(), quasi_expansion(base, iteration_cap))) {
    throw Error(ErrorCode::ConditionViolated, "greedy output is not admissible");
  }
  if (!(polynomial_value(base, nf.integer_part) + fractional_value(base, nf.fractional_part) == x)) {
    throw Error(ErrorCode::ConditionViolated, "greedy output changes the value");
  }
  Transducer t = build_transducer(base, Window::HalfOpenRightClosed, state_cap);
  reconstruct_path(t, base, word, nf);
  return nf;
}

std::vector<std::size_t> reconstruct_path(const Transducer& t, const PisotBase& base, const Word& word,
                                          const NormalForm& nf) {
  const StateIndex idx = index_states(t.states);
  const long h = static_cast<long>(word.size());
  const long shift = static_cast<long>(nf.shift());
  const long len = std::max(h, static_cast<long>(nf.fractional_part.size()));
  FieldElement q = base.field->zero();
  std::vector<std::size_t> path{idx.at(q)};
  for (long i = 1 - shift; i <= len; ++i) {
    int w = (i >= 1 && i <= h) ? word[static_cast<std::size_t>(i - 1)] : 0;
    int e = 0;
    if (i <= 0) {
      e = nf.integer_part[static_cast<std::size_t>(i + shift - 1)];
    } else if (i <= static_cast<long>(nf.fractional_part.size())) {
      e = nf.fractional_part[static_cast<std::size_t>(i - 1)];
    }
    q = base.beta * q + Rational(e - w);
    auto it = idx.find(q);
    if (it == idx.end()) {
      throw Error(ErrorCode::ConditionViolated, "carry " + q.to_string() + " is not a transducer state");
    }
    path.push_back(it->second);
  }
  if (!q.is_zero()) throw Error(ErrorCode::ConditionViolated, "path does not return to carry 0");
  return path;
}

RationalMatrix PisotMeasure::word_matrix(const Word& word) const {
  check_letters(word, base.ceil_beta, "letter");
  RationalMatrix acc = RationalMatrix::identity(states.size());
  for (int l : word) acc = acc * M[static_cast<std::size_t>(l)];
  return acc;
}

Rational PisotMeasure::interval_measure(std::size_t i, const Word& word) const {
  if (i >= states.size()) throw Error(ErrorCode::InvalidArgument, "state index out of range");
  parse_w(w_set, word);
  return dot(word_matrix(word).row(i), C);
}

Rational PisotMeasure::normalized_measure(std::size_t i, const Word& word) const {
  return interval_measure(i, word) / C.at(i);
}

RationalMatrix PisotMeasure::block_transition_matrix() const {
  const std::size_t n = states.size();
  const std::size_t m = w_set.size();
  RationalMatrix out(n * m, n * m);
  for (std::size_t br = 0; br < m; ++br)
    for (std::size_t bc = 0; bc < m; ++bc)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(br * n + i, bc * n + j) = M_w[bc](i, j);
  return out;
}

sofic::LinearRepresentation PisotMeasure::symbolic_representation(std::size_t i) const {
  if (i >= states.size()) throw Error(ErrorCode::InvalidArgument, "state index out of range");
  sofic::LinearRepresentation lr;
  lr.M = M_w;
  lr.C = C;
  for (const auto& mw : M_w) {
    RationalVector r = mw.row(i);
    for (auto& x : r) x /= C[i];
    lr.R.push_back(std::move(r));
  }
  return lr;
}

PisotMeasure measure_matrices(const PisotBase& base, const RationalVector& p, std::size_t state_cap) {
  if (p.size() != static_cast<std::size_t>(base.d)) {
    throw Error(ErrorCode::InvalidArgument, "probability vector must have d entries");
  }
  for (const auto& x : p)
    if (x <= 0) throw Error(ErrorCode::NotPositive, "digit probabilities must be positive");
  if (sum(p) != 1) throw Error(ErrorCode::NotStochastic, "digit probabilities must sum to 1");

  PisotMeasure pm;
  pm.base = base;
  pm.p = p;
  pm.states = carry_states(base, Window::Open, state_cap);
  const std::size_t n = pm.states.size();
  for (int l = 0; l < base.ceil_beta; ++l) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const FieldElement bi = base.beta * pm.states[i] + Rational(l);
      for (std::size_t j = 0; j < n; ++j) {
        auto w = (bi - pm.states[j]).as_integer();
        if (w && *w >= 0 && *w < base.d) m(i, j) = p[w->get_ui()];
      }
    }
    pm.M.push_back(std::move(m));
  }

  pm.quasi = quasi_expansion(base);
  pm.w_set = word_set(pm.quasi);
  RationalMatrix total(n, n);
  for (const auto& w : pm.w_set) {
    pm.M_w.push_back(pm.word_matrix(w));
    total += pm.M_w.back();
  }
  if (!is_irreducible(total)) throw Error(ErrorCode::Reducible, "sum of the W-matrices is reducible");
  pm.C = fixed_vector(total);
  if (pm.C[0] < 0)
    for (auto& x : pm.C) x = -x;
  for (const auto& x : pm.C)
    if (x <= 0) throw Error(ErrorCode::NotPositive, "eigenvector C is not positive");

  // Absolute scale: the unit intervals [n, n+1) for integers 0 <= n < alpha
  // partition the support, so their masses sum to 1 when all are states.
  const StateIndex idx = index_states(pm.states);
  Rational total_mass = 0;
  const Integer top = ceiling(base.alpha);
  for (Integer k = 0; k < top; ++k) {
    auto it = idx.find(base.field->from_rational(Rational(k)));
    if (it == idx.end()) {
      pm.absolute_scale = false;
      break;
    }
    total_mass += pm.C[it->second];
  }
  const Rational norm = pm.absolute_scale ? total_mass : pm.C[0];
  for (auto& x : pm.C) x /= norm;
  return pm;
}

}  // namespace soficonv::pisot
