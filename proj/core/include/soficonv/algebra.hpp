#pragma once

#include <compare>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "soficonv/rational.hpp"

namespace soficonv {

/// Monic minimal polynomial (constant coefficient first) together with a
/// rational interval isolating the real root beta > 1 that the field embeds.
struct FieldDescriptor {
  std::vector<Integer> minpoly;
  Rational lo;
  Rational hi;

  std::size_t degree() const { return minpoly.empty() ? 0 : minpoly.size() - 1; }

  /// Integer base b as the degree-one field x - b.
  static FieldDescriptor integer_base(long b);
};

class FieldElement;

/// Q(beta) for a fixed real algebraic beta. Shared by all of its elements;
/// the isolating interval is narrowed lazily and may be refined from several
/// threads at once (any cached interval is valid, narrower is better).
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Validates the descriptor (monic, lo > 1, exactly one root in [lo, hi]).
  static std::shared_ptr<const NumberField> create(FieldDescriptor descriptor);

  const FieldDescriptor& descriptor() const { return descriptor_; }
  std::size_t degree() const { return descriptor_.degree(); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement beta() const;
  FieldElement from_rational(const Rational& r) const;
  /// Element from coefficients c0 + c1 beta + ...; shorter lists are zero-padded.
  FieldElement from_coeffs(std::vector<Rational> coeffs) const;

  /// Exact sign of the real embedding of x.
  int sign(const FieldElement& x) const;

  /// Floating approximation for display only.
  double approx(const FieldElement& x) const;

  /// Current isolating interval (after whatever refinement has happened).
  std::pair<Rational, Rational> interval() const;

  /// Bisects until hi - lo <= width.
  void refine_to(const Rational& width) const;

  bool same_as(const NumberField& other) const { return this == &other; }

 private:
  explicit NumberField(FieldDescriptor descriptor);

  void bisect_once() const;

  FieldDescriptor descriptor_;
  int sign_at_lo_ = 0;
  mutable std::mutex mutex_;
  mutable Rational lo_;
  mutable Rational hi_;
};

/// Immutable element c0 + c1 beta + ... + c_{n-1} beta^{n-1} of Q(beta).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::shared_ptr<const NumberField> field, std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::shared_ptr<const NumberField>& field() const { return field_; }

  bool is_zero() const;

  /// Returns n iff the element is the integer n.
  std::optional<Integer> as_integer() const;
  /// Returns r iff the element is the rational r.
  std::optional<Rational> as_rational() const;

  /// Greatest integer <= the real embedding.
  Integer floor() const;

  FieldElement inverse() const;
  double approx() const { return field_->approx(*this); }
  int sign() const { return field_->sign(*this); }

  /// Human-readable form such as "-1 + b" with b standing for beta.
  std::string to_string() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& s);
  friend FieldElement operator+(const FieldElement& a, const Rational& s);
  friend FieldElement operator-(const FieldElement& a, const Rational& s);

  /// Symbolic equality (same field, same coefficients).
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  std::shared_ptr<const NumberField> field_;
  std::vector<Rational> coeffs_;
};

enum class ArithOp { Add, Sub, Mul };

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Exact order of the real embeddings; equality is detected symbolically.
std::strong_ordering compare(const FieldElement& a, const FieldElement& b);

/// Lexicographic order on coefficient vectors, for use as a map key.
struct CoefficientLess {
  bool operator()(const FieldElement& a, const FieldElement& b) const;
};

/// Evaluates an integer polynomial (constant first) at a rational point.
Rational evaluate(const std::vector<Integer>& poly, const Rational& x);

/// Number of distinct real roots in (lo, hi] via a Sturm sequence.
std::size_t count_roots(const std::vector<Integer>& poly, const Rational& lo, const Rational& hi);

}  // namespace soficonv
