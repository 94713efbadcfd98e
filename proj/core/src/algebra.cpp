#include "soficonv/algebra.hpp"

#include <cmath>
#include <utility>

#include "soficonv/error.hpp"

namespace soficonv {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const std::vector<Integer>& coeffs) {
  Poly p(coeffs.begin(), coeffs.end());
  trim(p);
  return p;
}

// Euclidean division a = q b + r over Q[x]; b must be nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational f = a.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

Poly subtract(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Rational evaluate_poly(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = sgn(evaluate_poly(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::shared_ptr<const NumberField> require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field() || !b.field() || !a.field()->same_as(*b.field())) {
    throw Error(ErrorCode::DescriptorMismatch, "field elements belong to different fields");
  }
  return a.field();
}

}  // namespace

FieldDescriptor FieldDescriptor::integer_base(long b) {
  FieldDescriptor d;
  d.minpoly = {Integer(-b), Integer(1)};
  d.lo = Rational(2 * b - 1, 2);
  d.hi = Rational(2 * b + 1, 2);
  return d;
}

Rational evaluate(const std::vector<Integer>& poly, const Rational& x) {
  return evaluate_poly(Poly(poly.begin(), poly.end()), x);
}

std::size_t count_roots(const std::vector<Integer>& poly, const Rational& lo, const Rational& hi) {
  Poly p = to_poly(poly);
  if (p.size() < 2) return 0;
  Poly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * Rational(static_cast<long>(i)));
  std::vector<Poly> seq{p, dp};
  while (seq.back().size() > 1) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  int v_lo = sign_changes(seq, lo);
  int v_hi = sign_changes(seq, hi);
  return static_cast<std::size_t>(std::abs(v_lo - v_hi));
}

// NumberField ------------------------------------------------------------

NumberField::NumberField(FieldDescriptor descriptor)
    : descriptor_(std::move(descriptor)), lo_(descriptor_.lo), hi_(descriptor_.hi) {
  sign_at_lo_ = sgn(evaluate(descriptor_.minpoly, lo_));
}

std::shared_ptr<const NumberField> NumberField::create(FieldDescriptor d) {
  if (d.minpoly.size() < 2) {
    throw Error(ErrorCode::InvalidDescriptor, "minimal polynomial must have degree >= 1");
  }
  if (d.minpoly.back() != 1) {
    throw Error(ErrorCode::InvalidDescriptor, "minimal polynomial must be monic");
  }
  if (!(d.lo < d.hi)) throw Error(ErrorCode::InvalidDescriptor, "isolating interval needs lo < hi");
  if (!(d.lo > 1)) throw Error(ErrorCode::InvalidDescriptor, "isolating interval needs lo > 1");
  int s_lo = sgn(evaluate(d.minpoly, d.lo));
  int s_hi = sgn(evaluate(d.minpoly, d.hi));
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
    throw Error(ErrorCode::InvalidDescriptor,
                "minimal polynomial must change sign strictly inside the isolating interval");
  }
  if (count_roots(d.minpoly, d.lo, d.hi) != 1) {
    throw Error(ErrorCode::InvalidDescriptor, "isolating interval contains more than one root");
  }
  return std::shared_ptr<const NumberField>(new NumberField(std::move(d)));
}

FieldElement NumberField::zero() const { return from_coeffs({}); }
FieldElement NumberField::one() const { return from_coeffs({Rational(1)}); }

FieldElement NumberField::beta() const {
  if (degree() == 1) return from_coeffs({Rational(-descriptor_.minpoly[0])});
  return from_coeffs({Rational(0), Rational(1)});
}

FieldElement NumberField::from_rational(const Rational& r) const { return from_coeffs({r}); }

FieldElement NumberField::from_coeffs(std::vector<Rational> coeffs) const {
  for (auto& c : coeffs) c.canonicalize();
  if (coeffs.size() > degree()) {
    // Reduce modulo the minimal polynomial.
    Poly p(std::move(coeffs));
    auto [q, r] = divmod(std::move(p), to_poly(descriptor_.minpoly));
    coeffs = std::move(r);
  }
  coeffs.resize(degree(), Rational(0));
  return FieldElement(shared_from_this(), std::move(coeffs));
}

std::pair<Rational, Rational> NumberField::interval() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return {lo_, hi_};
}

void NumberField::bisect_once() const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (lo_ == hi_) return;
  Rational mid = (lo_ + hi_) / 2;
  int s = sgn(evaluate(descriptor_.minpoly, mid));
  if (s == 0) {
    lo_ = mid;
    hi_ = mid;
  } else if (s == sign_at_lo_) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void NumberField::refine_to(const Rational& width) const {
  while (true) {
    auto [lo, hi] = interval();
    if (hi - lo <= width) return;
    bisect_once();
  }
}

int NumberField::sign(const FieldElement& x) const {
  const auto& c = x.coeffs();
  bool rational = true;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) rational = false;
  if (rational) return c.empty() ? 0 : sgn(c[0]);
  if (degree() == 1) return sgn(c[0]);
  while (true) {
    auto [lo, hi] = interval();
    Rational lower = 0, upper = 0;
    Rational lo_pow = 1, hi_pow = 1;
    for (const auto& ci : c) {
      if (ci >= 0) {
        lower += ci * lo_pow;
        upper += ci * hi_pow;
      } else {
        lower += ci * hi_pow;
        upper += ci * lo_pow;
      }
      lo_pow *= lo;
      hi_pow *= hi;
    }
    if (lower > 0) return 1;
    if (upper < 0) return -1;
    if (lo == hi) return sgn(lower);
    bisect_once();
  }
}

double NumberField::approx(const FieldElement& x) const {
  static const Rational kWidth(Integer(1), Integer(Integer(1) << 96));
  refine_to(kWidth);
  auto [lo, hi] = interval();
  Rational mid = (lo + hi) / 2;
  return evaluate_poly(x.coeffs(), mid).get_d();
}

// FieldElement -----------------------------------------------------------

FieldElement::FieldElement(std::shared_ptr<const NumberField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
}

bool FieldElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> FieldElement::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

std::optional<Integer> FieldElement::as_integer() const {
  auto r = as_rational();
  if (!r || r->get_den() != 1) return std::nullopt;
  return Integer(r->get_num());
}

Integer FieldElement::floor() const {
  if (auto r = as_rational()) {
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), r->get_num_mpz_t(), r->get_den_mpz_t());
    return n;
  }
  Integer n(std::floor(approx()));
  while ((*this - Rational(n)).sign() < 0) n -= 1;
  while ((*this - Rational(n + 1)).sign() >= 0) n += 1;
  return n;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  Poly m = to_poly(field_->descriptor().minpoly);
  Poly a = coeffs_;
  trim(a);
  // Extended Euclid: track s with s * a == r (mod m).
  Poly r0 = m, r1 = a;
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = subtract(s0, multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) {
    throw Error(ErrorCode::InvalidDescriptor, "minimal polynomial is reducible; element not invertible");
  }
  Rational scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  return field_->from_coeffs(std::move(s0));
}

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string term;
    if (i == 0) {
      term = soficonv::to_string(mag);
    } else {
      if (mag != 1) term = soficonv::to_string(mag) + "*";
      term += "b";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v = -v;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  auto f = require_same(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
  return FieldElement(f, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  auto f = require_same(a, b);
  std::vector<Rational> c = a.coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
  return FieldElement(f, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  auto f = require_same(a, b);
  return f->from_coeffs(multiply(a.coeffs_, b.coeffs_));
}

FieldElement operator*(const FieldElement& a, const Rational& s) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& v : c) v *= s;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const Rational& s) {
  std::vector<Rational> c = a.coeffs_;
  c[0] += s;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const Rational& s) { return a + Rational(-s); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.field_ || !b.field_ || !a.field_->same_as(*b.field_)) return false;
  return a.coeffs_ == b.coeffs_;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

std::strong_ordering compare(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a == b) return std::strong_ordering::equal;
  int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool CoefficientLess::operator()(const FieldElement& a, const FieldElement& b) const {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return x.size() < y.size();
}

}  // namespace soficonv
