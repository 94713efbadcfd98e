#include "soficonv/linalg.hpp"

#include <utility>

#include "soficonv/error.hpp"

namespace soficonv {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  RationalMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return rref(m).size();
}

template <typename T>
bool is_irreducible(const Matrix<T>& a) {
  if (!a.square()) return false;
  const std::size_t n = a.rows();
  if (n == 0) return false;
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        bool edge = forward ? a(i, j) != 0 : a(j, i) != 0;
        if (edge && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    for (bool s : seen)
      if (!s) return false;
    return true;
  };
  return reaches_all(true) && reaches_all(false);
}

template bool is_irreducible(const Matrix<Rational>&);
template bool is_irreducible(const Matrix<Integer>&);

RationalVector fixed_vector(const RationalMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::InvalidArgument, "fixed_vector needs a square matrix");
  auto basis = nullspace(a - RationalMatrix::identity(a.rows()));
  if (basis.size() != 1) {
    throw Error(ErrorCode::KernelDimension,
                "eigenspace for eigenvalue 1 has dimension " + std::to_string(basis.size()));
  }
  return basis.front();
}

RationalVector left_fixed_vector(const RationalMatrix& a) { return fixed_vector(a.transpose()); }

}  // namespace soficonv
