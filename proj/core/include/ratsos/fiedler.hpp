#pragma once

#include <optional>
#include <vector>

#include "ratsos/matrix.hpp"
#include "ratsos/multiquadratic.hpp"
#include "ratsos/radicand.hpp"
#include "ratsos/unipoly.hpp"

namespace ratsos {

/// Symmetric A = diag(b) - delta * d d^T with det(xI - A) = u, where
/// delta * v'(b_k) * d_k^2 = u(b_k) and v = prod (x - b_k).
struct FiedlerData {
  UniPoly u;
  std::vector<Rat> nodes;
  int delta = 1;
  /// l_k = delta * u(b_k) / v'(b_k) = d_k^2.
  std::vector<Rat> l;
  /// d_k = coefficient * sqrt(radicand).
  std::vector<RadicalForm> d;
  /// Radicands of d in first-appearance order.
  ContextPtr context;
  Matrix<MQElem> A;
  bool totally_real = false;
};

/// Interlacing nodes for totally real u: one midpoint between each pair of
/// consecutive isolating intervals and ceil(cauchy_bound) + 1 above all roots.
std::vector<Rat> interlacing_nodes(const UniPoly& u);

/// Integers 0, 1, 2, ... skipping roots of u, first r of them.
std::vector<Rat> integer_nodes(const UniPoly& u);

/// Builds and checks the Fiedler data for monic squarefree u. Without
/// nodes, totally real u gets interlacing nodes and other u gets integer
/// nodes. delta is the sign of u(b_1)/v'(b_1); for totally real u all l_k
/// must then be positive.
FiedlerData fiedler_data(const UniPoly& u, const std::optional<std::vector<Rat>>& nodes = std::nullopt);

/// det(xI - A), constant term first, via the Faddeev-LeVerrier recurrence.
/// Only divisions by the integers 1..r occur, so any Q-algebra works.
template <class T>
std::vector<T> char_poly(const Matrix<T>& A, const T& zero, const T& one) {
  if (!A.is_square()) throw UsageError("char_poly of a non-square matrix");
  const std::size_t n = A.rows();
  std::vector<T> c(n + 1, zero);
  c[n] = one;
  if (n == 0) return c;
  Matrix<T> M = Matrix<T>::identity(n, zero, one);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<T> AM = A * M;
    c[n - k] = AM.trace() * Rat(-1, static_cast<long>(k));
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) AM(i, i) += c[n - k];
    M = std::move(AM);
  }
  return c;
}

inline std::vector<MQElem> char_poly(const Matrix<MQElem>& A) {
  return char_poly(A, MQElem(Rat(0)), MQElem(Rat(1)));
}

/// Rational char_poly coefficients as a UniPoly; throws UsageError if a
/// coefficient is irrational.
UniPoly rational_char_poly(const Matrix<MQElem>& A);

}  // namespace ratsos
