#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ratsos/fiedler.hpp"
#include "ratsos/matrix.hpp"
#include "ratsos/multiquadratic.hpp"
#include "ratsos/unipoly.hpp"

namespace ratsos {

/// Coordinates of a symmetric matrix in the orthonormal basis
/// {E_ii} u {(E_ij + E_ji)/sqrt(2) : i < j}: the diagonal first, then
/// sqrt(2) * S(i, j) for (1,2), (1,3), ..., (1,r), (2,3), ...
template <class T>
std::vector<T> sym_coords(const Matrix<T>& S, const T& sqrt2) {
  if (!S.is_symmetric()) throw PreconditionError("sym_coords requires a symmetric matrix");
  const std::size_t r = S.rows();
  std::vector<T> out;
  out.reserve(r * (r + 1) / 2);
  for (std::size_t i = 0; i < r; ++i) out.push_back(S(i, i));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) out.push_back(sqrt2 * S(i, j));
  }
  return out;
}

/// Uses the generator sqrt(2) of the entries' context (required when r >= 2).
std::vector<MQElem> sym_coords(const Matrix<MQElem>& S);

/// Index pairs of the basis, in the column order used by sym_coords.
std::vector<std::pair<std::size_t, std::size_t>> sym_basis(std::size_t r);

/// Hankel matrix P(i, j) = p_{i+j} of Newton power sums of u (0-based).
Matrix<Rat> power_sum_matrix(const UniPoly& u);

/// Row m of C is sym_coords(A^m), m = 0..r-1, so that C C^T = P(u).
struct TraceFactorization {
  std::size_t r = 0;
  Matrix<MQElem> C;
  /// Fiedler context with sqrt(2) appended when r >= 2 and not yet present.
  ContextPtr context;
  std::vector<std::pair<std::size_t, std::size_t>> basis;
};

/// Checks C C^T = P(u) entrywise; a failure is an InternalError.
TraceFactorization build_trace_factorization(const FiedlerData& fd);

Matrix<MQElem> gram(const Matrix<MQElem>& C);

}  // namespace ratsos
