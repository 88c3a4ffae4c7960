#include "ratsos/tracefact.hpp"

#include "ratsos/error.hpp"

namespace ratsos {

std::vector<MQElem> sym_coords(const Matrix<MQElem>& S) {
  if (!S.is_symmetric()) throw PreconditionError("sym_coords requires a symmetric matrix");
  if (S.rows() < 2) return sym_coords(S, MQElem(Rat(0)));
  ContextPtr ctx;
  for (std::size_t i = 0; i < S.rows(); ++i) {
    for (std::size_t j = 0; j < S.cols(); ++j) ctx = common_context(ctx, S(i, j).context());
  }
  const auto idx = ctx ? ctx->index_of(2) : std::nullopt;
  if (!idx) throw UsageError("sym_coords needs sqrt(2) in the generator context");
  return sym_coords(S, MQElem::generator(ctx, *idx));
}

std::vector<std::pair<std::size_t, std::size_t>> sym_basis(std::size_t r) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < r; ++i) out.emplace_back(i, i);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) out.emplace_back(i, j);
  }
  return out;
}

Matrix<Rat> power_sum_matrix(const UniPoly& u) {
  if (u.degree() < 1 || !u.is_monic()) {
    throw PreconditionError("power_sum_matrix requires monic u of degree >= 1, got " + u.str());
  }
  const auto r = static_cast<std::size_t>(u.degree());
  const auto p = newton_power_sums(u, 2 * r - 2);
  Matrix<Rat> P(r, r, Rat(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) P(i, j) = p[i + j];
  }
  return P;
}

Matrix<MQElem> gram(const Matrix<MQElem>& C) { return C * C.transpose(); }

TraceFactorization build_trace_factorization(const FiedlerData& fd) {
  TraceFactorization tf;
  tf.r = fd.A.rows();
  tf.basis = sym_basis(tf.r);
  tf.context = fd.context;
  if (tf.r >= 2 && !tf.context->index_of(2)) tf.context = tf.context->with_appended(Radicand(2));

  Matrix<MQElem> A(tf.r, tf.r, MQElem(tf.context, Rat(0)));
  for (std::size_t i = 0; i < tf.r; ++i) {
    for (std::size_t j = 0; j < tf.r; ++j) A(i, j) = fd.A(i, j).reembed(tf.context);
  }

  const MQElem zero(tf.context, Rat(0));
  const MQElem one(tf.context, Rat(1));
  tf.C = Matrix<MQElem>(tf.r, tf.basis.size(), zero);
  Matrix<MQElem> power = Matrix<MQElem>::identity(tf.r, zero, one);
  for (std::size_t m = 0; m < tf.r; ++m) {
    const auto row = sym_coords(power);
    for (std::size_t j = 0; j < row.size(); ++j) tf.C(m, j) = row[j];
    if (m + 1 < tf.r) power = power * A;
  }

  const auto P = power_sum_matrix(fd.u);
  const auto G = gram(tf.C);
  for (std::size_t i = 0; i < tf.r; ++i) {
    for (std::size_t j = 0; j < tf.r; ++j) {
      if (!(G(i, j) == MQElem(P(i, j)))) {
        throw InternalError("C C^T differs from the power-sum matrix at (" + std::to_string(i) +
                            ", " + std::to_string(j) + "): " + G(i, j).str() + " vs " +
                            P(i, j).str());
      }
    }
  }
  return tf;
}

}  // namespace ratsos
