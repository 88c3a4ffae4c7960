#pragma once

#include <optional>
#include <vector>

#include "ratsos/certificate.hpp"
#include "ratsos/descent.hpp"
#include "ratsos/problem.hpp"

namespace ratsos {

struct RationalizeOptions {
  /// Overrides the node choice of the Fiedler construction.
  std::optional<std::vector<Rat>> nodes;
  bool skip_lagrange = false;
  /// Called after every descent step (instrumentation).
  DescentObserver observer;
};

/// sum w_i p_i^2 reduced modulo u. Throws PreconditionError when a
/// theta-component other than theta^0 survives, or when a declared target
/// disagrees.
RatPoly sum_over_K(const Problem& problem);

/// sum w_i q_i^T P(u) q_i, the weighted trace forms of the inputs.
RatPoly trace_target(const Problem& problem);

/// The target polynomial of the problem's mode.
RatPoly problem_target(const Problem& problem);

/// Rational certificate for the problem's target. The certificate is
/// verified before it is returned; a failed check is an InternalError.
Certificate rationalize(const Problem& problem, const RationalizeOptions& options = {});

}  // namespace ratsos
