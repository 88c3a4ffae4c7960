#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "ratsos/mpoly.hpp"
#include "ratsos/multiquadratic.hpp"

namespace ratsos {

using MQTerm = Weighted<MQElem>;
using RatTerm = Weighted<Rat>;

/// sum weight * poly^2 over the multiquadratic ring. The expanded value
/// is a rational polynomial: every nonempty-subset coordinate vanishes.
struct WeightedSquares {
  std::size_t nvars = 0;
  ContextPtr context;
  std::vector<MQTerm> terms;

  MQPoly value() const { return expand_weighted_squares(nvars, terms); }
};

/// value = sum positive - sum negative, all listed weights positive.
struct SignedCertificate {
  std::size_t nvars = 0;
  std::vector<RatTerm> positive;
  std::vector<RatTerm> negative;

  RatPoly value() const;
  std::size_t size() const { return positive.size() + negative.size(); }
};

/// Removes generator g: each (c, a + b e_g) becomes (c, a), (c * l_g, b).
/// Throws PreconditionError when the value has a component involving e_g.
WeightedSquares descent_step(const WeightedSquares& ws, std::size_t g);

using DescentObserver =
    std::function<void(const WeightedSquares& before, const WeightedSquares& after, std::size_t g)>;

/// Eliminates generators last-to-first, normalizes each term and splits by
/// the sign of its weight.
SignedCertificate full_descent(const WeightedSquares& ws, const DescentObserver& observer = {});

/// Scales poly to leading graded-lex coefficient 1, folding the square of
/// the removed factor into the weight.
RatTerm normalize_term(const RatTerm& term);

/// w1 >= w2 >= w3 >= w4 >= 0 with sum of squares n; the first hit of a
/// largest-first backtracking search. DomainError for n <= 0.
std::array<Integer, 4> four_square(const Integer& n);

/// Rewrites each (n/d, g) as the weight-1 squares of (w_t / d) g where
/// n d = sum w_t^2.
SignedCertificate lagrange_rationalize(const SignedCertificate& sc);

}  // namespace ratsos
