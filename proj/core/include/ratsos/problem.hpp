#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratsos/mpoly.hpp"
#include "ratsos/theta.hpp"
#include "ratsos/unipoly.hpp"

namespace ratsos {

/// sum: f = sum w_i p_i^2 computed in K. trace: f = sum w_i * (trace form of p_i).
/// signed: trace with non-totally-real fields allowed; output may have a
/// negative part.
enum class Mode { Sum, Trace, Signed };

std::string mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view s);

struct ProblemInput {
  Rat weight;
  ThetaPoly p;
};

struct Problem {
  std::string theta;
  UniPoly u;
  std::vector<std::string> vars;
  Mode mode = Mode::Sum;
  std::vector<ProblemInput> inputs;
  std::optional<RatPoly> declared_f;
  /// Non-fatal notes, e.g. skipped zero inputs.
  std::vector<std::string> warnings;
};

/// Line-oriented problem format:
///
///   field <name> : <polynomial in name>
///   vars <name> [<name> ...]
///   mode sum|trace|signed
///   term <rational> : <expression in vars and the field variable>
///   target : <expression in vars>
///
/// Syntax problems raise ParseError; a non-monic or non-squarefree field
/// polynomial raises PreconditionError / NotSquarefreeError.
Problem parse_problem(std::string_view text);

}  // namespace ratsos
