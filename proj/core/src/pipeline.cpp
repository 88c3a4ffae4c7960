#include "ratsos/pipeline.hpp"

#include "ratsos/error.hpp"
#include "ratsos/fiedler.hpp"
#include "ratsos/format.hpp"
#include "ratsos/tracefact.hpp"
#include "ratsos/verify.hpp"

namespace ratsos {

std::size_t certificate_bound(std::size_t inputs, std::size_t generators, std::size_t degree,
                              bool lagrange) {
  std::size_t bound = inputs * (std::size_t{1} << generators) * (degree * (degree + 1) / 2);
  return lagrange ? 4 * bound : bound;
}

namespace {

std::size_t field_degree(const Problem& problem) {
  return static_cast<std::size_t>(problem.u.degree());
}

void check_declared(const Problem& problem, const RatPoly& f) {
  if (problem.declared_f && !(*problem.declared_f == f)) {
    throw PreconditionError("declared f mismatch: target is " + to_string(*problem.declared_f, problem.vars) +
                            " but the inputs give " + to_string(f, problem.vars));
  }
}

}  // namespace

RatPoly sum_over_K(const Problem& problem) {
  const std::size_t n = problem.vars.size();
  ThetaPoly acc = theta_zero(n, problem.u);
  for (const auto& input : problem.inputs) {
    acc = theta_add(acc, theta_scale(theta_multiply(input.p, input.p), input.weight));
  }
  for (std::size_t k = 1; k < acc.q.size(); ++k) {
    if (!acc.q[k].is_zero()) {
      throw PreconditionError("sum is not rational: the " + problem.theta + "^" + std::to_string(k) +
                              " component is " + to_string(acc.q[k], problem.vars));
    }
  }
  check_declared(problem, acc.q[0]);
  return acc.q[0];
}

RatPoly trace_target(const Problem& problem) {
  const std::size_t n = problem.vars.size();
  const auto P = power_sum_matrix(problem.u);
  RatPoly f(n);
  for (const auto& input : problem.inputs) {
    const auto& q = input.p.q;
    RatPoly form(n);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i].is_zero()) continue;
      form += q[i].square() * P(i, i);
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        if (q[j].is_zero() || P(i, j).is_zero()) continue;
        form += q[i] * q[j] * (P(i, j) * Rat(2));
      }
    }
    f += form * input.weight;
  }
  return f;
}

RatPoly problem_target(const Problem& problem) {
  if (problem.mode == Mode::Sum) return sum_over_K(problem);
  RatPoly f = trace_target(problem);
  check_declared(problem, f);
  return f;
}

Certificate rationalize(const Problem& problem, const RationalizeOptions& options) {
  const std::size_t r = field_degree(problem);
  const std::size_t n = problem.vars.size();
  if (problem.mode != Mode::Signed && !is_totally_real(problem.u)) {
    throw PreconditionError("field polynomial " + problem.u.str(problem.theta) +
                            " is not totally real; use mode signed");
  }

  Certificate cert;
  cert.theta = problem.theta;
  cert.minpoly = problem.u;
  cert.vars = problem.vars;
  cert.mode = problem.mode;
  cert.target = problem_target(problem);

  SignedCertificate sc;
  sc.nvars = n;
  std::size_t generators = 0;
  if (r == 1) {
    // theta is rational: the inputs already are rational polynomials
    for (const auto& input : problem.inputs) {
      if (input.p.q[0].is_zero()) continue;
      sc.positive.push_back(normalize_term({input.weight, input.p.q[0]}));
    }
  } else {
    const FiedlerData fd = fiedler_data(problem.u, options.nodes);
    const TraceFactorization tf = build_trace_factorization(fd);
    cert.nodes = fd.nodes;
    cert.delta = fd.delta;
    for (const auto& g : tf.context->generators()) cert.radicands.push_back(g.value());
    generators = tf.context->size();

    WeightedSquares ws{n, tf.context, {}};
    const Rat degree(static_cast<long>(r));
    for (const auto& input : problem.inputs) {
      const Rat weight = problem.mode == Mode::Sum ? input.weight / degree : input.weight;
      std::vector<MQPoly> q;
      q.reserve(r);
      for (const auto& qi : input.p.q) q.push_back(to_mq(qi, tf.context));
      for (std::size_t j = 0; j < tf.C.cols(); ++j) {
        MQPoly column(n);
        for (std::size_t m = 0; m < r; ++m) {
          if (tf.C(m, j).is_zero() || q[m].is_zero()) continue;
          column += q[m] * tf.C(m, j);
        }
        if (!column.is_zero()) ws.terms.push_back({weight, std::move(column)});
      }
    }
    sc = full_descent(ws, options.observer);
  }
  if (!options.skip_lagrange) sc = lagrange_rationalize(sc);

  cert.positive = std::move(sc.positive);
  cert.negative = std::move(sc.negative);
  cert.stats.terms = cert.size();
  cert.stats.bound = certificate_bound(problem.inputs.size(), generators, r, !options.skip_lagrange);

  const VerifyReport report = verify_certificate(cert.target, cert);
  if (!report.ok) {
    std::string message = "internal verification failed";
    for (const auto& d : report.diagnostics) message += "; " + d;
    throw InternalError(message);
  }
  if (problem.mode != Mode::Signed && !cert.negative.empty()) {
    throw InternalError("totally real field produced a negative part");
  }
  return cert;
}

}  // namespace ratsos
