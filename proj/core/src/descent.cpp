#include "ratsos/descent.hpp"

#include "ratsos/error.hpp"

namespace ratsos {

RatPoly SignedCertificate::value() const {
  return expand_weighted_squares(nvars, positive) - expand_weighted_squares(nvars, negative);
}

WeightedSquares descent_step(const WeightedSquares& ws, std::size_t g) {
  if (!ws.context || g >= ws.context->size()) throw UsageError("descent generator index out of range");
  const Rat radicand(ws.context->generator(g).value());
  const ContextPtr reduced = ws.context->without(g);

  std::vector<std::pair<MQPoly, MQPoly>> parts;
  parts.reserve(ws.terms.size());
  MQPoly cross(ws.nvars);
  for (const auto& term : ws.terms) {
    MQPoly a(ws.nvars);
    MQPoly b(ws.nvars);
    for (const auto& [e, c] : term.poly.terms()) {
      if (c.context()) common_context(ws.context, c.context());
      auto [ca, cb] = c.context() ? c.split(g) : std::pair{c, MQElem()};
      a.add_term(e, ca);
      b.add_term(e, cb);
    }
    if (!a.is_zero() && !b.is_zero()) cross += a * b * MQElem(term.weight);
    parts.emplace_back(std::move(a), std::move(b));
  }
  if (!cross.is_zero()) {
    throw PreconditionError("value not invariant under conjugation over sqrt(" +
                            ws.context->generator(g).value().get_str() + ")");
  }

  WeightedSquares out{ws.nvars, reduced, {}};
  out.terms.reserve(2 * ws.terms.size());
  for (std::size_t i = 0; i < ws.terms.size(); ++i) {
    auto& [a, b] = parts[i];
    if (!a.is_zero()) out.terms.push_back({ws.terms[i].weight, reembed(a, reduced)});
    if (!b.is_zero()) out.terms.push_back({ws.terms[i].weight * radicand, reembed(b, reduced)});
  }
  return out;
}

RatTerm normalize_term(const RatTerm& term) {
  if (term.poly.is_zero()) return term;
  const Rat lead = term.poly.leading_coefficient();
  return {term.weight * lead * lead, term.poly * lead.inverse()};
}

SignedCertificate full_descent(const WeightedSquares& ws, const DescentObserver& observer) {
  WeightedSquares current = ws;
  if (!current.context) current.context = GeneratorContext::make();
  while (!current.context->empty()) {
    const std::size_t g = current.context->size() - 1;
    WeightedSquares next = descent_step(current, g);
    if (observer) observer(current, next, g);
    current = std::move(next);
  }
  SignedCertificate out;
  out.nvars = ws.nvars;
  for (const auto& term : current.terms) {
    RatTerm t = normalize_term({term.weight, to_rat(term.poly)});
    if (t.poly.is_zero()) continue;
    if (t.weight.sign() > 0) {
      out.positive.push_back(std::move(t));
    } else {
      out.negative.push_back({-t.weight, std::move(t.poly)});
    }
  }
  return out;
}

namespace {

void rationalize_part(const std::vector<RatTerm>& in, std::vector<RatTerm>& out) {
  for (const auto& term : in) {
    if (term.weight.sign() <= 0) throw DomainError("lagrange_rationalize needs positive weights");
    const Integer d = term.weight.denominator();
    const auto w = four_square(term.weight.numerator() * d);
    for (const auto& wt : w) {
      if (wt == 0) continue;
      out.push_back({Rat(1), term.poly * Rat(wt, d)});
    }
  }
}

}  // namespace

SignedCertificate lagrange_rationalize(const SignedCertificate& sc) {
  SignedCertificate out;
  out.nvars = sc.nvars;
  rationalize_part(sc.positive, out.positive);
  rationalize_part(sc.negative, out.negative);
  return out;
}

}  // namespace ratsos
