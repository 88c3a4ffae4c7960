#include "ratsos/fiedler.hpp"

#include <algorithm>

#include "ratsos/error.hpp"

namespace ratsos {

namespace {

void require_field_polynomial(const UniPoly& u) {
  if (u.degree() < 1 || !u.is_monic()) {
    throw PreconditionError("field polynomial must be monic of degree >= 1, got " + u.str());
  }
  if (!is_squarefree(u)) {
    throw NotSquarefreeError("field polynomial " + u.str() + " is not squarefree: gcd(u, u') = " +
                             gcd(u, u.derivative()).str());
  }
}

/// v'(b_k) = prod_{i != k} (b_k - b_i).
Rat node_derivative(const std::vector<Rat>& nodes, std::size_t k) {
  Rat out(1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i != k) out *= nodes[k] - nodes[i];
  }
  return out;
}

void validate_nodes(const UniPoly& u, const std::vector<Rat>& nodes) {
  if (nodes.size() != static_cast<std::size_t>(u.degree())) {
    throw PreconditionError("expected " + std::to_string(u.degree()) + " nodes, got " +
                            std::to_string(nodes.size()));
  }
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (nodes[i] == nodes[k]) throw PreconditionError("repeated node " + nodes[k].str());
    }
    if (u(nodes[k]).is_zero()) {
      throw PreconditionError("node " + nodes[k].str() + " is a root of " + u.str());
    }
  }
}

}  // namespace

std::vector<Rat> interlacing_nodes(const UniPoly& u) {
  const auto intervals = isolate_real_roots(u);
  std::vector<Rat> nodes;
  nodes.reserve(intervals.size());
  for (std::size_t k = 0; k + 1 < intervals.size(); ++k) {
    nodes.push_back((intervals[k].hi + intervals[k + 1].lo) * Rat(1, 2));
  }
  nodes.push_back(Rat(ceil(cauchy_bound(u)) + 1));
  return nodes;
}

std::vector<Rat> integer_nodes(const UniPoly& u) {
  std::vector<Rat> nodes;
  for (long k = 0; nodes.size() < static_cast<std::size_t>(u.degree()); ++k) {
    if (!u(Rat(k)).is_zero()) nodes.emplace_back(k);
  }
  return nodes;
}

FiedlerData fiedler_data(const UniPoly& u, const std::optional<std::vector<Rat>>& nodes) {
  require_field_polynomial(u);
  FiedlerData fd;
  fd.u = u;
  fd.totally_real = is_totally_real(u);
  fd.nodes = nodes ? *nodes : (fd.totally_real ? interlacing_nodes(u) : integer_nodes(u));
  validate_nodes(u, fd.nodes);

  const std::size_t r = fd.nodes.size();
  std::vector<Rat> ratio(r);
  for (std::size_t k = 0; k < r; ++k) ratio[k] = u(fd.nodes[k]) / node_derivative(fd.nodes, k);
  fd.delta = ratio[0].sign();
  if (fd.totally_real) {
    for (std::size_t k = 0; k < r; ++k) {
      if (ratio[k].sign() != fd.delta) {
        throw PreconditionError(
            "nodes do not interlace the roots of " + u.str() +
            ": no sign delta makes every l_k = delta*u(b_k)/v'(b_k) positive");
      }
    }
  }

  std::vector<Radicand> gens;
  fd.l.reserve(r);
  fd.d.reserve(r);
  for (std::size_t k = 0; k < r; ++k) {
    fd.l.push_back(ratio[k] * Rat(fd.delta));
    fd.d.push_back(sqrt_normal_form(fd.l.back()));
    const Integer& s = fd.d.back().radicand;
    if (s != 1 && std::none_of(gens.begin(), gens.end(),
                               [&](const Radicand& g) { return g.value() == s; })) {
      gens.emplace_back(s);
    }
  }
  fd.context = GeneratorContext::make(std::move(gens));

  std::vector<MQElem> d;
  d.reserve(r);
  for (const auto& form : fd.d) {
    if (form.radicand == 1) {
      d.emplace_back(fd.context, form.coefficient);
    } else {
      const auto idx = *fd.context->index_of(form.radicand);
      d.push_back(MQElem::monomial(fd.context, Subset{1} << idx, form.coefficient));
    }
  }

  const MQElem zero(fd.context, Rat(0));
  fd.A = Matrix<MQElem>(r, r, zero);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      MQElem entry = d[i] * d[j] * Rat(-fd.delta);
      if (i == j) entry += MQElem(fd.context, fd.nodes[i]);
      fd.A(i, j) = std::move(entry);
    }
  }

  for (std::size_t k = 0; k < r; ++k) {
    const MQElem residual = d[k] * d[k] * (Rat(fd.delta) * node_derivative(fd.nodes, k)) -
                            MQElem(fd.context, u(fd.nodes[k]));
    if (!residual.is_zero()) {
      throw InternalError("Fiedler relation delta*v'(b_k)*d_k^2 = u(b_k) fails at k = " +
                          std::to_string(k));
    }
  }
  return fd;
}

UniPoly rational_char_poly(const Matrix<MQElem>& A) {
  const auto coeffs = char_poly(A);
  std::vector<Rat> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (!c.is_rational()) throw UsageError("characteristic polynomial coefficient " + c.str() + " is irrational");
    out.push_back(c.rational_part());
  }
  return UniPoly(std::move(out));
}

}  // namespace ratsos
