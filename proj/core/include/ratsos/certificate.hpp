#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratsos/mpoly.hpp"
#include "ratsos/problem.hpp"
#include "ratsos/unipoly.hpp"

namespace ratsos {

struct CertificateStats {
  std::size_t terms = 0;
  std::size_t bound = 0;
  friend bool operator==(const CertificateStats&, const CertificateStats&) = default;
};

/// f = sum positive weight * poly^2 - sum negative weight * poly^2 over Q.
struct Certificate {
  std::string theta;
  UniPoly minpoly;
  std::vector<std::string> vars;
  Mode mode = Mode::Trace;
  std::vector<Rat> nodes;
  int delta = 1;
  std::vector<Integer> radicands;
  std::vector<Weighted<Rat>> positive;
  std::vector<Weighted<Rat>> negative;
  RatPoly target;
  CertificateStats stats;

  std::size_t size() const { return positive.size() + negative.size(); }
};

/// 4m * 2^s * r(r+1)/2, without the factor 4 when Lagrange is skipped.
std::size_t certificate_bound(std::size_t inputs, std::size_t generators, std::size_t degree,
                              bool lagrange);

}  // namespace ratsos
