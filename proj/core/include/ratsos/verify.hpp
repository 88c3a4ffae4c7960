#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratsos/certificate.hpp"

namespace ratsos {

struct VerifyReport {
  bool ok = false;
  bool identity_holds = false;
  bool weights_positive = false;
  bool within_bound = false;
  std::size_t positive_terms = 0;
  std::size_t negative_terms = 0;
  std::size_t bound = 0;
  std::vector<std::string> diagnostics;
};

/// Recomputes sum(+) - sum(-) exactly and compares it with f. Failures are
/// report entries, never exceptions.
VerifyReport verify_certificate(const RatPoly& f, const Certificate& cert);

}  // namespace ratsos
