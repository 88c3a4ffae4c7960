#include "ratsos/verify.hpp"

#include "ratsos/error.hpp"
#include "ratsos/format.hpp"

namespace ratsos {

namespace {

bool check_weights(const std::vector<Weighted<Rat>>& terms, const char* part,
                   std::vector<std::string>& diagnostics) {
  bool ok = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].weight.sign() <= 0) {
      diagnostics.push_back(std::string("nonpositive weight ") + terms[i].weight.str() + " in " + part +
                            " part, term " + std::to_string(i + 1));
      ok = false;
    }
  }
  return ok;
}

}  // namespace

VerifyReport verify_certificate(const RatPoly& f, const Certificate& cert) {
  VerifyReport report;
  report.positive_terms = cert.positive.size();
  report.negative_terms = cert.negative.size();
  report.bound = cert.stats.bound;

  const bool pos_ok = check_weights(cert.positive, "positive", report.diagnostics);
  const bool neg_ok = check_weights(cert.negative, "negative", report.diagnostics);
  report.weights_positive = pos_ok && neg_ok;

  try {
    const RatPoly value = expand_weighted_squares(f.nvars(), cert.positive) -
                          expand_weighted_squares(f.nvars(), cert.negative);
    const RatPoly diff = value - f;
    if (diff.is_zero()) {
      report.identity_holds = true;
    } else {
      const Exponents& e = diff.leading_exponents();
      report.diagnostics.push_back("mismatch at monomial " + monomial_string(e, cert.vars) +
                                   ": certificate gives " + value.coefficient(e).str() +
                                   ", target has " + f.coefficient(e).str());
    }
  } catch (const UsageError& err) {
    report.diagnostics.push_back(std::string("malformed certificate: ") + err.what());
  }

  report.within_bound = true;
  if (cert.stats.terms != cert.size()) {
    report.diagnostics.push_back("stats report " + std::to_string(cert.stats.terms) +
                                 " terms but the certificate lists " + std::to_string(cert.size()));
    report.within_bound = false;
  }
  if (cert.size() > cert.stats.bound) {
    report.diagnostics.push_back(std::to_string(cert.size()) + " terms exceed the bound " +
                                 std::to_string(cert.stats.bound));
    report.within_bound = false;
  }

  report.ok = report.identity_holds && report.weights_positive && report.within_bound;
  return report;
}

}  // namespace ratsos
