// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Every check is exact unless a tolerance is
// printed next to it.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "ratsos/certificate_io.hpp"
#include "ratsos/descent.hpp"
#include "ratsos/fiedler.hpp"
#include "ratsos/pipeline.hpp"
#include "ratsos/problem.hpp"
#include "ratsos/tracefact.hpp"
#include "ratsos/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace ratsos;
using testing::poly;
using testing::Rng;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << s << " s";
  return os.str();
}

const UniPoly kCubic{1, -3, 0, 1};
constexpr const char* kCubicF = "3 - 12*y - 6*x^3 + 18*y^2 + 3*x^6 + 12*x^3*y - 6*x*y^3 + 6*x^2*y^4";
constexpr const char* kCubicP = "x^3 + t^2*y + (2 - t - t^2)*x*y^2 - 1";

MQElem rad(const ContextPtr& ctx, long n, const Rat& c) { return MQElem::radical(ctx, n) * c; }

std::string term_key(const Weighted<Rat>& t) {
  std::ostringstream os;
  os << t.weight.str() << " | ";
  for (const auto& [e, c] : t.poly.terms()) {
    os << c.str() << "[";
    for (auto x : e) os << x << ",";
    os << "]";
  }
  return os.str();
}

bool same_multiset(const std::vector<Weighted<Rat>>& a, const std::vector<Weighted<Rat>>& b) {
  std::map<std::string, int> count;
  for (const auto& t : a) ++count[term_key(t)];
  for (const auto& t : b) --count[term_key(t)];
  for (const auto& [k, n] : count) {
    if (n != 0) return false;
  }
  return true;
}

Problem single_input(const UniPoly& u, Mode mode, const std::string& p) {
  Problem pr;
  pr.theta = "t";
  pr.u = u;
  pr.vars = testing::kXY;
  pr.mode = mode;
  pr.inputs.push_back({Rat(1), testing::theta_poly(p, u)});
  return pr;
}

RationalizeOptions nodes_no_lagrange(std::vector<Rat> nodes) {
  RationalizeOptions o;
  o.nodes = std::move(nodes);
  o.skip_lagrange = true;
  return o;
}

Outcome cubic_end_to_end() {
  Outcome out;
  Stopwatch clock;
  const auto cert = rationalize(single_input(kCubic, Mode::Trace, kCubicP), nodes_no_lagrange({0, 1, 2}));
  const double elapsed = clock.seconds();
  std::vector<Weighted<Rat>> expected;
  for (const auto& [w, p] : std::vector<std::pair<Rat, std::string>>{
           {Rat(1), "x^3 + x*y^2 + 3/2*y - 1"},
           {Rat(1), "x^3 + 2*y - 1"},
           {Rat(1), "x^3 - x*y^2 + 5/2*y - 1"},
           {Rat(1), "2*y - x*y^2"},
           {Rat(3, 2), "y"},
           {Rat(3), "x*y^2"}}) {
    expected.push_back(normalize_term({w, poly(p)}));
  }
  out.require(same_multiset(cert.positive, expected), "terms differ from the expected six");
  out.require(cert.negative.empty(), "negative part not empty");
  out.require(cert.target == poly(kCubicF), "target differs from f");
  out.require(expand_weighted_squares(2, cert.positive) == poly(kCubicF), "value differs from f");
  out.require(elapsed < 1.0, "runtime " + fmt_seconds(elapsed) + " >= 1 s");
  if (out.pass) out.detail = "6 terms exact, " + fmt_seconds(elapsed) + " (limit 1 s)";
  return out;
}

Outcome cubic_fiedler_data() {
  Outcome out;
  const auto fd = fiedler_data(kCubic, std::vector<Rat>{0, 1, 2});
  const auto& c = fd.context;
  out.require(fd.delta == 1, "delta != 1");
  out.require(fd.d.size() == 3 && fd.d[0] == RadicalForm{2, Rat(1, 2)} && fd.d[1].is_rational() &&
                  fd.d[1].coefficient == Rat(1) && fd.d[2] == RadicalForm{6, Rat(1, 2)},
              "d != (sqrt2/2, 1, sqrt6/2)");
  const MQElem A[3][3] = {
      {Rat(-1, 2), rad(c, 2, Rat(-1, 2)), rad(c, 3, Rat(-1, 2))},
      {rad(c, 2, Rat(-1, 2)), Rat(0), rad(c, 6, Rat(-1, 2))},
      {rad(c, 3, Rat(-1, 2)), rad(c, 6, Rat(-1, 2)), Rat(1, 2)},
  };
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out.require(fd.A(i, j) == A[i][j], "A(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                             fd.A(i, j).str());
    }
  }
  if (out.pass) out.detail = "delta, d and all 9 entries of A exact";
  return out;
}

Outcome cubic_trace_factorization() {
  Outcome out;
  const auto tf = build_trace_factorization(fiedler_data(kCubic, std::vector<Rat>{0, 1, 2}));
  const auto& c = tf.context;
  const std::vector<std::vector<MQElem>> ct = {
      {Rat(1), Rat(-1, 2), Rat(3, 2)},
      {Rat(1), Rat(0), Rat(2)},
      {Rat(1), Rat(1, 2), Rat(5, 2)},
      {Rat(0), Rat(-1), Rat(2)},
      {Rat(0), rad(c, 6, Rat(-1, 2)), rad(c, 6, Rat(1, 2))},
      {Rat(0), rad(c, 3, Rat(-1)), Rat(0)},
  };
  out.require(tf.C.rows() == 3 && tf.C.cols() == 6, "C has the wrong shape");
  for (std::size_t j = 0; j < 6 && out.pass; ++j) {
    for (std::size_t m = 0; m < 3; ++m) {
      out.require(tf.C(m, j) == ct[j][m], "C^T(" + std::to_string(j) + "," + std::to_string(m) +
                                              ") = " + tf.C(m, j).str());
    }
  }
  if (out.pass) out.detail = "all 18 entries of C^T exact";
  return out;
}

Outcome signed_example() {
  Outcome out;
  const UniPoly u{2, 0, 1};
  const auto cert = rationalize(single_input(u, Mode::Signed, "x + t*y"), nodes_no_lagrange({0, 1}));
  out.require(same_multiset(cert.positive, {{Rat(1), poly("x + 2*y")}, {Rat(1), poly("x - 2*y")}}),
              "positive part differs");
  out.require(same_multiset(cert.negative, {{Rat(12), poly("y")}}), "negative part differs");
  const auto report = verify_certificate(poly("2*x^2 - 4*y^2"), cert);
  out.require(report.ok, "verifier rejects the value 2x^2 - 4y^2");
  if (out.pass) out.detail = "(x+2y)^2 + (x-2y)^2 - 12y^2 = 2x^2 - 4y^2 verified";
  return out;
}

Outcome formal_identity_suite() {
  Outcome out;
  Stopwatch clock;
  Rng rng(20240501);
  int complex_count = 0;
  for (int trial = 0; trial < 100 && out.pass; ++trial) {
    const auto degree = static_cast<std::size_t>(rng.integer(2, 6));
    std::vector<Rat> imag;
    if (trial % 2 == 1) {
      const auto pairs = static_cast<std::size_t>(rng.integer(1, static_cast<long>(degree / 2)));
      while (imag.size() < pairs) {
        const Rat c(rng.integer(1, 9), rng.integer(1, 2));
        bool fresh = true;
        for (const auto& x : imag) fresh = fresh && !(x == c);
        if (fresh) imag.push_back(c);
      }
      ++complex_count;
    }
    const auto roots = rng.distinct_roots(degree - 2 * imag.size(), 5);
    const UniPoly u = testing::with_imaginary_pairs(roots, imag);
    const auto sums = testing::explicit_power_sums(roots, imag, 2 * degree);
    const auto fd = fiedler_data(u);
    const auto tf = build_trace_factorization(fd);
    const std::string tag = "trial " + std::to_string(trial) + " u = " + u.str() + ": ";
    for (std::size_t i = 0; i < degree; ++i) {
      for (std::size_t j = 0; j < degree; ++j) {
        MQElem g(tf.context, Rat(0));
        for (std::size_t k = 0; k < tf.C.cols(); ++k) g += tf.C(i, k) * tf.C(j, k);
        out.require(g == MQElem(sums[i + j]), tag + "CC^T differs from the power sums");
      }
    }
    const auto cp = char_poly(fd.A);
    for (std::size_t k = 0; k < cp.size(); ++k) {
      out.require(cp[k] == MQElem(u.coeff(k)), tag + "char_poly(A) != u");
    }
  }
  const double elapsed = clock.seconds();
  out.require(elapsed < 30.0, "runtime " + fmt_seconds(elapsed) + " >= 30 s");
  if (out.pass) {
    out.detail = "100 fields (" + std::to_string(complex_count) + " complex-rooted), " + fmt_seconds(elapsed) +
                 " (limit 30 s)";
  }
  return out;
}

// Independent value of the problem's target: evaluate theta at each rational
// root.
RatPoly embedding_value(const ThetaPoly& p, const Rat& root) {
  RatPoly out(p.nvars());
  Rat power(1);
  for (const auto& q : p.q) {
    out += q * power;
    power *= root;
  }
  return out.square();
}

struct EndToEndStats {
  int problems = 0;
  int sum_problems = 0;
  long steps = 0;
  long step_failures = 0;
  std::size_t max_terms = 0;
};

Outcome end_to_end_suite(EndToEndStats& stats) {
  Outcome out;
  Stopwatch clock;
  Rng rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(rng.integer(1, 5));
    const auto nvars = static_cast<std::size_t>(rng.integer(1, 3));
    const auto roots = rng.distinct_roots(r, 5);
    const UniPoly u = UniPoly::from_roots(roots);
    const ThetaPoly p = testing::random_theta_poly(rng, nvars, u, 3, 5);

    Problem pr;
    pr.theta = "t";
    pr.u = u;
    pr.vars = std::vector<std::string>{"x", "y", "z"};
    pr.vars.resize(nvars);
    RatPoly oracle(nvars);
    if (trial % 2 == 0) {
      pr.mode = Mode::Trace;
      pr.inputs.push_back({Rat(1), p});
      for (const auto& a : roots) oracle += embedding_value(p, a);
    } else {
      pr.mode = Mode::Sum;
      ++stats.sum_problems;
      for (const auto& member : testing::cyclic_orbit(p, roots)) pr.inputs.push_back({Rat(1), member});
      for (const auto& in : pr.inputs) oracle += embedding_value(in.p, roots[0]);
    }

    RationalizeOptions options;
    options.observer = [&](const WeightedSquares& before, const WeightedSquares& after, std::size_t) {
      ++stats.steps;
      if (!(reembed(after.value(), before.context) == before.value())) ++stats.step_failures;
    };
    const std::string tag = "trial " + std::to_string(trial) + " (" + mode_name(pr.mode) + ", u = " + u.str() + "): ";
    try {
      const auto cert = rationalize(pr, options);
      const auto again = rationalize(pr);
      const auto report = verify_certificate(oracle, cert);
      out.require(report.ok, tag + "verification failed");
      out.require(cert.target == oracle, tag + "target differs from the embedding oracle");
      out.require(cert.negative.empty(), tag + "negative part not empty");
      bool positive = true;
      for (const auto& t : cert.positive) positive = positive && t.weight.sign() > 0;
      out.require(positive, tag + "nonpositive weight");
      const std::size_t m = pr.inputs.size();
      const std::size_t s = cert.radicands.size();
      const std::size_t bound = 4 * m * (std::size_t{1} << s) * r * (r + 1) / 2;
      out.require(cert.size() <= bound, tag + std::to_string(cert.size()) + " terms exceed bound " +
                                            std::to_string(bound));
      out.require(to_json(cert) == to_json(again), tag + "two runs differ");
      stats.max_terms = std::max(stats.max_terms, cert.size());
    } catch (const std::exception& e) {
      out.require(false, tag + e.what());
    }
    ++stats.problems;
  }
  const double elapsed = clock.seconds();
  out.require(elapsed < 600.0, "runtime " + fmt_seconds(elapsed) + " >= 600 s");
  if (out.pass) {
    out.detail = std::to_string(stats.problems) + " problems (" + std::to_string(stats.sum_problems) +
                 " sum-mode orbits), max " + std::to_string(stats.max_terms) + " terms, " +
                 fmt_seconds(elapsed) + " (limit 600 s)";
  }
  return out;
}

Outcome descent_preservation(const EndToEndStats& stats) {
  Outcome out;
  out.require(stats.problems == 100, "end-to-end suite did not run all problems");
  out.require(stats.steps > 0, "no descent steps observed");
  out.require(stats.step_failures == 0, std::to_string(stats.step_failures) + " of " +
                                            std::to_string(stats.steps) + " steps changed the value");
  if (out.pass) out.detail = std::to_string(stats.steps) + " descent steps, value preserved at each";
  return out;
}

Outcome four_square_suite() {
  Outcome out;
  constexpr long kMax = 10000;
  Stopwatch clock;
  std::vector<std::array<long, 4>> best(kMax + 1, {-1, -1, -1, -1});
  for (long a = 0; a * a <= kMax; ++a) {
    for (long b = 0; b <= a && a * a + b * b <= kMax; ++b) {
      for (long c = 0; c <= b && a * a + b * b + c * c <= kMax; ++c) {
        for (long d = 0; d <= c; ++d) {
          const long n = a * a + b * b + c * c + d * d;
          if (n > kMax) break;
          const std::array<long, 4> q{a, b, c, d};
          if (best[n] < q) best[n] = q;
        }
      }
    }
  }
  for (long n = 1; n <= kMax && out.pass; ++n) {
    const auto q = four_square(n);
    const auto again = four_square(n);
    const Integer sum = q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
    const std::string tag = "n = " + std::to_string(n) + ": ";
    out.require(sum == n, tag + "squares do not sum to n");
    out.require(q[0] >= q[1] && q[1] >= q[2] && q[2] >= q[3] && q[3] >= 0, tag + "not descending");
    out.require(q == again, tag + "not deterministic");
    for (int i = 0; i < 4; ++i) out.require(q[i] == best[n][i], tag + "not the first quadruple in search order");
  }
  const double elapsed = clock.seconds();
  out.require(elapsed < 30.0, "runtime " + fmt_seconds(elapsed) + " >= 30 s");
  if (out.pass) out.detail = "n = 1..10000 checked against enumeration, " + fmt_seconds(elapsed) + " (limit 30 s)";
  return out;
}

Outcome newton_suite() {
  using Real = boost::multiprecision::cpp_dec_float_50;
  Outcome out;
  const auto sums = newton_power_sums(UniPoly::from_roots({1, 2, 3}), 4);
  for (unsigned m = 0; m <= 4; ++m) {
    const long expected = 1 + (1L << m) + static_cast<long>(std::pow(3, m));
    out.require(sums.size() == 5 && sums[m] == Rat(expected), "p_" + std::to_string(m) + " for roots 1,2,3");
  }

  const auto f = [](const Real& x) { return x * x * x - 3 * x + 1; };
  const Real brackets[3][2] = {{Real(-2), Real("-1.8")}, {Real("0.3"), Real("0.4")}, {Real("1.5"), Real("1.6")}};
  std::vector<Real> roots;
  for (const auto& br : brackets) {
    Real lo = br[0];
    Real hi = br[1];
    const bool rising = f(lo) < 0;
    for (int it = 0; it < 200; ++it) {
      const Real mid = (lo + hi) / 2;
      if ((f(mid) < 0) == rising) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back((lo + hi) / 2);
  }
  const auto exact = newton_power_sums(kCubic, 4);
  Real worst = 0;
  for (unsigned m = 0; m <= 4; ++m) {
    Real numeric = 0;
    for (const auto& y : roots) numeric += boost::multiprecision::pow(y, m);
    const Real e = Real(exact[m].numerator().get_str()) / Real(exact[m].denominator().get_str());
    worst = std::max(worst, Real(boost::multiprecision::abs(numeric - e)));
  }
  out.require(worst < Real("1e-30"), "numeric power sums differ by " + worst.str(3, std::ios::scientific));
  std::ostringstream os;
  os << "[3,6,14,36,98] exact; cubic [3,0,6,-3,18] within " << worst.str(3, std::ios::scientific)
     << " (tolerance 1e-30)";
  if (out.pass) out.detail = os.str();
  return out;
}

}  // namespace

int main() {
  EndToEndStats stats;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"cyclic cubic example end-to-end", cubic_end_to_end},
      {"Fiedler data of the cubic example", cubic_fiedler_data},
      {"trace factorization of the cubic example", cubic_trace_factorization},
      {"signed example over Q(sqrt(-2))", signed_example},
      {"formal identities CC^T = P and char_poly(A) = u", formal_identity_suite},
      {"end-to-end property suite", [&] { return end_to_end_suite(stats); }},
      {"descent value preservation", [&] { return descent_preservation(stats); }},
      {"four_square correctness", four_square_suite},
      {"Newton power sums", newton_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
