// ratsos: rational sum-of-squares certificates from sums of squares over
// number fields.
//
//   ratsos rationalize <problem> [--nodes b1,b2,...] [--no-lagrange]
//                                [--out <path>] [--format json|text]
//   ratsos verify <certificate.json>
//   ratsos inspect <problem> [--nodes b1,b2,...]
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 mathematical precondition failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ratsos/certificate_io.hpp"
#include "ratsos/error.hpp"
#include "ratsos/fiedler.hpp"
#include "ratsos/pipeline.hpp"
#include "ratsos/problem.hpp"
#include "ratsos/tracefact.hpp"
#include "ratsos/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ratsos::UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::vector<ratsos::Rat>> parse_nodes(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  std::vector<ratsos::Rat> nodes;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ratsos::UsageError("empty entry in --nodes");
    nodes.push_back(ratsos::Rat::parse(item.substr(first, last - first + 1)));
  }
  return nodes;
}

ratsos::Problem load_problem(const std::string& path) {
  auto problem = ratsos::parse_problem(read_file(path));
  for (const auto& w : problem.warnings) std::cerr << "warning: " << w << "\n";
  return problem;
}

/// Shrinks an isolating interval by bisection until it is narrower than 2^-40.
ratsos::Rat approximate_root(const ratsos::UniPoly& u, ratsos::Interval iv) {
  const ratsos::Rat eps(ratsos::Integer(1), ratsos::Integer(1) << 40);
  int lo_sign = u.sign_at(iv.lo);
  while (iv.hi - iv.lo > eps) {
    const ratsos::Rat mid = (iv.lo + iv.hi) * ratsos::Rat(1, 2);
    const int s = u.sign_at(mid);
    if (s == 0) return mid;
    if (s == lo_sign) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return (iv.lo + iv.hi) * ratsos::Rat(1, 2);
}

template <class T, class F>
std::string join(const std::vector<T>& items, F&& show) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += show(items[i]);
  }
  return out;
}

int run_rationalize(const std::string& file, const std::string& nodes, bool no_lagrange,
                    const std::string& out_path, const std::string& format) {
  const auto problem = load_problem(file);
  ratsos::RationalizeOptions options;
  options.nodes = parse_nodes(nodes);
  options.skip_lagrange = no_lagrange;
  const auto cert = ratsos::rationalize(problem, options);
  const std::string rendered = format == "text" ? ratsos::to_text(cert) : ratsos::to_json(cert);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ratsos::UsageError("cannot write '" + out_path + "'");
    out << rendered;
  }
  std::cerr << "verified: " << cert.positive.size() << " positive and " << cert.negative.size()
            << " negative terms (bound " << cert.stats.bound << ")\n";
  return 0;
}

int run_verify(const std::string& file) {
  const auto cert = ratsos::certificate_from_json(read_file(file));
  const auto report = ratsos::verify_certificate(cert.target, cert);
  std::cout << "identity " << (report.identity_holds ? "holds" : "FAILS") << "\n";
  std::cout << "weights " << (report.weights_positive ? "positive" : "NOT positive") << "\n";
  std::cout << "terms " << report.positive_terms << " positive, " << report.negative_terms
            << " negative, bound " << report.bound << (report.within_bound ? "" : " (VIOLATED)") << "\n";
  for (const auto& d : report.diagnostics) std::cout << "  " << d << "\n";
  std::cout << (report.ok ? "PASS" : "FAIL") << "\n";
  return report.ok ? 0 : kExitVerifyFailed;
}

int run_inspect(const std::string& file, const std::string& nodes) {
  const auto problem = load_problem(file);
  const auto& u = problem.u;
  const auto& t = problem.theta;
  std::cout << "field " << t << " : " << u.str(t) << "\n";
  std::cout << "degree " << u.degree() << "\n";
  std::cout << "mode " << ratsos::mode_name(problem.mode) << ", " << problem.inputs.size()
            << " input term(s)\n";

  const auto roots = ratsos::isolate_real_roots(u);
  std::cout << "real roots " << roots.size() << "\n";
  for (const auto& iv : roots) {
    std::cout << "  (" << iv.lo.str() << ", " << iv.hi.str() << ")  ~ "
              << approximate_root(u, iv).to_double() << "\n";
  }
  const bool totally_real = ratsos::is_totally_real(u);
  std::cout << "totally real " << (totally_real ? "yes" : "no") << "\n";

  const auto r = static_cast<std::size_t>(u.degree());
  const auto sums = ratsos::newton_power_sums(u, 2 * r - 2);
  std::cout << "power sums p_0..p_" << 2 * r - 2 << ": "
            << join(sums, [](const ratsos::Rat& x) { return x.str(); }) << "\n";

  if (r >= 2) {
    const auto fd = ratsos::fiedler_data(u, parse_nodes(nodes));
    const auto tf = ratsos::build_trace_factorization(fd);
    std::cout << "nodes " << join(fd.nodes, [](const ratsos::Rat& x) { return x.str(); }) << "\n";
    std::cout << "delta " << fd.delta << "\n";
    std::cout << "l " << join(fd.l, [](const ratsos::Rat& x) { return x.str(); }) << "\n";
    std::cout << "d " << join(fd.d, [](const ratsos::RadicalForm& f) {
      if (f.is_rational()) return f.coefficient.str();
      const std::string root = "sqrt(" + f.radicand.get_str() + ")";
      return f.coefficient == ratsos::Rat(1) ? root : f.coefficient.str() + "*" + root;
    }) << "\n";
    std::cout << "radicands "
              << join(tf.context->generators(), [](const ratsos::Radicand& g) { return g.value().get_str(); })
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational sum-of-squares certificates from sums of squares over number fields"};
  app.require_subcommand(1);

  std::string file;
  std::string nodes;
  bool no_lagrange = false;
  std::string out_path;
  std::string format = "json";

  auto* rat = app.add_subcommand("rationalize", "Build and verify a rational certificate");
  rat->add_option("file", file, "Problem file")->required();
  rat->add_option("--nodes", nodes, "Comma-separated rational nodes b_1,...,b_r");
  rat->add_flag("--no-lagrange", no_lagrange, "Keep rational weights instead of unit squares");
  rat->add_option("--out", out_path, "Write the certificate here instead of stdout");
  rat->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* ver = app.add_subcommand("verify", "Check a JSON certificate exactly");
  ver->add_option("file", file, "Certificate file")->required();

  auto* ins = app.add_subcommand("inspect", "Show root isolation, power sums and Fiedler data");
  ins->add_option("file", file, "Problem file")->required();
  ins->add_option("--nodes", nodes, "Comma-separated rational nodes b_1,...,b_r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*rat) return run_rationalize(file, nodes, no_lagrange, out_path, format);
    if (*ver) return run_verify(file);
    if (*ins) return run_inspect(file, nodes);
  } catch (const ratsos::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ratsos::PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ratsos::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  } catch (const ratsos::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 0;
}
