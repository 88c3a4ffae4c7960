#include "ratsos/certificate_io.hpp"

#include <json.hpp>
#include <sstream>

#include "ratsos/error.hpp"
#include "ratsos/format.hpp"

namespace ratsos {

namespace {

using Json = nlohmann::ordered_json;

Json poly_json(const RatPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    out.push_back(Json::array({it->second.fraction_str(), it->first}));
  }
  return out;
}

Json terms_json(const std::vector<Weighted<Rat>>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    Json entry;
    entry["weight"] = t.weight.fraction_str();
    entry["poly"] = poly_json(t.poly);
    out.push_back(std::move(entry));
  }
  return out;
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

[[noreturn]] void schema_error(const std::string& message) {
  throw ParseError(0, 0, "certificate: " + message);
}

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return obj.at(key);
}

Rat read_rat(const Json& j) {
  try {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(Integer(std::to_string(j.get<long long>()), 10));
  } catch (const DomainError& e) {
    schema_error(e.what());
  }
  schema_error("expected a rational, found " + j.dump());
}

Integer read_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    const Rat r = read_rat(j);
    if (r.is_integer()) return r.numerator();
  }
  schema_error("expected an integer, found " + j.dump());
}

RatPoly read_poly(const Json& j, std::size_t nvars) {
  if (!j.is_array()) schema_error("polynomial must be an array of terms");
  RatPoly out(nvars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_array()) {
      schema_error("polynomial term must be [coefficient, [exponents]], found " + term.dump());
    }
    Exponents e;
    for (const auto& x : term[1]) {
      if (!x.is_number_unsigned()) schema_error("exponents must be nonnegative integers");
      e.push_back(x.get<std::uint32_t>());
    }
    if (e.size() != nvars) schema_error("exponent vector length does not match vars");
    out.add_term(e, read_rat(term[0]));
  }
  return out;
}

std::vector<Weighted<Rat>> read_terms(const Json& j, std::size_t nvars) {
  if (!j.is_array()) schema_error("term list must be an array");
  std::vector<Weighted<Rat>> out;
  for (const auto& entry : j) {
    out.push_back({read_rat(member(entry, "weight")), read_poly(member(entry, "poly"), nvars)});
  }
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string to_json(const Certificate& cert) {
  Json doc;
  Json minpoly = Json::array();
  for (const auto& c : cert.minpoly.coefficients()) minpoly.push_back(c.fraction_str());
  doc["field"] = Json{{"var", cert.theta}, {"minpoly", minpoly}};
  doc["vars"] = cert.vars;
  doc["mode"] = mode_name(cert.mode);
  Json nodes = Json::array();
  for (const auto& b : cert.nodes) nodes.push_back(b.fraction_str());
  doc["nodes"] = nodes;
  doc["delta"] = cert.delta;
  Json radicands = Json::array();
  for (const auto& s : cert.radicands) radicands.push_back(integer_json(s));
  doc["radicands"] = radicands;
  doc["positive"] = terms_json(cert.positive);
  doc["negative"] = terms_json(cert.negative);
  doc["target"] = poly_json(cert.target);
  doc["stats"] = Json{{"terms", cert.stats.terms}, {"bound", cert.stats.bound}};
  return doc.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, column, std::string("invalid JSON: ") + e.what());
  }

  Certificate cert;
  try {
    const Json& field = member(doc, "field");
    cert.theta = member(field, "var").get<std::string>();
    std::vector<Rat> minpoly;
    for (const auto& c : member(field, "minpoly")) minpoly.push_back(read_rat(c));
    cert.minpoly = UniPoly(std::move(minpoly));
    cert.vars = member(doc, "vars").get<std::vector<std::string>>();
    const auto mode = parse_mode(member(doc, "mode").get<std::string>());
    if (!mode) schema_error("unknown mode " + member(doc, "mode").dump());
    cert.mode = *mode;
    for (const auto& b : member(doc, "nodes")) cert.nodes.push_back(read_rat(b));
    cert.delta = member(doc, "delta").get<int>();
    if (cert.delta != 1 && cert.delta != -1) schema_error("delta must be 1 or -1");
    for (const auto& s : member(doc, "radicands")) cert.radicands.push_back(read_integer(s));
    const std::size_t n = cert.vars.size();
    cert.positive = read_terms(member(doc, "positive"), n);
    cert.negative = read_terms(member(doc, "negative"), n);
    cert.target = read_poly(member(doc, "target"), n);
    const Json& stats = member(doc, "stats");
    cert.stats.terms = member(stats, "terms").get<std::size_t>();
    cert.stats.bound = member(stats, "bound").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
  return cert;
}

std::string to_text(const Certificate& cert) {
  std::ostringstream os;
  os << "field " << cert.theta << " : " << cert.minpoly.str(cert.theta) << "\n";
  os << "vars " << join(cert.vars, " ") << "\n";
  os << "mode " << mode_name(cert.mode) << "\n";
  std::vector<std::string> nodes;
  for (const auto& b : cert.nodes) nodes.push_back(b.str());
  os << "nodes " << join(nodes, ", ") << "\n";
  os << "delta " << cert.delta << "\n";
  std::vector<std::string> radicands;
  for (const auto& s : cert.radicands) radicands.push_back(s.get_str());
  os << "radicands " << join(radicands, ", ") << "\n";
  os << "target : " << to_string(cert.target, cert.vars) << "\n";
  os << "certificate :\n";
  bool first = true;
  auto emit = [&](const Weighted<Rat>& t, bool negative) {
    os << (first ? (negative ? "  - " : "    ") : (negative ? "  - " : "  + "));
    first = false;
    if (t.weight != Rat(1)) os << t.weight.str() << "*";
    os << "(" << to_string(t.poly, cert.vars) << ")^2\n";
  };
  for (const auto& t : cert.positive) emit(t, false);
  for (const auto& t : cert.negative) emit(t, true);
  if (first) os << "    0\n";
  os << "terms " << cert.stats.terms << " (bound " << cert.stats.bound << ")\n";
  return os.str();
}

}  // namespace ratsos
