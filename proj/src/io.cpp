#include "dp5/io.hpp"

#include <fstream>
#include <sstream>

#include "dp5/parse.hpp"

namespace dp5::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("malformed file: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void check_header(const json& j, const char* kind) {
  const json& v = field(j, "version");
  if (!v.is_number_integer()) bad("version must be an integer");
  if (v.get<int>() > kFormatVersion) bad("unsupported format version " + std::to_string(v.get<int>()));
  if (j.contains("kind") && j.at("kind") != kind) bad(std::string("expected kind \"") + kind + "\"");
}

std::vector<MPoly> poly_list(const json& j, const char* key, const std::vector<std::string>& vars) {
  const json& arr = field(j, key);
  if (!arr.is_array()) bad(std::string(key) + " must be an array");
  std::vector<MPoly> out;
  for (const auto& p : arr) out.push_back(multipoly_from_json(p, vars));
  return out;
}

json poly_list_json(const std::vector<MPoly>& fs, const std::vector<std::string>& vars) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(to_json(f, vars));
  return arr;
}

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("coefficient must be a string \"num/den\"");
  return parse_rational(j.get<std::string>());
}

}  // namespace

const std::vector<std::string>& x_names() {
  static const std::vector<std::string> v = var_names("x", 6);
  return v;
}

const std::vector<std::string>& t_names() {
  static const std::vector<std::string> v = var_names("t", 3);
  return v;
}

json to_json(const MPoly& f, const std::vector<std::string>& vars) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json e = json::array();
    for (int i = 0; i < f.nvars(); ++i) e.push_back(t.m[i]);
    terms.push_back(json::array({e, to_string(t.c)}));
  }
  return json{{"vars", vars}, {"terms", terms}};
}

MPoly multipoly_from_json(const json& j, const std::vector<std::string>& vars) {
  const json& v = field(j, "vars");
  if (v != json(vars)) bad("polynomial variables " + v.dump() + ", expected " + json(vars).dump());
  const json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  const int n = static_cast<int>(vars.size());
  MPoly out(n);
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != vars.size())
      bad("term must be [[" + std::to_string(n) + " exponents], \"num/den\"], got " + t.dump());
    Monomial m{};
    for (int i = 0; i < n; ++i) {
      const json& e = t[0][static_cast<size_t>(i)];
      if (!e.is_number_unsigned() || e.get<unsigned>() > 1000) bad("exponent out of range: " + e.dump());
      m[i] = static_cast<std::uint16_t>(e.get<unsigned>());
    }
    out += MPoly::monomial(n, m, rational_from(t[1]));
  }
  return out;
}

json surface_to_json(const DP5Surface& s, const std::vector<MPoly>& quintics) {
  json j{{"version", kFormatVersion}, {"kind", "surface"}, {"vars", x_names()}};
  if (s.seed) j["seed"] = format_univariate(*s.seed);
  if (!quintics.empty()) j["quintics"] = poly_list_json(quintics, t_names());
  j["quadrics"] = poly_list_json(s.quadrics, x_names());
  return j;
}

DP5Surface surface_from_json(const json& j) {
  check_header(j, "surface");
  if (j.contains("vars") && j.at("vars") != json(x_names())) bad("surface variables must be x0..x5");
  DP5Surface s;
  s.quadrics = poly_list(j, "quadrics", x_names());
  if (j.contains("seed")) {
    if (!j.at("seed").is_string()) bad("seed must be a string");
    s.seed = parse_univariate(j.at("seed").get<std::string>());
  }
  s.validate();
  linear_syzygies(s);  // throws unless the syzygy space has dimension 5
  return s;
}

json parametrization_to_json(const Parametrization& p) {
  json point = json::array();
  for (const auto& c : p.center) point.push_back(to_string(c));
  return json{{"version", kFormatVersion},
              {"kind", "parametrization"},
              {"point", point},
              {"projection", poly_list_json(p.projection, x_names())},
              {"forms", poly_list_json(p.forms, t_names())},
              {"degree", p.degree}};
}

Parametrization parametrization_from_json(const json& j) {
  check_header(j, "parametrization");
  Parametrization p;
  const json& point = field(j, "point");
  if (!point.is_array() || point.size() != 6) bad("point must have 6 coordinates");
  for (const auto& c : point) p.center.push_back(rational_from(c));
  p.projection = poly_list(j, "projection", x_names());
  p.forms = poly_list(j, "forms", t_names());
  if (p.projection.size() != 3) bad("projection must have 3 linear forms");
  if (p.forms.size() != 6) bad("forms must have 6 entries");
  p.degree = 0;
  for (const auto& f : p.forms) p.degree = std::max(p.degree, f.total_degree());
  if (j.contains("degree") && (!j.at("degree").is_number_integer() || j.at("degree").get<int>() != p.degree))
    bad("degree field does not match the forms");
  return p;
}

namespace {

bool flat(const json& j) {
  for (const auto& e : j)
    if (e.is_structured() && !(e.is_array() && e.size() == 2 && e[0].is_array() && flat(e[0]))) return false;
  return true;
}

void dump_to(const json& j, int indent, std::string* out) {
  const std::string pad(static_cast<size_t>(indent + 2), ' ');
  if (j.is_array() && !j.empty() && !flat(j)) {
    *out += "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      *out += pad;
      dump_to(j[i], indent + 2, out);
      *out += i + 1 < j.size() ? ",\n" : "\n";
    }
    *out += std::string(static_cast<size_t>(indent), ' ') + "]";
  } else if (j.is_object() && !j.empty()) {
    *out += "{\n";
    size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      *out += pad + json(k).dump() + ": ";
      dump_to(v, indent + 2, out);
      *out += ++i < j.size() ? ",\n" : "\n";
    }
    *out += std::string(static_cast<size_t>(indent), ' ') + "}";
  } else {
    *out += j.dump();
  }
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  dump_to(j, 0, &out);
  return out + "\n";
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace dp5::io
