#include "llv/scenario.hpp"

#include "llv/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace llv {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

Rational read_rational(const json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      field_error(field, e.what());
    }
  }
  field_error(field, "expected an integer or a \"p/q\" string");
}

Integer read_integer(const json& j, const std::string& field) {
  const Rational r = read_rational(j, field);
  if (!is_integer(r)) field_error(field, "expected an integer");
  return r.get_num();
}

std::uint64_t read_u64(const json& j, const std::string& field) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  field_error(field, "expected a non-negative integer");
}

unsigned read_unsigned(const json& j, const std::string& field, unsigned min_value) {
  const std::uint64_t v = read_u64(j, field);
  if (v < min_value || v > std::numeric_limits<unsigned>::max())
    field_error(field, "must be at least " + std::to_string(min_value));
  return static_cast<unsigned>(v);
}

const json& require_array(const json& j, const std::string& field) {
  if (!j.is_array()) field_error(field, "expected an array");
  return j;
}

QVector read_vector(const json& j, const std::string& field) {
  require_array(j, field);
  QVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = read_rational(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

QMatrix read_matrix(const json& j, const std::string& field) {
  require_array(j, field);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const QVector row = read_vector(j[i], field + "[" + std::to_string(i) + "]");
    if (!rows.empty() && row.dim() != rows.front().size()) field_error(field, "rows have different lengths");
    rows.emplace_back(row.begin(), row.end());
  }
  if (rows.empty()) field_error(field, "empty matrix");
  return QMatrix::from_rows(rows);
}

void check_keys(const json& obj, const std::string& field, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) field_error(field, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      field_error(field.empty() ? key : field + "." + key, "unknown key");
  }
}

void require_dim(const QVector& v, std::size_t d, const std::string& field) {
  if (v.dim() != d) field_error(field, "expected dimension " + std::to_string(d) + ", got " + std::to_string(v.dim()));
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"sl2",   "sym",           "hard_lefschetz", "fujiki",  "degree_reversal",
                                              "lsc_certificate", "so_conjugation", "sp_group", "twistor"};
  return names;
}

void validate(const Scenario& s) {
  for (const auto& name : s.suites)
    if (std::find(known_suites().begin(), known_suites().end(), name) == known_suites().end())
      throw ParseError("field 'suite': unknown suite '" + name + "'");
  if (s.bound == 0) throw ParseError("field 'bound': must be positive");
  if (s.degrees.empty()) throw ParseError("field 'degrees': must not be empty");
  const unsigned cap = s.allow_large_n ? kLargeMaxDegree : kDefaultMaxDegree;
  for (unsigned n : s.degrees) {
    if (n < 2) throw ParseError("field 'degrees': every degree must be at least 2");
    if (n > cap)
      throw ParseError("field 'degrees': degree " + std::to_string(n) + " exceeds " + std::to_string(cap) +
                       (s.allow_large_n ? "" : " (set allow_large_n for up to 5)"));
  }
}

Scenario parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }

  check_keys(root, "", {"lattice", "suite", "seed", "bound", "degrees", "allow_large_n", "samples", "period_points",
                        "isometries", "chern_data", "sp_params"});

  Scenario s;
  if (!root.contains("lattice")) field_error("lattice", "missing");
  const json& lat = root["lattice"];
  if (lat.is_string()) {
    s.lattice_source = lat.get<std::string>();
    try {
      s.lattice = lattice_from_expression(s.lattice_source);
    } catch (const Error& e) {
      field_error("lattice", e.what());
    }
  } else if (lat.is_object()) {
    check_keys(lat, "lattice", {"gram"});
    if (!lat.contains("gram")) field_error("lattice.gram", "missing");
    const QMatrix gram = read_matrix(lat["gram"], "lattice.gram");
    s.lattice_source = "gram:" + to_string(gram);
    try {
      s.lattice = BBFLattice(BilinearForm(gram));
    } catch (const Error& e) {
      field_error("lattice.gram", e.what());
    }
  } else {
    field_error("lattice", "expected an expression string or {\"gram\": [...]}");
  }

  if (root.contains("suite")) {
    const json& su = root["suite"];
    if (su.is_string()) {
      s.suites.push_back(su.get<std::string>());
    } else if (su.is_array()) {
      for (std::size_t i = 0; i < su.size(); ++i) {
        if (!su[i].is_string()) field_error("suite[" + std::to_string(i) + "]", "expected a string");
        s.suites.push_back(su[i].get<std::string>());
      }
    } else {
      field_error("suite", "expected a string or an array of strings");
    }
  }
  if (root.contains("seed")) s.seed = read_u64(root["seed"], "seed");
  if (root.contains("bound")) s.bound = read_unsigned(root["bound"], "bound", 1);
  if (root.contains("samples")) s.samples = read_unsigned(root["samples"], "samples", 1);
  if (root.contains("allow_large_n")) {
    if (!root["allow_large_n"].is_boolean()) field_error("allow_large_n", "expected a boolean");
    s.allow_large_n = root["allow_large_n"].get<bool>();
  }
  if (root.contains("degrees")) {
    const json& d = require_array(root["degrees"], "degrees");
    s.degrees.clear();
    for (std::size_t i = 0; i < d.size(); ++i)
      s.degrees.push_back(read_unsigned(d[i], "degrees[" + std::to_string(i) + "]", 2));
  }

  const std::size_t rank = s.lattice.rank();
  if (root.contains("period_points")) {
    const json& pp = require_array(root["period_points"], "period_points");
    for (std::size_t i = 0; i < pp.size(); ++i) {
      const std::string f = "period_points[" + std::to_string(i) + "]";
      check_keys(pp[i], f, {"x", "y", "omega"});
      if (!pp[i].contains("x") || !pp[i].contains("y")) field_error(f, "needs both x and y");
      PeriodPointInput p{{read_vector(pp[i]["x"], f + ".x"), read_vector(pp[i]["y"], f + ".y")}, std::nullopt};
      require_dim(p.sigma.x, rank, f + ".x");
      require_dim(p.sigma.y, rank, f + ".y");
      if (pp[i].contains("omega")) {
        p.omega = read_vector(pp[i]["omega"], f + ".omega");
        require_dim(*p.omega, rank, f + ".omega");
      }
      s.period_points.push_back(std::move(p));
    }
  }
  if (root.contains("isometries")) {
    const json& is = require_array(root["isometries"], "isometries");
    for (std::size_t i = 0; i < is.size(); ++i) {
      const std::string f = "isometries[" + std::to_string(i) + "]";
      QMatrix m = read_matrix(is[i], f);
      if (!m.is_square() || (m.rows() != rank && m.rows() != rank + 2))
        field_error(f, "expected a square matrix of size rank or rank + 2");
      s.isometries.push_back(std::move(m));
    }
  }
  if (root.contains("chern_data")) {
    const json& cd = require_array(root["chern_data"], "chern_data");
    for (std::size_t i = 0; i < cd.size(); ++i) {
      const std::string f = "chern_data[" + std::to_string(i) + "]";
      check_keys(cd[i], f, {"r", "lambda_x", "lambda_y"});
      if (!cd[i].contains("r") || !cd[i].contains("lambda_x") || !cd[i].contains("lambda_y"))
        field_error(f, "needs r, lambda_x and lambda_y");
      ChernData c{read_integer(cd[i]["r"], f + ".r"), read_vector(cd[i]["lambda_x"], f + ".lambda_x"),
                  read_vector(cd[i]["lambda_y"], f + ".lambda_y")};
      if (c.r <= 0) field_error(f + ".r", "must be positive");
      require_dim(c.lambda_x, rank, f + ".lambda_x");
      require_dim(c.lambda_y, rank, f + ".lambda_y");
      s.chern_data.push_back(std::move(c));
    }
  }
  if (root.contains("sp_params")) {
    const json& sp = require_array(root["sp_params"], "sp_params");
    for (std::size_t i = 0; i < sp.size(); ++i) {
      const std::string f = "sp_params[" + std::to_string(i) + "]";
      check_keys(sp[i], f, {"n", "e"});
      if (!sp[i].contains("n") || !sp[i].contains("e")) field_error(f, "needs n and e");
      SpParams p{static_cast<int>(read_unsigned(sp[i]["n"], f + ".n", 2)), read_integer(sp[i]["e"], f + ".e")};
      if (p.e < 1) field_error(f + ".e", "must be positive");
      s.sp_params.push_back(std::move(p));
    }
  }

  validate(s);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace llv
