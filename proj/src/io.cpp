#include "jcd/io.hpp"

#include <fstream>
#include <sstream>

#include "jcd/errors.hpp"

namespace jcd::io {

namespace {

Rational rational_from_json(const json& v, const std::string& field) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError(field + ": entries must be rational strings or integers");
}

std::size_t dimension_from_json(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
    throw ParseError("field \"n\" must be a positive integer");
  return j["n"].get<std::size_t>();
}

void check_format(const json& j) {
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object");
  if (j.contains("format") && (!j["format"].is_number_integer() || j["format"].get<int>() != format_version))
    throw ParseError("unsupported format version (expected " + std::to_string(format_version) + ")");
}

const json& require(const json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"");
  return j[field];
}

}  // namespace

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j, std::size_t n, const std::string& field) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(field + ": expected " + std::to_string(n) + " rows");
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw ParseError(field + ": row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(j[i][k], field);
  }
  return m;
}

InstanceFile parse_instance(const json& j) {
  check_format(j);
  InstanceFile f;
  f.n = dimension_from_json(j);
  f.s = mat_from_json(require(j, "S"), f.n, "S");
  f.n_mat = mat_from_json(require(j, "N"), f.n, "N");
  if (j.contains("metadata")) f.metadata = j["metadata"];
  return f;
}

MatrixFile parse_matrix_file(const json& j) {
  check_format(j);
  MatrixFile f;
  f.n = dimension_from_json(j);
  f.a = mat_from_json(require(j, "A"), f.n, "A");
  return f;
}

ResultFile parse_result(const json& j) {
  check_format(j);
  ResultFile r;
  const json& sp = require(j, "S_prime");
  if (!sp.is_array() || sp.empty()) throw ParseError("S_prime: expected a nonempty matrix");
  const std::size_t n = sp.size();
  r.s_prime = mat_from_json(sp, n, "S_prime");
  r.n_prime = mat_from_json(require(j, "N_prime"), n, "N_prime");
  if (j.contains("loops")) r.loops = j["loops"].get<std::size_t>();
  if (j.contains("gamma_trace")) r.gamma_trace = j["gamma_trace"].get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("checks")) r.checks = j["checks"].get<std::map<std::string, bool>>();
  if (j.contains("trace")) r.trace = j["trace"];
  return r;
}

json to_json(const InstanceFile& f) {
  json j{{"format", format_version}, {"n", f.n}, {"S", to_json(f.s)}, {"N", to_json(f.n_mat)}};
  if (!f.metadata.is_null()) j["metadata"] = f.metadata;
  return j;
}

json to_json(const ResultFile& r) {
  json j{{"format", format_version},
         {"S_prime", to_json(r.s_prime)},
         {"N_prime", to_json(r.n_prime)},
         {"loops", r.loops},
         {"gamma_trace", r.gamma_trace},
         {"checks", r.checks}};
  if (!r.trace.is_null()) j["trace"] = r.trace;
  return j;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

ResultFile make_result(const JcdResult& r, TraceLevel level) {
  ResultFile out;
  out.s_prime = r.s_prime;
  out.n_prime = r.n_prime;
  out.loops = r.loops();
  for (const auto& step : r.trace) out.gamma_trace.push_back(step.gamma.counts);
  if (level == TraceLevel::none) return out;

  out.trace = json::array();
  for (const auto& step : r.trace) {
    json s{{"gamma", step.gamma.counts}};
    json values = json::array();
    for (const auto& p : step.decomposition) values.push_back(p.eigenvalue.str());
    s["eigenvalues"] = std::move(values);
    s["chosen_eigenvalue"] = step.chosen_eigenvalue ? json(step.chosen_eigenvalue->str()) : json(nullptr);
    if (level == TraceLevel::full) {
      s["S"] = to_json(step.s);
      s["N"] = to_json(step.n);
      s["chosen_matrix"] = step.chosen_matrix ? to_json(*step.chosen_matrix) : json(nullptr);
    }
    out.trace.push_back(std::move(s));
  }
  return out;
}

}  // namespace jcd::io
