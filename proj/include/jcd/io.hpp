#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "jcd/driver.hpp"
#include "jcd/matrix.hpp"

namespace jcd::io {

inline constexpr int format_version = 1;

using json = nlohmann::json;

/// Rows of rational strings.
json to_json(const Mat& m);
/// Accepts rational strings and JSON integers. Throws ParseError.
Mat mat_from_json(const json& j, std::size_t n, const std::string& field);

struct InstanceFile {
  std::size_t n = 0;
  Mat s;
  Mat n_mat;
  json metadata;  ///< null when absent
};

/// Single-matrix input for the oracle command.
struct MatrixFile {
  std::size_t n = 0;
  Mat a;
};

enum class TraceLevel { none, summary, full };

struct ResultFile {
  Mat s_prime;
  Mat n_prime;
  std::size_t loops = 0;
  std::vector<std::vector<std::size_t>> gamma_trace;
  std::map<std::string, bool> checks;
  json trace;  ///< null unless a trace was requested
};

InstanceFile parse_instance(const json& j);
MatrixFile parse_matrix_file(const json& j);
ResultFile parse_result(const json& j);

json to_json(const InstanceFile& f);
json to_json(const ResultFile& r);

/// Parses text; JSON syntax errors become ParseError.
json parse_text(const std::string& text);
json read_file(const std::string& path);

/// Builds a ResultFile from a run of jc_d.
ResultFile make_result(const JcdResult& r, TraceLevel level);

}  // namespace jcd::io
