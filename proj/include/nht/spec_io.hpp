#pragma once

/**
 * @file spec_io.hpp
 * @brief Text formats: spec documents (JSON) and residue vectors.
 *
 * Spec document:
 *
 *     {"size": 14, "modulus": 29, "coefficients": [3, 15, 22, 11, 20, 10, 5]}
 *
 * `size` must equal twice the number of coefficients. Negative coefficients
 * are reduced into [0, m). Specs containing a zero coefficient carry
 * `"allow_zero": true`, both on output and as the opt-in on input.
 */

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nht/core.hpp"
#include "nht/errors.hpp"

namespace nht {

namespace detail {

inline std::int64_t json_integer(const nlohmann::json& v, std::string_view field) {
  if (!v.is_number_integer()) throw ParseError("field '" + std::string(field) + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace detail

/// Parses a spec document. `force_zero` permits zero coefficients even when
/// the document does not opt in.
inline NhtSpec parse_spec(std::string_view text, bool force_zero = false) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("spec document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("spec document must be a JSON object");
  for (const char* key : {"size", "modulus", "coefficients"}) {
    if (!doc.contains(key)) throw ParseError(std::string("spec document lacks '") + key + "'");
  }
  const auto size = detail::json_integer(doc["size"], "size");
  const auto modulus = detail::json_integer(doc["modulus"], "modulus");
  const auto& coeffs = doc["coefficients"];
  if (!coeffs.is_array()) throw ParseError("'coefficients' must be an array");

  std::vector<std::int64_t> values;
  for (const auto& c : coeffs) values.push_back(detail::json_integer(c, "coefficients"));
  if (values.empty()) throw InvalidSpec("'coefficients' must not be empty");
  if (size != 2 * static_cast<std::int64_t>(values.size())) {
    throw InvalidSpec("size " + std::to_string(size) + " does not equal twice the coefficient count " +
                      std::to_string(values.size()));
  }
  bool allow_zero = force_zero;
  if (doc.contains("allow_zero")) {
    if (!doc["allow_zero"].is_boolean()) throw ParseError("'allow_zero' must be a boolean");
    allow_zero = allow_zero || doc["allow_zero"].get<bool>();
  }
  return NhtSpec::from_signed(Modulus(modulus), values, allow_zero ? ZeroPolicy::allow : ZeroPolicy::reject);
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline NhtSpec load_spec(const std::filesystem::path& path, bool force_zero = false) {
  return parse_spec(read_text_file(path), force_zero);
}

/// One-line JSON document for a spec. Key order is fixed.
inline std::string to_json_line(const NhtSpec& spec) {
  std::string out = "{\"size\":" + std::to_string(spec.size()) + ",\"modulus\":" + std::to_string(spec.modulus().value()) +
                    ",\"coefficients\":[";
  for (std::size_t i = 0; i < spec.half_size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(spec.coeffs()[i]);
  }
  out += ']';
  if (spec.has_zero_coefficient()) out += ",\"allow_zero\":true";
  out += '}';
  return out;
}

/// Integers separated by commas and/or whitespace.
inline std::vector<std::int64_t> parse_integers(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    if (text[j] == '-' || text[j] == '+') ++j;
    const std::size_t digits_begin = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == digits_begin || (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j])))) {
      throw ParseError("bad integer token near offset " + std::to_string(i));
    }
    try {
      out.push_back(std::stoll(std::string(text.substr(i, j - i))));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range near offset " + std::to_string(i));
    }
    i = j;
  }
  return out;
}

struct ParsedVector {
  ResidueVector vector;
  std::size_t reduced_count = 0;  ///< entries that were outside [0, m)
};

inline ParsedVector parse_vector(std::string_view text, Modulus m) {
  const auto values = parse_integers(text);
  std::size_t reduced = 0;
  for (auto v : values) {
    if (v < 0 || static_cast<std::uint64_t>(v) >= m.value()) ++reduced;
  }
  return ParsedVector{ResidueVector::from_signed(m, values), reduced};
}

inline std::string format_vector(const ResidueVector& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace nht
