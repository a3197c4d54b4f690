#pragma once

// Regression report over the built-in published keys and data blocks.

#include <cstdint>
#include <string>
#include <vector>

#include "nht/core.hpp"
#include "nht/published_specs.hpp"
#include "nht/shapes.hpp"
#include "nht/solver.hpp"
#include "nht/spec_io.hpp"

namespace nht {

struct TableCheck {
  std::string kind;  ///< "orthogonality" or "transform-pair"
  std::string label;
  std::uint64_t modulus = 0;
  bool pass = false;
  std::string detail;  ///< residues, or the recomputed output block
};

inline std::string format_residues(const std::vector<std::uint64_t>& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(r[i]);
  }
  return out + ']';
}

inline std::vector<TableCheck> published_table_checks() {
  std::vector<TableCheck> out;
  for (const auto& p : published::all_specs()) {
    const auto spec = p.spec();
    const auto report = verify_solution(spec);
    out.push_back(TableCheck{"orthogonality", std::string(p.label), spec.modulus().value(),
                             report.gram_identity && report.agreement(), "r=" + format_residues(report.conditions.residues)});
  }

  auto pairs = [&](const published::PublishedSpec& key, const std::vector<published::PublishedInput>& inputs) {
    const auto spec = key.spec();
    const auto n = build_matrix(spec);
    for (const auto& in : inputs) {
      const auto f = ResidueVector::from_signed(spec.modulus(), in.values);
      const auto pair = transform_pair(spec, f);
      // Cross-check against the explicit matrix and the round trip.
      std::vector<std::uint64_t> expected(n.size());
      for (std::size_t i = 0; i < n.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < n.size(); ++j) acc = (acc + n(i, j) * f[j]) % spec.modulus().value();
        expected[i] = acc;
      }
      const bool pass = pair.output == ResidueVector(spec.modulus(), expected) && inverse(spec, pair.output) == f;
      out.push_back(TableCheck{"transform-pair", std::string(in.label), spec.modulus().value(), pass,
                               "g=" + format_vector(pair.output, ' ')});
    }
  };
  pairs(published::fourteen_point_mod29(), published::fourteen_point_inputs());
  pairs(published::sixteen_point_mod13(), published::sixteen_point_inputs());
  return out;
}

inline std::string table_checks_csv(const std::vector<TableCheck>& checks) {
  std::string out = "kind,label,modulus,result,detail\n";
  for (const auto& c : checks) {
    out += c.kind + ',' + c.label + ',' + std::to_string(c.modulus) + ',' + (c.pass ? "pass" : "fail") + ',' + c.detail +
           '\n';
  }
  return out;
}

}  // namespace nht
