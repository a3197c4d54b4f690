#pragma once

/**
 * @file published_specs.hpp
 * @brief Published 14- and 16-point transforms and transform-pair inputs.
 *
 * Coefficients are listed exactly as published, including the 16-point
 * mod-19 row, which does not satisfy N N^T = I as printed (swapping its
 * sixth and seventh coefficients gives a valid key).
 */

#include <cstdint>
#include <string_view>
#include <vector>

#include "nht/core.hpp"

namespace nht::published {

struct PublishedSpec {
  std::string_view label;
  std::int64_t modulus;
  std::vector<std::int64_t> coefficients;

  [[nodiscard]] NhtSpec spec() const { return NhtSpec::from_signed(Modulus(modulus), coefficients); }
};

struct PublishedInput {
  std::string_view label;
  std::vector<std::int64_t> values;
};

inline const PublishedSpec& fourteen_point_mod29() {
  static const PublishedSpec s{"14pt-displayed-mod29", 29, {3, 15, 22, 11, 20, 10, 5}};
  return s;
}

inline const PublishedSpec& sixteen_point_mod13() {
  static const PublishedSpec s{"16pt-displayed-mod13", 13, {7, 11, 12, 6, 3, 8, 4, 2}};
  return s;
}

inline const std::vector<PublishedSpec>& fourteen_point_table() {
  static const std::vector<PublishedSpec> rows{
      {"14pt-table-row1", 7, {6, 2, 1, 4, 2, 1, 4}},
      {"14pt-table-row2", 139, {18, 8, 4, 2, 1, 70, 35}},
      {"14pt-table-row3", 157, {134, 110, 63, 126, 95, 33, 66}},
      {"14pt-table-row4", 163, {116, 68, 136, 109, 55, 110, 57}},
      {"14pt-table-row5", 181, {86, 171, 161, 141, 101, 21, 42}},
  };
  return rows;
}

inline const std::vector<PublishedSpec>& sixteen_point_table() {
  static const std::vector<PublishedSpec> rows{
      {"16pt-table-row1", 19, {11, 14, 7, 13, 16, 4, 8, 2}},
      {"16pt-table-row2", 89, {34, 67, 45, 1, 2, 4, 8, 16}},
      {"16pt-table-row3", 97, {45, 89, 81, 65, 33, 66, 35, 70}},
      {"16pt-table-row4", 101, {10, 19, 38, 76, 51, 1, 2, 4}},
      {"16pt-table-row5", 103, {32, 63, 23, 46, 92, 81, 59, 15}},
  };
  return rows;
}

/// The 14-point mod-211 example. Its last coefficient is printed with a
/// repeated "f=" label; it is read as g = 182.
inline const PublishedSpec& fourteen_point_mod211() {
  static const PublishedSpec s{"14pt-large-mod211", 211, {155, 98, 196, 181, 151, 91, 182}};
  return s;
}

inline const PublishedSpec& sixteen_point_mod157() {
  static const PublishedSpec s{"16pt-large-mod157", 157, {66, 133, 109, 61, 122, 87, 17, 34}};
  return s;
}

/// Every published key, in a fixed order.
inline std::vector<PublishedSpec> all_specs() {
  std::vector<PublishedSpec> out{fourteen_point_mod29(), sixteen_point_mod13()};
  for (const auto& r : fourteen_point_table()) out.push_back(r);
  for (const auto& r : sixteen_point_table()) out.push_back(r);
  out.push_back(fourteen_point_mod211());
  out.push_back(sixteen_point_mod157());
  return out;
}

/// Data blocks listed for the 14-point mod-29 transform.
inline const std::vector<PublishedInput>& fourteen_point_inputs() {
  static const std::vector<PublishedInput> rows{
      {"14pt-pair-row1", {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}},
      {"14pt-pair-row2", {1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
      {"14pt-pair-row3", {0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0}},
      {"14pt-pair-row4", {1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0}},
  };
  return rows;
}

/// Data blocks listed for the 16-point mod-13 transform.
inline const std::vector<PublishedInput>& sixteen_point_inputs() {
  static const std::vector<PublishedInput> rows{
      {"16pt-pair-row2", {1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
      {"16pt-pair-row3", {0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0}},
      {"16pt-pair-row4", {1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0}},
      {"16pt-pair-row5", {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}},
      {"16pt-pair-row6", {1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0}},
  };
  return rows;
}

}  // namespace nht::published
