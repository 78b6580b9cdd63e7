#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include <metacyclic/metacyclic.hpp>

namespace testing_groups {

// The six acceptance groups, plus I(5,5,4,2) for the c >= d+2 branch.
inline const std::vector<std::string> &family_I_specs() {
  static const std::vector<std::string> s{"I:4,4,3,2", "I:5,4,3,2", "I:5,5,3,2", "I:5,5,4,2"};
  return s;
}
inline const std::vector<std::string> &family_II_specs() {
  static const std::vector<std::string> s{"II:3,3,2", "II:4,3,2", "II:5,4,2"};
  return s;
}
inline std::vector<std::string> all_specs() {
  std::vector<std::string> out = family_I_specs();
  out.insert(out.end(), family_II_specs().begin(), family_II_specs().end());
  return out;
}

// "I:4,4,3,2" -> "I_4_4_3_2" for parameterized test names
inline std::string param_name(const ::testing::TestParamInfo<std::string> &info) {
  std::string s = info.param;
  for (char &ch : s)
    if (ch == ':' || ch == ',')
      ch = '_';
  return s;
}

inline metacyclic::GroupParams P(const std::string &spec) { return metacyclic::parse_params(spec); }

} // namespace testing_groups
