#pragma once

#include <string>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/subgroup.hpp"
#include "tga/twist.hpp"

namespace tga {

/// One of the named cocycle setups: the subgroup M inside its natural ambient
/// group together with the cocycle on the character group of M.
struct BuiltinSetup {
  std::string name;
  std::string group_spec;  // ambient group, "A5" | "S4" | "S8"
  CharContext ctx;
  Cocycle omega;
};

const std::vector<std::string>& builtin_cocycle_names();
bool is_builtin_cocycle(const std::string& name);
BuiltinSetup builtin_cocycle(const std::string& name);

/// "S<n>" or "A<n>" with 2 <= n <= 12.
SubgroupTable group_from_spec(const std::string& spec);

}  // namespace tga
