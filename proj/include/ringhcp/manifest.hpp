#pragma once

// Published sizes and Hamiltonicity of the 38 (method, group) instances.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringhcp/sixes.hpp"

namespace ringhcp {

enum class Hamiltonicity { hamiltonian, non_hamiltonian, unknown };

struct ManifestEntry {
  Method method;
  std::string_view group;
  int parts;
  int vertices;
  int edges;
  Hamiltonicity hamiltonicity;
  std::optional<int> solutions;
  bool second_table;  // groups without an odd round-block count

  // "Sted5", "Erin24 (6.09)".
  std::string name() const;
};

const std::vector<ManifestEntry>& manifest();
std::string_view to_string(Hamiltonicity h);  // "H", "NH", "U"

}  // namespace ringhcp
