#include "ringhcp/manifest.hpp"

namespace ringhcp {

namespace {
constexpr auto H = Hamiltonicity::hamiltonian;
constexpr auto NH = Hamiltonicity::non_hamiltonian;
constexpr auto U = Hamiltonicity::unknown;
constexpr auto S = Method::stedman;
constexpr auto E = Method::erin;
}  // namespace

std::string ManifestEntry::name() const {
  std::string s = method == Method::stedman ? "Sted" : "Erin";
  s += std::to_string(parts);
  if (second_table) s += " (" + std::string(group) + ")";
  return s;
}

const std::vector<ManifestEntry>& manifest() {
  static const std::vector<ManifestEntry> entries = {
      {S, "0.01", 1, 27720, 45360, H, {}, false},
      {S, "4.07", 2, 13860, 22680, H, {}, false},
      {S, "6.33", 3, 9240, 15120, H, {}, false},
      {S, "6.26", 4, 6930, 11340, H, {}, false},
      {S, "5.05", 5, 5544, 9072, H, 4, false},
      {S, "6.32", 6, 4620, 7560, H, 132, false},
      {S, "7.07", 7, 3960, 6480, NH, {}, false},
      {S, "5.04", 10, 2772, 4536, H, 4, false},
      {S, "7.12", 20, 1386, 2268, H, 6, false},
      {S, "7.05", 21, 1320, 2160, NH, {}, false},
      {E, "0.01", 1, 13440, 21840, U, {}, false},
      {E, "4.07", 2, 6720, 10920, H, {}, false},
      {E, "6.33", 3, 4480, 7280, NH, {}, false},
      {E, "6.26", 4, 3360, 5460, NH, {}, false},
      {E, "5.05", 5, 2688, 4368, NH, {}, false},
      {E, "6.32", 6, 2240, 3640, NH, {}, false},
      {E, "7.07", 7, 1920, 3120, NH, {}, false},
      {E, "5.04", 10, 1344, 2184, NH, {}, false},
      {E, "7.12", 20, 672, 1092, NH, {}, false},
      {E, "7.05", 21, 640, 1040, NH, {}, false},
      {S, "4.04", 4, 6930, 11340, U, {}, true},
      {S, "6.35", 4, 6930, 11340, H, {}, true},
      {S, "6.23", 8, 3465, 5670, NH, {}, true},
      {S, "6.14", 12, 2310, 3780, H, 248, true},
      {S, "7.33", 12, 2310, 3780, NH, {}, true},
      {S, "6.09", 24, 1155, 1890, NH, {}, true},
      {S, "7.28", 24, 1155, 1890, NH, {}, true},
      {S, "6.05", 60, 462, 756, H, 20, true},
      {S, "7.03", 168, 165, 270, NH, {}, true},
      {E, "4.04", 4, 3360, 5460, NH, {}, true},
      {E, "6.35", 4, 3360, 5460, NH, {}, true},
      {E, "6.23", 8, 1680, 2730, NH, {}, true},
      {E, "6.14", 12, 1120, 1820, NH, {}, true},
      {E, "7.33", 12, 1120, 1820, NH, {}, true},
      {E, "6.09", 24, 560, 910, NH, {}, true},
      {E, "7.28", 24, 560, 910, NH, {}, true},
      {E, "6.05", 60, 224, 364, NH, {}, true},
      {E, "7.03", 168, 80, 130, NH, {}, true},
  };
  return entries;
}

std::string_view to_string(Hamiltonicity h) {
  switch (h) {
    case Hamiltonicity::hamiltonian: return "H";
    case Hamiltonicity::non_hamiltonian: return "NH";
    case Hamiltonicity::unknown: return "U";
  }
  return "?";
}

}  // namespace ringhcp
