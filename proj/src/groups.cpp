#include "ringhcp/groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace ringhcp {

Row relabel(const Row& r, const Row& g) {
  if (r.size() != g.size()) throw std::invalid_argument("relabel: size mismatch");
  Row out = r;
  for (int p = 0; p < r.size(); ++p) out.set(p, g[r[p] - 1]);
  return out;
}

Row compose(const Row& a, const Row& b) { return relabel(b, a); }

Row inverse(const Row& g) {
  Row out = g;
  for (int b = 1; b <= g.size(); ++b) out.set(g[b - 1] - 1, b);
  return out;
}

std::vector<int> cycle_type(const Row& g) {
  std::vector<int> lengths;
  std::vector<bool> seen(g.size() + 1, false);
  for (int b = 1; b <= g.size(); ++b) {
    if (seen[b]) continue;
    int len = 0;
    for (int x = b; !seen[x]; x = g[x - 1]) {
      seen[x] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::size_t PartGroup::index_of(const Row& g) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) {
    throw std::invalid_argument(g.to_string() + " is not in group " + index_name);
  }
  return static_cast<std::size_t>(it - elements.begin());
}

PartGroup close_generators(std::span<const Row> generators, std::string index_name) {
  int n = generators.empty() ? kTriples : generators.front().size();
  const std::size_t limit = static_cast<std::size_t>(factorial(n));
  std::set<Row> elements{Row::rounds(n)};
  std::deque<Row> frontier{Row::rounds(n)};
  while (!frontier.empty()) {
    Row x = frontier.front();
    frontier.pop_front();
    for (const Row& g : generators) {
      Row y = compose(g, x);
      if (elements.insert(y).second) {
        if (elements.size() > limit) throw std::logic_error("group closure exceeded n! elements");
        frontier.push_back(y);
      }
    }
  }
  PartGroup group;
  group.index_name = std::move(index_name);
  group.generators.assign(generators.begin(), generators.end());
  group.elements.assign(elements.begin(), elements.end());
  return group;
}

GroupValidity validate_part_group(const PartGroup& g) {
  GroupValidity report;
  for (const Row& e : g.elements) {
    auto type = cycle_type(e);
    if (type == std::vector<int>{3}) report.three_cycles.push_back(e);
    if (type == std::vector<int>{2, 2, 2}) report.three_swapped_pairs.push_back(e);
  }
  return report;
}

PartGroup CatalogEntry::group() const {
  std::vector<Row> gens;
  for (auto text : generators) gens.push_back(Row::parse(text));
  return close_generators(gens, std::string(index));
}

const std::vector<CatalogEntry>& group_catalog() {
  static const std::vector<CatalogEntry> catalog = {
      {"0.01", 1, {"1234567"}, {1}, true},
      {"4.07", 2, {"2143567"}, {1, 2}, true},
      {"6.33", 3, {"1357246"}, {1, 3}, true},
      {"6.26", 4, {"1352476"}, {1, 2, 4}, true},
      {"5.05", 5, {"2345167"}, {1, 5}, true},
      {"6.32", 6, {"2316457", "2136547"}, {2, 3, 6}, true},
      {"7.07", 7, {"2345671"}, {1, 7}, true},
      {"5.04", 10, {"2345167", "5432167"}, {2, 5, 10}, true},
      {"7.12", 20, {"2345167", "1352476"}, {4, 5, 10, 20}, true},
      {"7.05", 21, {"2345671", "1357246"}, {3, 7, 21}, true},
      {"4.04", 4, {"2143567", "3412567"}, {2, 4}, false},
      {"6.35", 4, {"2143567", "2134657"}, {2, 4}, false},
      {"6.23", 8, {"2341657", "4321567"}, {2, 4, 8}, false},
      {"6.14", 12, {"5146237", "6423157"}, {4, 6, 12}, false},
      {"7.33", 12, {"3476521", "7514623"}, {4, 6, 12}, false},
      {"6.09", 24, {"3456127", "2165347"}, {6, 8, 12, 24}, false},
      {"7.28", 24, {"2341657", "2134576"}, {6, 8, 12, 24}, false},
      {"6.05", 60, {"2345167", "5342617"}, {12, 20, 30, 60}, false},
      {"7.03", 168, {"7613524", "4725163"}, {24, 42, 56, 84, 168}, false},
  };
  return catalog;
}

const CatalogEntry* find_group(std::string_view index) {
  for (const auto& e : group_catalog()) {
    if (e.index == index) return &e;
  }
  return nullptr;
}

PartGroup catalog_group(std::string_view index) {
  const CatalogEntry* e = find_group(index);
  if (!e) throw std::invalid_argument("unknown group index '" + std::string(index) + "'");
  return e->group();
}

PartitionIntoParts::PartitionIntoParts(const Extent& extent, PartGroup group,
                                       std::span<const Row> seeds)
    : extent_(&extent),
      group_(std::move(group)),
      gadget_of_six_(kSixCount, 0),
      element_of_six_(kSixCount, 0) {
  if (kSixCount % group_.order() != 0) {
    throw std::invalid_argument("group order " + std::to_string(group_.order()) +
                                " does not divide 840");
  }
  std::vector<int> rep_of(kSixCount, 0);
  auto claim_orbit = [&](int rep) {
    const Row& base = extent.six(rep).members.front();
    std::vector<int> orbit;
    for (std::size_t gi = 0; gi < group_.order(); ++gi) {
      int six = extent.six_of(relabel(base, group_.elements[gi]));
      if (rep_of[six - 1] != 0) {
        throw std::logic_error("orbit of six " + std::to_string(rep) + " has size below " +
                               std::to_string(group_.order()) + " in group " + group_.index_name);
      }
      rep_of[six - 1] = rep;
      element_of_six_[six - 1] = gi;
    }
  };
  for (const Row& seed : seeds) {
    int six = extent.six_of(seed);
    if (rep_of[six - 1] == 0) claim_orbit(six);
  }
  for (const Six& s : extent.sixes()) {
    if (rep_of[s.id - 1] == 0) claim_orbit(s.id);
  }
  for (const Six& s : extent.sixes()) {
    if (rep_of[s.id - 1] == s.id) reps_.push_back(s.id);
  }
  for (std::size_t j = 0; j < reps_.size(); ++j) {
    gadget_of_six_[reps_[j] - 1] = static_cast<int>(j) + 1;
  }
  for (const Six& s : extent.sixes()) {
    gadget_of_six_[s.id - 1] = gadget_of_six_[rep_of[s.id - 1] - 1];
  }
}

SixEndRef PartitionIntoParts::rep_of_six_end(const SixEndRef& e) const {
  const Row& g = element_of_six(e.six_id);
  Row mapped = relabel(extent_->row(e), inverse(g));
  SixEndRef out = extent_->six_end_of(mapped, e.speed);
  if (out.six_id != rep_of_six(e.six_id)) {
    throw std::logic_error("relabelled six-end left its representative six");
  }
  return out;
}

PartitionIntoParts partition_into_parts(const PartGroup& g, std::span<const Row> seeds) {
  return PartitionIntoParts(Extent::instance(), g, seeds);
}

}  // namespace ringhcp
