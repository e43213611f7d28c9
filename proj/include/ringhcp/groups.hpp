#pragma once

// Part groups: bell relabellings that split the extent into equivalent
// parts, the catalog of usable groups, and the quotient of sixes by a group.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringhcp/rows.hpp"
#include "ringhcp/sixes.hpp"

namespace ringhcp {

// A relabelling g is written as a row: bell b becomes bell g[b-1].
Row relabel(const Row& r, const Row& g);
// (a * b)(x) = a(b(x)): relabel by b first, then by a.
Row compose(const Row& a, const Row& b);
Row inverse(const Row& g);
// Cycle lengths of g as a permutation of bells, descending, fixed points
// omitted.
std::vector<int> cycle_type(const Row& g);

struct PartGroup {
  std::string index_name;
  std::vector<Row> generators;
  std::vector<Row> elements;  // ascending

  std::size_t order() const { return elements.size(); }
  std::size_t index_of(const Row& g) const;  // throws if absent
};

PartGroup close_generators(std::span<const Row> generators, std::string index_name = {});

struct GroupValidity {
  std::vector<Row> three_cycles;       // elements moving exactly 3 bells in one cycle
  std::vector<Row> three_swapped_pairs; // elements of cycle type 2+2+2
  bool valid() const { return three_cycles.empty() && three_swapped_pairs.empty(); }
};

GroupValidity validate_part_group(const PartGroup& g);

struct CatalogEntry {
  std::string_view index;
  int parts;
  std::vector<std::string_view> generators;
  std::vector<int> round_blocks;  // possible round-block counts
  bool odd_block_capable;         // admits an odd number of round blocks

  PartGroup group() const;
};

const std::vector<CatalogEntry>& group_catalog();
const CatalogEntry* find_group(std::string_view index);
// Throws std::invalid_argument for an unknown index.
PartGroup catalog_group(std::string_view index);

// Orbits of the 840 sixes under relabelling. Representatives are, by
// default, the orbit member with the smallest row; `seeds` may name rows
// whose sixes are preferred as representatives of their orbits.
class PartitionIntoParts {
 public:
  PartitionIntoParts(const Extent& extent, PartGroup group, std::span<const Row> seeds = {});

  const PartGroup& group() const { return group_; }
  const Extent& extent() const { return *extent_; }

  // Representative six ids, ascending; gadget j of an instance is
  // representatives()[j-1].
  const std::vector<int>& representatives() const { return reps_; }
  std::size_t part_size() const { return reps_.size(); }
  int gadget_of(int six_id) const { return gadget_of_six_[six_id - 1]; }

  int rep_of_six(int six_id) const { return reps_[gadget_of(six_id) - 1]; }
  // Group element g with six = g(rep_of_six(six)).
  const Row& element_of_six(int six_id) const { return group_.elements[element_of_six_[six_id - 1]]; }
  SixEndRef rep_of_six_end(const SixEndRef& e) const;

 private:
  const Extent* extent_;
  PartGroup group_;
  std::vector<int> reps_;
  std::vector<int> gadget_of_six_;
  std::vector<std::size_t> element_of_six_;
};

PartitionIntoParts partition_into_parts(const PartGroup& g, std::span<const Row> seeds = {});

}  // namespace ringhcp
