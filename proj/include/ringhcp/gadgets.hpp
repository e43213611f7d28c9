#pragma once

// Undirected in-out subgraphs S3 (16 vertices) and S6 (33 vertices), and an
// exhaustive checker for the in-out property.
//
// A Hamiltonian cycle of a host graph that enters one of these gadgets at
// incoming vertex i_k must sweep the whole gadget and leave from o_k. The
// checker establishes this by enumerating Hamiltonian paths of the gadget.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ringhcp {

enum class GadgetKind { s3, s6 };

GadgetKind parse_gadget_kind(std::string_view text);
std::string_view to_string(GadgetKind kind);

struct Gadget {
  GadgetKind kind = GadgetKind::s3;
  int n_slots = 0;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based labels, first < second
  std::vector<int> incoming;               // i_1..i_n
  std::vector<int> outgoing;               // o_1..o_n

  // Slot k (1-based) whose incoming or outgoing vertex is `label`; 0 if none.
  int incoming_slot(int label) const;
  int outgoing_slot(int label) const;
  std::size_t edge_count() const { return edges.size(); }
};

Gadget build_gadget(GadgetKind kind);

struct InOutCertificate {
  GadgetKind kind = GadgetKind::s3;
  // slot_paths[k-1] is the unique Hamiltonian path i_k -> o_k when one exists.
  std::vector<std::vector<int>> slot_paths;
  std::vector<std::size_t> slot_path_counts;
  bool no_cross_paths = false;     // no other boundary pair is joined by a Hamiltonian path
  bool no_two_path_cover = false;  // no two disjoint boundary paths cover the gadget
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

InOutCertificate verify_in_out(const Gadget& g);

// Every Hamiltonian path of g starting at `from`, in DFS order over
// ascending neighbour labels.
std::vector<std::vector<int>> hamiltonian_paths_from(const Gadget& g, int from);

// "1-2-3".
std::string format_path(const std::vector<int>& path);
// Stable text layout: "slot k: path" lines then the two flags.
std::string format_certificate(const InOutCertificate& cert);

}  // namespace ringhcp
