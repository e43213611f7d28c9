#pragma once

// Assembly of Hamiltonian cycle instances from gadget copies, one per
// representative six, wired by the call transition maps.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ringhcp/gadgets.hpp"
#include "ringhcp/groups.hpp"
#include "ringhcp/sixes.hpp"

namespace ringhcp {

using Edge = std::pair<int, int>;  // 1-based, first < second

struct VertexMeta {
  int six_id = 0;  // representative six owning the gadget
  int label = 0;   // gadget-internal label
};

struct WiringEdge {
  int out_vertex = 0;  // outgoing vertex of the source gadget
  int in_vertex = 0;   // incoming vertex of the target gadget
  SixEndRef from;
  Call call = Call::plain;
  SixEndRef to;  // representative six-end reached
};

struct Instance {
  Method method = Method::erin;
  std::string group_index;
  int vertex_count = 0;
  int gadget_size = 0;
  std::vector<int> gadget_six;     // gadget j (1-based) -> representative six id
  std::vector<Edge> edges;         // sorted, unique
  std::vector<VertexMeta> meta;    // index v-1
  std::vector<WiringEdge> wiring;  // construction order

  std::size_t gadget_count() const { return gadget_six.size(); }
  int gadget_of_vertex(int v) const { return (v - 1) / gadget_size + 1; }
  int vertex(int gadget, int label) const { return (gadget - 1) * gadget_size + label; }
};

struct BuildOptions {
  // Skip wiring edges whose source and target are the same gadget.
  bool drop_self_edges = false;
};

GadgetKind gadget_kind_for(Method m);

Instance build_erin(const PartitionIntoParts& parts, BuildOptions options = {});
Instance build_stedman(const PartitionIntoParts& parts, BuildOptions options = {});
Instance build_instance(Method m, const PartitionIntoParts& parts, BuildOptions options = {});

enum class TrivialStatus { possibly_hamiltonian, trivially_non_hamiltonian };

// Stedman sixes alternate slow and quick, so a part with an odd number of
// sixes cannot close.
TrivialStatus trivial_nh_check(Method m, const PartitionIntoParts& parts);

// TSPLIB-style HCP graph.
struct HcpGraph {
  std::string name;
  int dimension = 0;
  std::vector<Edge> edges;
};

void write_hcp(std::ostream& out, const Instance& inst, const std::string& name);
HcpGraph read_hcp(std::istream& in);
HcpGraph read_hcp_file(const std::filesystem::path& path);

// Sidecar layout:
//   method <erin|stedman>
//   group <index>
//   dimension <N>
//   vertex <v> <six_id> <label>          (one per vertex)
//   wiring <u> <v> <six_end> <call>      (u outgoing, v incoming)
void write_meta(std::ostream& out, const Instance& inst);
// Rebuilds an Instance (edges included) from a sidecar. Gadget internal
// edges are regenerated from the gadget definition.
Instance read_meta(std::istream& in);
Instance read_meta_file(const std::filesystem::path& path);

// Writes <path> and <path>.meta. Throws std::runtime_error naming the path
// on I/O failure.
void export_hcp(const Instance& inst, const std::string& name, const std::filesystem::path& path);

}  // namespace ringhcp
