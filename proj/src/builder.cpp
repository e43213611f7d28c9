#include "ringhcp/builder.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ringhcp {

namespace {

class Assembler {
 public:
  Assembler(Method method, const PartitionIntoParts& parts, BuildOptions options)
      : parts_(parts), options_(options), gadget_(build_gadget(gadget_kind_for(method))) {
    for (int a : gadget_.incoming) {
      if (gadget_.outgoing_slot(a)) {
        throw std::logic_error("gadget incoming and outgoing vertices overlap");
      }
    }
    inst_.method = method;
    inst_.group_index = parts.group().index_name;
    inst_.gadget_size = gadget_.vertex_count;
    inst_.gadget_six = parts.representatives();
    inst_.vertex_count = static_cast<int>(inst_.gadget_six.size()) * gadget_.vertex_count;
    inst_.meta.resize(inst_.vertex_count);
    for (std::size_t j = 1; j <= inst_.gadget_six.size(); ++j) {
      int gj = static_cast<int>(j);
      for (int label = 1; label <= gadget_.vertex_count; ++label) {
        inst_.meta[inst_.vertex(gj, label) - 1] = {inst_.gadget_six[j - 1], label};
      }
      for (auto [a, b] : gadget_.edges) insert(inst_.vertex(gj, a), inst_.vertex(gj, b));
    }
  }

  // Edge from o_{out_slot} of the gadget of `from` to i_{in_slot} of the
  // gadget of the representative of call(from).
  void wire(const TransitionMaps& maps, Call call, int out_offset, int in_offset) {
    Speed from_speed = inst_.method == Method::erin ? Speed::none
                       : out_offset == 0              ? Speed::slow
                                                      : Speed::quick;
    for (std::size_t j = 1; j <= inst_.gadget_six.size(); ++j) {
      for (int k = 1; k <= 3; ++k) {
        SixEndRef from{inst_.gadget_six[j - 1], k, from_speed};
        SixEndRef to = parts_.rep_of_six_end(maps.apply(call, from));
        int a = parts_.gadget_of(to.six_id);
        int u = inst_.vertex(static_cast<int>(j), gadget_.outgoing[k + out_offset - 1]);
        int v = inst_.vertex(a, gadget_.incoming[to.k + in_offset - 1]);
        if (options_.drop_self_edges && a == static_cast<int>(j)) continue;
        insert(u, v);
        inst_.wiring.push_back({u, v, from, call, to});
      }
    }
  }

  Instance finish() {
    inst_.edges.assign(edges_.begin(), edges_.end());
    return std::move(inst_);
  }

 private:
  void insert(int u, int v) {
    if (u == v) throw std::logic_error("self loop at vertex " + std::to_string(u));
    if (!edges_.emplace(std::min(u, v), std::max(u, v)).second) {
      throw std::logic_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }

  const PartitionIntoParts& parts_;
  BuildOptions options_;
  Gadget gadget_;
  Instance inst_;
  std::set<Edge> edges_;
};

std::runtime_error io_error(const std::filesystem::path& path, const std::string& what) {
  return std::runtime_error(path.string() + ": " + what);
}

}  // namespace

GadgetKind gadget_kind_for(Method m) { return m == Method::erin ? GadgetKind::s3 : GadgetKind::s6; }

Instance build_erin(const PartitionIntoParts& parts, BuildOptions options) {
  TransitionMaps maps = erin_transitions(parts.extent());
  Assembler a(Method::erin, parts, options);
  a.wire(maps, Call::plain, 0, 0);
  a.wire(maps, Call::bob, 0, 0);
  return a.finish();
}

Instance build_stedman(const PartitionIntoParts& parts, BuildOptions options) {
  TransitionMaps maps = stedman_transitions(parts.extent());
  Assembler a(Method::stedman, parts, options);
  a.wire(maps, Call::slow_plain, 0, 3);
  a.wire(maps, Call::quick_plain, 3, 0);
  a.wire(maps, Call::slow_bob, 0, 3);
  a.wire(maps, Call::quick_bob, 3, 0);
  return a.finish();
}

Instance build_instance(Method m, const PartitionIntoParts& parts, BuildOptions options) {
  return m == Method::erin ? build_erin(parts, options) : build_stedman(parts, options);
}

TrivialStatus trivial_nh_check(Method m, const PartitionIntoParts& parts) {
  if (m == Method::stedman && parts.part_size() % 2 != 0) {
    return TrivialStatus::trivially_non_hamiltonian;
  }
  return TrivialStatus::possibly_hamiltonian;
}

void write_hcp(std::ostream& out, const Instance& inst, const std::string& name) {
  out << "NAME: " << name << "\n";
  out << "TYPE: HCP\n";
  out << "DIMENSION: " << inst.vertex_count << "\n";
  out << "EDGE_DATA_FORMAT: EDGE_LIST\n";
  out << "EDGE_DATA_SECTION\n";
  for (auto [u, v] : inst.edges) out << u << " " << v << "\n";
  out << "-1\nEOF\n";
}

HcpGraph read_hcp(std::istream& in) {
  HcpGraph g;
  std::string line;
  bool in_edges = false;
  bool terminated = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!in_edges) {
      auto colon = line.find(':');
      std::string key = line.substr(0, colon);
      key.erase(key.find_last_not_of(" \t") + 1);
      std::string value;
      if (colon != std::string::npos) {
        value = line.substr(colon + 1);
        value.erase(0, value.find_first_not_of(" \t"));
      }
      if (key == "NAME") g.name = value;
      else if (key == "TYPE" && value != "HCP") throw std::runtime_error("not an HCP file: TYPE " + value);
      else if (key == "DIMENSION") g.dimension = std::stoi(value);
      else if (key == "EDGE_DATA_FORMAT" && value != "EDGE_LIST") {
        throw std::runtime_error("unsupported EDGE_DATA_FORMAT " + value);
      } else if (key == "EDGE_DATA_SECTION") in_edges = true;
      else if (key == "EOF") break;
      continue;
    }
    std::istringstream fields(line);
    int u = 0;
    if (!(fields >> u)) {
      if (line.rfind("EOF", 0) == 0) break;
      throw std::runtime_error("bad edge line '" + line + "'");
    }
    if (u == -1) {
      terminated = true;
      in_edges = false;
      continue;
    }
    int v = 0;
    if (!(fields >> v)) throw std::runtime_error("bad edge line '" + line + "'");
    if (u < 1 || v < 1 || u > g.dimension || v > g.dimension || u == v) {
      throw std::runtime_error("edge out of range '" + line + "'");
    }
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!terminated && g.edges.empty()) throw std::runtime_error("no EDGE_DATA_SECTION found");
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

HcpGraph read_hcp_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error(path, "cannot open");
  try {
    return read_hcp(in);
  } catch (const std::exception& e) {
    throw io_error(path, e.what());
  }
}

void write_meta(std::ostream& out, const Instance& inst) {
  const Extent& extent = Extent::instance();
  out << "method " << to_string(inst.method) << "\n";
  out << "group " << inst.group_index << "\n";
  out << "dimension " << inst.vertex_count << "\n";
  for (int v = 1; v <= inst.vertex_count; ++v) {
    const auto& m = inst.meta[v - 1];
    out << "vertex " << v << " " << m.six_id << " " << m.label << "\n";
  }
  for (const auto& w : inst.wiring) {
    out << "wiring " << w.out_vertex << " " << w.in_vertex << " " << extent.format(w.from) << " "
        << call_token(w.call) << "\n";
  }
}

Instance read_meta(std::istream& in) {
  const Extent& extent = Extent::instance();
  Instance inst;
  std::string line;
  std::set<Edge> edges;
  bool have_method = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    if (key == "method") {
      std::string m;
      fields >> m;
      inst.method = parse_method(m);
      inst.gadget_size = build_gadget(gadget_kind_for(inst.method)).vertex_count;
      have_method = true;
    } else if (key == "group") {
      fields >> inst.group_index;
    } else if (key == "dimension") {
      fields >> inst.vertex_count;
      inst.meta.assign(inst.vertex_count, {});
    } else if (key == "vertex") {
      int v = 0;
      VertexMeta m;
      if (!(fields >> v >> m.six_id >> m.label) || v < 1 || v > inst.vertex_count) {
        throw std::runtime_error("bad vertex line '" + line + "'");
      }
      inst.meta[v - 1] = m;
    } else if (key == "wiring") {
      WiringEdge w;
      std::string six_end, call;
      if (!(fields >> w.out_vertex >> w.in_vertex >> six_end >> call)) {
        throw std::runtime_error("bad wiring line '" + line + "'");
      }
      w.from = extent.parse_six_end(six_end);
      w.call = parse_call(call);
      inst.wiring.push_back(w);
    } else {
      throw std::runtime_error("unknown metadata line '" + line + "'");
    }
  }
  if (!have_method || inst.vertex_count == 0) throw std::runtime_error("metadata header missing");
  if (inst.vertex_count % inst.gadget_size != 0) {
    throw std::runtime_error("dimension is not a multiple of the gadget size");
  }
  Gadget gadget = build_gadget(gadget_kind_for(inst.method));
  int gadgets = inst.vertex_count / inst.gadget_size;
  for (int j = 1; j <= gadgets; ++j) {
    inst.gadget_six.push_back(inst.meta[inst.vertex(j, 1) - 1].six_id);
    for (auto [a, b] : gadget.edges) edges.emplace(inst.vertex(j, a), inst.vertex(j, b));
  }
  // The target six-end of each wiring edge is the source of the edge
  // leaving the matching outgoing vertex of the target gadget.
  for (auto& w : inst.wiring) {
    int a = inst.gadget_of_vertex(w.in_vertex);
    int slot = gadget.incoming_slot(inst.meta[w.in_vertex - 1].label);
    int k = slot > 3 ? slot - 3 : slot;
    Speed speed = inst.method == Method::erin ? Speed::none
                                              : (slot > 3 ? Speed::quick : Speed::slow);
    w.to = SixEndRef{inst.gadget_six[a - 1], k, speed};
    edges.emplace(std::min(w.out_vertex, w.in_vertex), std::max(w.out_vertex, w.in_vertex));
  }
  inst.edges.assign(edges.begin(), edges.end());
  return inst;
}

Instance read_meta_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw io_error(path, "cannot open");
  try {
    return read_meta(in);
  } catch (const std::exception& e) {
    throw io_error(path, e.what());
  }
}

void export_hcp(const Instance& inst, const std::string& name, const std::filesystem::path& path) {
  {
    std::ofstream out(path);
    if (!out) throw io_error(path, "cannot open for writing");
    write_hcp(out, inst, name);
    if (!out) throw io_error(path, "write failed");
  }
  std::filesystem::path meta = path;
  meta += ".meta";
  std::ofstream out(meta);
  if (!out) throw io_error(meta, "cannot open for writing");
  write_meta(out, inst);
  if (!out) throw io_error(meta, "write failed");
}

}  // namespace ringhcp
