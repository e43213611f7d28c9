#include "ringhcp/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ringhcp {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

struct Adjacency {
  int n = 0;
  std::vector<std::vector<int>> nbrs;  // 1-based, sorted
  Mask all = 0;

  explicit Adjacency(const Gadget& g) : n(g.vertex_count), nbrs(g.vertex_count + 1) {
    if (n >= 63) throw std::invalid_argument("gadget too large for bitset search");
    for (auto [u, v] : g.edges) {
      nbrs[u].push_back(v);
      nbrs[v].push_back(u);
    }
    for (auto& list : nbrs) std::sort(list.begin(), list.end());
    for (int v = 1; v <= n; ++v) all |= bit(v);
  }
};

// Calls visit(path) for each simple path from `from` that covers exactly
// `target` (which must contain `from`). Stops when visit returns false.
template <typename Visit>
bool cover_paths(const Adjacency& adj, Mask target, int from, std::vector<int>& path, Mask used,
                 Visit&& visit) {
  path.push_back(from);
  used |= bit(from);
  bool keep_going = true;
  if (used == target) {
    keep_going = visit(path);
  } else {
    for (int w : adj.nbrs[from]) {
      if ((target & bit(w)) && !(used & bit(w))) {
        if (!cover_paths(adj, target, w, path, used, visit)) {
          keep_going = false;
          break;
        }
      }
    }
  }
  path.pop_back();
  return keep_going;
}

// Does `target` have a Hamiltonian path with both ends in `boundary`?
// A single boundary vertex counts as a path.
std::optional<std::vector<int>> boundary_cover_path(const Adjacency& adj, Mask target,
                                                    Mask boundary) {
  std::optional<std::vector<int>> found;
  for (int s = 1; s <= adj.n && !found; ++s) {
    if (!(target & bit(s)) || !(boundary & bit(s))) continue;
    std::vector<int> path;
    cover_paths(adj, target, s, path, 0, [&](const std::vector<int>& p) {
      if (boundary & bit(p.back())) {
        found = p;
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace

GadgetKind parse_gadget_kind(std::string_view text) {
  if (text == "s3") return GadgetKind::s3;
  if (text == "s6") return GadgetKind::s6;
  throw std::invalid_argument("unknown gadget '" + std::string(text) + "'");
}

std::string_view to_string(GadgetKind kind) { return kind == GadgetKind::s3 ? "s3" : "s6"; }

int Gadget::incoming_slot(int label) const {
  auto it = std::find(incoming.begin(), incoming.end(), label);
  return it == incoming.end() ? 0 : static_cast<int>(it - incoming.begin()) + 1;
}

int Gadget::outgoing_slot(int label) const {
  auto it = std::find(outgoing.begin(), outgoing.end(), label);
  return it == outgoing.end() ? 0 : static_cast<int>(it - outgoing.begin()) + 1;
}

Gadget build_gadget(GadgetKind kind) {
  Gadget g;
  g.kind = kind;
  std::vector<std::pair<int, int>> extra;
  if (kind == GadgetKind::s3) {
    g.n_slots = 3;
    g.vertex_count = 16;
    extra = {{1, 5}, {1, 13}, {3, 12}, {4, 8}, {9, 16}};
    g.incoming = {1, 6, 8};
    g.outgoing = {16, 11, 14};
  } else {
    g.n_slots = 6;
    g.vertex_count = 33;
    extra = {{1, 24},  {4, 9},   {6, 31},  {7, 12},  {10, 15},
             {13, 18}, {16, 27}, {22, 33}, {25, 30}, {28, 33}};
    g.incoming = {1, 7, 13, 19, 25, 31};
    g.outgoing = {33, 27, 3, 9, 21, 15};
  }
  for (int v = 1; v < g.vertex_count; ++v) g.edges.emplace_back(v, v + 1);
  g.edges.insert(g.edges.end(), extra.begin(), extra.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<std::vector<int>> hamiltonian_paths_from(const Gadget& g, int from) {
  Adjacency adj(g);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  cover_paths(adj, adj.all, from, path, 0, [&](const std::vector<int>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

InOutCertificate verify_in_out(const Gadget& g) {
  Adjacency adj(g);
  InOutCertificate cert;
  cert.kind = g.kind;
  cert.slot_paths.resize(g.n_slots);
  cert.slot_path_counts.assign(g.n_slots, 0);

  for (int a : g.incoming) {
    if (g.outgoing_slot(a)) {
      cert.violations.push_back("vertex " + std::to_string(a) + " is both incoming and outgoing");
    }
  }

  std::vector<int> boundary_list = g.incoming;
  boundary_list.insert(boundary_list.end(), g.outgoing.begin(), g.outgoing.end());
  Mask boundary = 0;
  for (int b : boundary_list) boundary |= bit(b);

  // Every Hamiltonian path from every boundary vertex, classified by its
  // other end.
  cert.no_cross_paths = true;
  for (int s : boundary_list) {
    for (const auto& p : hamiltonian_paths_from(g, s)) {
      int t = p.back();
      if (!(boundary & bit(t))) continue;
      int k = g.incoming_slot(s);
      int ko = g.outgoing_slot(t);
      if (k && ko == k) {
        if (cert.slot_path_counts[k - 1]++ == 0) cert.slot_paths[k - 1] = p;
        continue;
      }
      // The reverse of a slot path is reported from its outgoing end.
      int kr = g.incoming_slot(t);
      if (kr && g.outgoing_slot(s) == kr) continue;
      // Each unordered pair is seen from both ends; report once.
      if (s > t) continue;
      cert.no_cross_paths = false;
      cert.violations.push_back("cross Hamiltonian path " + format_path(p));
    }
  }
  for (int k = 1; k <= g.n_slots; ++k) {
    std::size_t count = cert.slot_path_counts[k - 1];
    if (count != 1) {
      cert.violations.push_back("slot " + std::to_string(k) + " has " + std::to_string(count) +
                                " Hamiltonian paths from i_k to o_k");
    }
  }

  // Two vertex-disjoint paths with all four ends on the boundary that cover
  // every vertex. The first path starts at the smaller boundary vertex of
  // its pair; the rest is checked with memoisation on the remaining set.
  cert.no_two_path_cover = true;
  std::unordered_map<Mask, bool> remainder_has_path;
  for (int s : boundary_list) {
    std::vector<int> first;
    // Paths of any length starting at s, including the single vertex.
    auto extend = [&](auto&& self, int v, Mask used) -> bool {
      first.push_back(v);
      used |= bit(v);
      bool keep_going = true;
      if ((boundary & bit(v)) && v >= s && used != adj.all) {
        Mask rest = adj.all & ~used;
        auto it = remainder_has_path.find(rest);
        bool has;
        std::optional<std::vector<int>> second;
        if (it == remainder_has_path.end()) {
          second = boundary_cover_path(adj, rest, boundary);
          has = second.has_value();
          remainder_has_path.emplace(rest, has);
        } else {
          has = it->second;
          if (has) second = boundary_cover_path(adj, rest, boundary);
        }
        if (has) {
          cert.no_two_path_cover = false;
          cert.violations.push_back("two-path boundary cover " + format_path(first) + " + " +
                                    format_path(*second));
          keep_going = false;
        }
      }
      if (keep_going) {
        for (int w : adj.nbrs[v]) {
          if (!(used & bit(w)) && !self(self, w, used)) {
            keep_going = false;
            break;
          }
        }
      }
      first.pop_back();
      return keep_going;
    };
    if (!extend(extend, s, 0)) break;
  }
  return cert;
}

std::string format_path(const std::vector<int>& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s.push_back('-');
    s += std::to_string(path[i]);
  }
  return s;
}

std::string format_certificate(const InOutCertificate& cert) {
  std::ostringstream out;
  out << "gadget " << to_string(cert.kind) << "\n";
  for (std::size_t k = 0; k < cert.slot_paths.size(); ++k) {
    out << "slot " << k + 1 << ": " << format_path(cert.slot_paths[k]) << "\n";
  }
  out << "cross-paths: " << (cert.no_cross_paths ? "none" : "FOUND") << "\n";
  out << "two-path-covers: " << (cert.no_two_path_cover ? "none" : "FOUND") << "\n";
  for (const auto& v : cert.violations) out << "violation: " << v << "\n";
  out << "status: " << (cert.ok() ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace ringhcp
