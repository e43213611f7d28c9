#pragma once

// Exact Hamiltonian cycle search on simple undirected graphs: decision and
// full enumeration by edge branching with degree, subcycle and
// biconnectivity propagation.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ringhcp {

// Vertices are labelled 1..N at the interface.
class Graph {
 public:
  Graph(int vertex_count, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return eu_.size(); }
  // Edge endpoints, 0-based.
  int edge_u(int e) const { return eu_[e]; }
  int edge_v(int e) const { return ev_[e]; }
  // (neighbour, edge id) pairs of 0-based vertex v, ascending neighbour.
  std::span<const std::pair<int, int>> incident(int v) const {
    return {adj_.data() + start_[v], adj_.data() + start_[v + 1]};
  }
  // Edge id joining 1-based u and v, or -1.
  int find_edge(int u, int v) const;

 private:
  int n_;
  std::vector<int> eu_, ev_;
  std::vector<int> start_;
  std::vector<std::pair<int, int>> adj_;
};

enum class EdgeState : std::uint8_t { unknown, required, excluded };
enum class Propagation { consistent, contradiction };

// Partial assignment of edge states with an undo trail. Decisions are made
// with require()/exclude() and closed under the propagation rules by
// propagate().
class SearchState {
 public:
  explicit SearchState(const Graph& g);

  const Graph& graph() const { return *g_; }
  EdgeState state(int e) const { return static_cast<EdgeState>(st_[e]); }
  int required_degree(int v0) const { return req_[v0]; }
  int available_degree(int v0) const { return avail_[v0]; }
  int required_count() const { return n_required_; }
  bool complete() const { return n_required_ == g_->vertex_count(); }

  // Queue a decision; false on immediate contradiction.
  bool require(int e);
  bool exclude(int e);
  // Degree rule, subcycle rule and biconnectivity of the non-excluded
  // graph, to a fixed point.
  Propagation propagate();

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t mark);

  // 0-based vertex to branch on, or -1 when every vertex has two required
  // edges.
  int branch_vertex() const;
  // First unknown edge at v0 in ascending neighbour order.
  int branch_edge(int v0) const;

  // 1-based vertex sequence of the completed cycle.
  std::vector<int> cycle() const;

 private:
  struct TrailEntry {
    enum Kind : std::uint8_t { edge, end } kind;
    int index;
    int old;
  };

  bool set_required(int e);
  bool set_excluded(int e);
  bool settle_vertex(int v);
  bool biconnected();
  void set_end(int v, int value);

  const Graph* g_;
  std::vector<std::uint8_t> st_;
  std::vector<int> req_, avail_, end_;
  int n_required_ = 0;
  std::vector<TrailEntry> trail_;
  std::vector<int> queue_;
  // biconnectivity scratch
  std::vector<int> disc_, low_, parent_, iter_;
};

enum class SolveMode { decide, enumerate };
enum class HcStatus { hamiltonian, non_hamiltonian, timeout };

struct SolveOptions {
  SolveMode mode = SolveMode::decide;
  std::optional<double> budget_seconds;
  int threads = 1;
  // Decision depth at which the tree is split into independent subtrees
  // when threads > 1.
  int split_depth = 8;
};

struct HcResult {
  HcStatus status = HcStatus::non_hamiltonian;
  std::vector<std::vector<int>> cycles;  // canonical, ascending
  std::uint64_t count = 0;
  bool authoritative = true;  // false after a timeout
  std::uint64_t nodes = 0;
  double seconds = 0;
};

HcResult solve(const Graph& g, const SolveOptions& options = {});

// Rotate to start at vertex 1 and orient toward its smaller neighbour.
std::vector<int> canonical_cycle(std::vector<int> cycle);

// Independent check: every vertex exactly once, consecutive vertices
// (cyclically) joined by an edge.
bool verify_cycle(int vertex_count, std::span<const std::pair<int, int>> edges,
                  std::span<const int> cycle);

std::string_view to_string(HcStatus s);  // "H", "NH", "TIMEOUT"

}  // namespace ringhcp
