#include "ringhcp/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace ringhcp {

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> edges)
    : n_(vertex_count), start_(vertex_count + 1, 0) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<int, int>> sorted;
  sorted.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") is not a simple edge on " + std::to_string(n_) + " vertices");
    }
    sorted.emplace_back(std::min(u, v) - 1, std::max(u, v) - 1);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto [u, v] : sorted) {
    eu_.push_back(u);
    ev_.push_back(v);
    ++start_[u + 1];
    ++start_[v + 1];
  }
  for (int v = 0; v < n_; ++v) start_[v + 1] += start_[v];
  adj_.resize(2 * sorted.size());
  std::vector<int> fill(start_.begin(), start_.end() - 1);
  for (int e = 0; e < static_cast<int>(eu_.size()); ++e) {
    adj_[fill[eu_[e]]++] = {ev_[e], e};
    adj_[fill[ev_[e]]++] = {eu_[e], e};
  }
  for (int v = 0; v < n_; ++v) {
    std::sort(adj_.begin() + start_[v], adj_.begin() + start_[v + 1]);
  }
}

int Graph::find_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return -1;
  for (auto [w, e] : incident(u - 1)) {
    if (w == v - 1) return e;
  }
  return -1;
}

SearchState::SearchState(const Graph& g)
    : g_(&g),
      st_(g.edge_count(), static_cast<std::uint8_t>(EdgeState::unknown)),
      req_(g.vertex_count(), 0),
      avail_(g.vertex_count(), 0),
      end_(g.vertex_count()),
      disc_(g.vertex_count()),
      low_(g.vertex_count()),
      parent_(g.vertex_count()),
      iter_(g.vertex_count()) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    avail_[v] = static_cast<int>(g.incident(v).size());
    end_[v] = v;
    queue_.push_back(v);
  }
}

void SearchState::set_end(int v, int value) {
  trail_.push_back({TrailEntry::end, v, end_[v]});
  end_[v] = value;
}

bool SearchState::set_excluded(int e) {
  auto s = static_cast<EdgeState>(st_[e]);
  if (s == EdgeState::excluded) return true;
  if (s == EdgeState::required) return false;
  st_[e] = static_cast<std::uint8_t>(EdgeState::excluded);
  trail_.push_back({TrailEntry::edge, e, 0});
  int u = g_->edge_u(e), v = g_->edge_v(e);
  --avail_[u];
  --avail_[v];
  queue_.push_back(u);
  queue_.push_back(v);
  return true;
}

bool SearchState::set_required(int e) {
  auto s = static_cast<EdgeState>(st_[e]);
  if (s == EdgeState::required) return true;
  if (s == EdgeState::excluded) return false;
  st_[e] = static_cast<std::uint8_t>(EdgeState::required);
  trail_.push_back({TrailEntry::edge, e, 0});
  int u = g_->edge_u(e), v = g_->edge_v(e);
  ++req_[u];
  ++req_[v];
  ++n_required_;
  if (req_[u] > 2 || req_[v] > 2) return false;
  queue_.push_back(u);
  queue_.push_back(v);

  const int n = g_->vertex_count();
  int a = end_[u], b = end_[v];
  if (a == v) return n_required_ == n;  // closes a cycle
  set_end(a, b);
  set_end(b, a);
  if (n_required_ == n - 1) {
    // The required edges form a Hamiltonian path a..b; only its closing
    // edge can complete the cycle.
    for (auto [w, f] : g_->incident(a)) {
      if (w == b) return set_required(f);
    }
    return false;
  }
  for (auto [w, f] : g_->incident(a)) {
    if (w == b && f != e) return set_excluded(f);
  }
  return true;
}

bool SearchState::require(int e) { return set_required(e); }
bool SearchState::exclude(int e) { return set_excluded(e); }

bool SearchState::settle_vertex(int v) {
  if (avail_[v] < 2) return false;
  if (req_[v] == 2) {
    if (avail_[v] > 2) {
      for (auto [w, e] : g_->incident(v)) {
        if (static_cast<EdgeState>(st_[e]) == EdgeState::unknown && !set_excluded(e)) return false;
      }
    }
  } else if (avail_[v] == 2) {
    for (auto [w, e] : g_->incident(v)) {
      if (static_cast<EdgeState>(st_[e]) == EdgeState::unknown && !set_required(e)) return false;
    }
  }
  return true;
}

// Tarjan articulation-point search on the non-excluded graph, iterative.
bool SearchState::biconnected() {
  const int n = g_->vertex_count();
  if (n < 3) return false;
  std::fill(disc_.begin(), disc_.end(), -1);
  int time = 0;
  disc_[0] = low_[0] = time++;
  parent_[0] = -1;
  iter_[0] = 0;
  int root_children = 0;
  int visited = 1;
  std::vector<int>& stack = queue_;  // empty between propagation rounds
  stack.clear();
  stack.push_back(0);
  while (!stack.empty()) {
    int v = stack.back();
    auto inc = g_->incident(v);
    if (iter_[v] < static_cast<int>(inc.size())) {
      auto [w, e] = inc[iter_[v]++];
      if (static_cast<EdgeState>(st_[e]) == EdgeState::excluded || w == parent_[v]) continue;
      if (disc_[w] < 0) {
        disc_[w] = low_[w] = time++;
        parent_[w] = v;
        iter_[w] = 0;
        ++visited;
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else {
        low_[v] = std::min(low_[v], disc_[w]);
      }
    } else {
      stack.pop_back();
      int p = parent_[v];
      if (p >= 0) {
        low_[p] = std::min(low_[p], low_[v]);
        if (p != 0 && low_[v] >= disc_[p]) {
          stack.clear();
          return false;
        }
      }
    }
  }
  return visited == n && root_children == 1;
}

Propagation SearchState::propagate() {
  while (!queue_.empty()) {
    int v = queue_.back();
    queue_.pop_back();
    if (!settle_vertex(v)) {
      queue_.clear();
      return Propagation::contradiction;
    }
  }
  if (complete()) return Propagation::consistent;
  return biconnected() ? Propagation::consistent : Propagation::contradiction;
}

void SearchState::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    TrailEntry t = trail_.back();
    trail_.pop_back();
    if (t.kind == TrailEntry::end) {
      end_[t.index] = t.old;
      continue;
    }
    int u = g_->edge_u(t.index), v = g_->edge_v(t.index);
    if (static_cast<EdgeState>(st_[t.index]) == EdgeState::required) {
      --req_[u];
      --req_[v];
      --n_required_;
    } else {
      ++avail_[u];
      ++avail_[v];
    }
    st_[t.index] = static_cast<std::uint8_t>(EdgeState::unknown);
  }
  queue_.clear();
}

int SearchState::branch_vertex() const {
  int best = -1;
  for (int v = 0; v < g_->vertex_count(); ++v) {
    if (req_[v] >= 2) continue;
    if (best < 0 || avail_[v] < avail_[best]) best = v;
  }
  return best;
}

int SearchState::branch_edge(int v0) const {
  for (auto [w, e] : g_->incident(v0)) {
    if (static_cast<EdgeState>(st_[e]) == EdgeState::unknown) return e;
  }
  return -1;
}

std::vector<int> SearchState::cycle() const {
  const int n = g_->vertex_count();
  std::vector<int> out;
  out.reserve(n);
  int prev = -1, cur = 0;
  for (int i = 0; i < n; ++i) {
    out.push_back(cur + 1);
    int next = -1;
    for (auto [w, e] : g_->incident(cur)) {
      if (static_cast<EdgeState>(st_[e]) == EdgeState::required && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
    if (cur < 0) break;
  }
  return out;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

bool verify_cycle(int vertex_count, std::span<const std::pair<int, int>> edges,
                  std::span<const int> cycle) {
  if (vertex_count < 3 || static_cast<int>(cycle.size()) != vertex_count) return false;
  std::vector<bool> seen(vertex_count + 1, false);
  for (int v : cycle) {
    if (v < 1 || v > vertex_count || seen[v]) return false;
    seen[v] = true;
  }
  std::vector<std::pair<int, int>> sorted(edges.begin(), edges.end());
  for (auto& [u, v] : sorted) {
    if (u > v) std::swap(u, v);
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (!std::binary_search(sorted.begin(), sorted.end(), std::make_pair(std::min(u, v), std::max(u, v)))) {
      return false;
    }
  }
  return true;
}

std::string_view to_string(HcStatus s) {
  switch (s) {
    case HcStatus::hamiltonian: return "H";
    case HcStatus::non_hamiltonian: return "NH";
    case HcStatus::timeout: return "TIMEOUT";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;
using Decision = std::pair<int, bool>;  // edge, required?

struct Shared {
  SolveMode mode;
  std::optional<Clock::time_point> deadline;
  std::atomic<bool> timed_out{false};
  // Lowest subtree index holding a cycle; in decide mode, subtrees after
  // it are abandoned.
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes{0};
};

class Searcher {
 public:
  Searcher(const Graph& g, Shared& shared) : state_(g), shared_(shared) {}

  SearchState& state() { return state_; }

  // Full DFS below the current state. Returns false when the search must
  // stop (timeout, or a cycle found in decide mode).
  bool run(std::size_t subtree) {
    if (!tick(subtree)) return false;
    if (state_.complete()) {
      cycles_.push_back(canonical_cycle(state_.cycle()));
      return shared_.mode == SolveMode::enumerate;
    }
    int v = state_.branch_vertex();
    int e = v < 0 ? -1 : state_.branch_edge(v);
    if (e < 0) return true;
    for (bool required : {true, false}) {
      std::size_t m = state_.mark();
      bool ok = required ? state_.require(e) : state_.exclude(e);
      if (ok && state_.propagate() == Propagation::consistent) {
        if (!run(subtree)) {
          state_.undo(m);
          return false;
        }
      }
      state_.undo(m);
    }
    return true;
  }

  // Consistent states at `depth` decisions (or shallower leaves), in DFS
  // order.
  void split(int depth, std::vector<Decision>& prefix, std::vector<std::vector<Decision>>& out) {
    int v = state_.branch_vertex();
    int e = v < 0 ? -1 : state_.branch_edge(v);
    if (depth == 0 || state_.complete() || e < 0) {
      out.push_back(prefix);
      return;
    }
    for (bool required : {true, false}) {
      std::size_t m = state_.mark();
      bool ok = required ? state_.require(e) : state_.exclude(e);
      if (ok && state_.propagate() == Propagation::consistent) {
        prefix.emplace_back(e, required);
        split(depth - 1, prefix, out);
        prefix.pop_back();
      }
      state_.undo(m);
    }
  }

  std::vector<std::vector<int>>& cycles() { return cycles_; }

 private:
  bool tick(std::size_t subtree) {
    if ((++local_nodes_ & 255u) == 0) {
      shared_.nodes.fetch_add(256, std::memory_order_relaxed);
      if (shared_.deadline && Clock::now() > *shared_.deadline) shared_.timed_out = true;
    }
    if (shared_.timed_out) return false;
    if (shared_.mode == SolveMode::decide && shared_.first_hit.load() < subtree) return false;
    return true;
  }

 public:
  std::uint64_t flush_nodes() {
    std::uint64_t rest = local_nodes_ & 255u;
    shared_.nodes.fetch_add(rest, std::memory_order_relaxed);
    local_nodes_ = 0;
    return rest;
  }

 private:
  SearchState state_;
  Shared& shared_;
  std::vector<std::vector<int>> cycles_;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace

HcResult solve(const Graph& g, const SolveOptions& options) {
  auto t0 = Clock::now();
  Shared shared;
  shared.mode = options.mode;
  if (options.budget_seconds) {
    shared.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*options.budget_seconds));
  }

  HcResult result;
  auto finish = [&](std::vector<std::vector<int>> cycles) {
    std::sort(cycles.begin(), cycles.end());
    if (options.mode == SolveMode::decide && cycles.size() > 1) cycles.resize(1);
    result.cycles = std::move(cycles);
    result.count = result.cycles.size();
    result.nodes = shared.nodes.load();
    result.authoritative = !shared.timed_out;
    if (shared.timed_out && (options.mode == SolveMode::enumerate || result.cycles.empty())) {
      result.status = HcStatus::timeout;
    } else {
      result.status = result.cycles.empty() ? HcStatus::non_hamiltonian : HcStatus::hamiltonian;
    }
    result.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return result;
  };

  if (g.vertex_count() < 3) return finish({});
  Searcher root(g, shared);
  if (root.state().propagate() == Propagation::contradiction) return finish({});

  if (options.threads <= 1) {
    root.run(0);
    root.flush_nodes();
    return finish(std::move(root.cycles()));
  }

  std::vector<std::vector<Decision>> subtrees;
  std::vector<Decision> prefix;
  root.split(std::max(1, options.split_depth), prefix, subtrees);

  std::vector<std::vector<std::vector<int>>> per_subtree(subtrees.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Searcher s(g, shared);
    s.state().propagate();
    for (std::size_t i = next++; i < subtrees.size(); i = next++) {
      if (shared.timed_out) break;
      if (options.mode == SolveMode::decide && shared.first_hit.load() < i) break;
      std::size_t m = s.state().mark();
      bool ok = true;
      for (auto [e, required] : subtrees[i]) {
        ok = (required ? s.state().require(e) : s.state().exclude(e)) &&
             s.state().propagate() == Propagation::consistent;
        if (!ok) break;
      }
      if (ok) s.run(i);
      s.state().undo(m);
      per_subtree[i] = std::move(s.cycles());
      s.cycles().clear();
      if (!per_subtree[i].empty()) {
        std::size_t cur = shared.first_hit.load();
        while (i < cur && !shared.first_hit.compare_exchange_weak(cur, i)) {
        }
      }
    }
    s.flush_nodes();
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::vector<std::vector<int>> merged;
  for (std::size_t i = 0; i < per_subtree.size(); ++i) {
    if (options.mode == SolveMode::decide && !per_subtree[i].empty()) {
      // Same cycle the sequential search reports first.
      merged.push_back(per_subtree[i].front());
      break;
    }
    for (auto& c : per_subtree[i]) merged.push_back(std::move(c));
  }
  return finish(std::move(merged));
}

}  // namespace ringhcp
