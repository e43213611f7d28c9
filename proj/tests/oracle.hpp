#pragma once

// Test-only reference computations, written against plain strings so they
// share no code with the library.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ringhcp::oracle {

// Applies one place notation token to a row given as a digit string.
inline std::string apply_token(std::string row, const std::string& token) {
  std::vector<bool> fixed(row.size(), false);
  for (char c : token) fixed[c - '1'] = true;
  for (std::size_t p = 0; p < row.size();) {
    if (fixed[p]) {
      ++p;
    } else {
      std::swap(row[p], row[p + 1]);
      p += 2;
    }
  }
  return row;
}

inline std::string apply_notation(std::string row, const std::string& notation) {
  std::size_t start = 0;
  while (start <= notation.size() && !notation.empty()) {
    std::size_t dot = notation.find('.', start);
    row = apply_token(row, notation.substr(start, dot == std::string::npos ? std::string::npos
                                                                           : dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return row;
}

// Sign by inversion count.
inline bool is_odd(const std::string& row) {
  int inversions = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::size_t j = i + 1; j < row.size(); ++j) inversions += row[i] > row[j];
  }
  return inversions % 2 == 1;
}

// Number of undirected Hamiltonian cycles by trying every vertex order with
// vertex 1 first and discarding mirror images.
inline long long brute_force_hc_count(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 3) return 0;
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::vector<int> rest;
  for (int v = 2; v <= n; ++v) rest.push_back(v);
  long long count = 0;
  do {
    if (rest.front() > rest.back()) continue;  // each cycle once, not its reverse
    bool ok = adj[1][rest.front()] && adj[rest.back()][1];
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = adj[rest[i]][rest[i + 1]];
    count += ok;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

}  // namespace ringhcp::oracle
