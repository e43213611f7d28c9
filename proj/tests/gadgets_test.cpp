#include "ringhcp/gadgets.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace ringhcp {
namespace {

// Independent path counter: plain adjacency matrix and recursion.
long long count_hamiltonian_paths(int n, const std::vector<std::pair<int, int>>& edges, int from,
                                  int to) {
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::vector<bool> used(n + 1, false);
  std::function<long long(int, int)> walk = [&](int v, int depth) -> long long {
    if (depth == n) return v == to ? 1 : 0;
    if (v == to) return 0;
    long long total = 0;
    for (int w = 1; w <= n; ++w) {
      if (adj[v][w] && !used[w]) {
        used[w] = true;
        total += walk(w, depth + 1);
        used[w] = false;
      }
    }
    return total;
  };
  used[from] = true;
  return walk(from, 1);
}

std::vector<std::pair<int, int>> path_plus(int n, std::vector<std::pair<int, int>> extra) {
  for (int i = 1; i < n; ++i) extra.emplace_back(i, i + 1);
  return extra;
}

const std::vector<std::pair<int, int>> kS3Extra = {{1, 5}, {1, 13}, {3, 12}, {4, 8}, {9, 16}};
const std::vector<std::pair<int, int>> kS6Extra = {{1, 24},  {4, 9},   {6, 31},  {7, 12},
                                                   {10, 15}, {13, 18}, {16, 27}, {22, 33},
                                                   {25, 30}, {28, 33}};

TEST(Gadget, S3Structure) {
  Gadget g = build_gadget(GadgetKind::s3);
  EXPECT_EQ(g.vertex_count, 16);
  EXPECT_EQ(g.edge_count(), 20u);
  EXPECT_EQ(g.incoming, std::vector<int>({1, 6, 8}));
  EXPECT_EQ(g.outgoing, std::vector<int>({16, 11, 14}));
  int degree1 = 0;
  for (auto [u, v] : g.edges) degree1 += (u == 1 || v == 1);
  EXPECT_EQ(degree1, 3);
  EXPECT_EQ(g.incoming_slot(6), 2);
  EXPECT_EQ(g.outgoing_slot(14), 3);
  EXPECT_EQ(g.incoming_slot(2), 0);
}

TEST(Gadget, S6Structure) {
  Gadget g = build_gadget(GadgetKind::s6);
  EXPECT_EQ(g.vertex_count, 33);
  EXPECT_EQ(g.edge_count(), 42u);
  EXPECT_EQ(g.incoming, std::vector<int>({1, 7, 13, 19, 25, 31}));
  EXPECT_EQ(g.outgoing, std::vector<int>({33, 27, 3, 9, 21, 15}));
}

TEST(Gadget, EdgesMatchTheConstruction) {
  for (auto [kind, n, extra] : {std::tuple{GadgetKind::s3, 16, kS3Extra},
                                std::tuple{GadgetKind::s6, 33, kS6Extra}}) {
    auto expected = path_plus(n, extra);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(build_gadget(kind).edges, expected);
  }
}

TEST(InOut, S3WitnessPaths) {
  InOutCertificate cert = verify_in_out(build_gadget(GadgetKind::s3));
  EXPECT_TRUE(cert.ok());
  ASSERT_EQ(cert.slot_paths.size(), 3u);
  EXPECT_EQ(format_path(cert.slot_paths[0]), "1-2-3-4-5-6-7-8-9-10-11-12-13-14-15-16");
  EXPECT_EQ(format_path(cert.slot_paths[1]), "6-7-8-4-5-1-2-3-12-13-14-15-16-9-10-11");
  EXPECT_EQ(format_path(cert.slot_paths[2]), "8-7-6-5-4-3-2-1-13-12-11-10-9-16-15-14");
  EXPECT_EQ(cert.slot_path_counts, std::vector<std::size_t>({1, 1, 1}));
  EXPECT_TRUE(cert.no_cross_paths);
  EXPECT_TRUE(cert.no_two_path_cover);
}

TEST(InOut, S6WitnessPaths) {
  InOutCertificate cert = verify_in_out(build_gadget(GadgetKind::s6));
  EXPECT_TRUE(cert.ok());
  const std::vector<std::string> expected = {
      "1-2-3-4-5-6-7-8-9-10-11-12-13-14-15-16-17-18-19-20-21-22-23-24-25-26-27-28-29-30-31-32-33",
      "7-8-9-10-11-12-13-14-15-16-17-18-19-20-21-22-23-24-1-2-3-4-5-6-31-32-33-28-29-30-25-26-27",
      "13-14-15-10-11-12-7-8-9-4-5-6-31-32-33-28-29-30-25-26-27-16-17-18-19-20-21-22-23-24-1-2-3",
      "19-20-21-22-23-24-1-2-3-4-5-6-31-32-33-28-29-30-25-26-27-16-17-18-13-14-15-10-11-12-7-8-9",
      "25-26-27-28-29-30-31-32-33-22-23-24-1-2-3-4-5-6-7-8-9-10-11-12-13-14-15-16-17-18-19-20-21",
      "31-32-33-28-29-30-25-26-27-16-17-18-19-20-21-22-23-24-1-2-3-4-5-6-7-8-9-10-11-12-13-14-15"};
  ASSERT_EQ(cert.slot_paths.size(), 6u);
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(format_path(cert.slot_paths[k]), expected[k]);
  EXPECT_TRUE(cert.no_cross_paths);
  EXPECT_TRUE(cert.no_two_path_cover);
}

TEST(InOut, BoundaryPathCountsAgreeWithBruteForce) {
  Gadget g = build_gadget(GadgetKind::s3);
  auto edges = path_plus(16, kS3Extra);
  EXPECT_EQ(count_hamiltonian_paths(16, edges, 1, 11), 0);  // i_1 -> o_2
  std::vector<int> boundary = g.incoming;
  boundary.insert(boundary.end(), g.outgoing.begin(), g.outgoing.end());
  for (int a : boundary) {
    for (int b : boundary) {
      if (a == b) continue;
      long long expected = count_hamiltonian_paths(16, edges, a, b);
      long long found = 0;
      for (const auto& p : hamiltonian_paths_from(g, a)) found += p.back() == b;
      EXPECT_EQ(found, expected) << a << "->" << b;
      bool same_slot = g.incoming_slot(a) != 0 && g.incoming_slot(a) == g.outgoing_slot(b);
      bool same_slot_rev = g.outgoing_slot(a) != 0 && g.outgoing_slot(a) == g.incoming_slot(b);
      EXPECT_EQ(expected, same_slot || same_slot_rev ? 1 : 0) << a << "->" << b;
    }
  }
}

TEST(InOut, DetectsABrokenGadget) {
  Gadget g = build_gadget(GadgetKind::s3);
  std::erase(g.edges, std::pair{9, 16});  // slot 2 can no longer be swept
  InOutCertificate cert = verify_in_out(g);
  EXPECT_FALSE(cert.ok());
  EXPECT_FALSE(cert.violations.empty());
}

TEST(InOut, CertificateText) {
  std::string text = format_certificate(verify_in_out(build_gadget(GadgetKind::s3)));
  EXPECT_NE(text.find("slot 2: 6-7-8-4-5-1-2-3-12-13-14-15-16-9-10-11"), std::string::npos);
  EXPECT_NE(text.find("status: ok"), std::string::npos);
}

TEST(GadgetKind, ParseAndFormat) {
  EXPECT_EQ(parse_gadget_kind("s6"), GadgetKind::s6);
  EXPECT_EQ(to_string(GadgetKind::s3), "s3");
  EXPECT_THROW(parse_gadget_kind("s4"), std::invalid_argument);
}

}  // namespace
}  // namespace ringhcp
