#include "ringhcp/builder.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "ringhcp/manifest.hpp"

namespace ringhcp {
namespace {

Instance build(Method m, std::string_view group, BuildOptions options = {}) {
  return build_instance(m, partition_into_parts(catalog_group(group)), options);
}

TEST(Build, PublishedSizes) {
  Instance erin1 = build(Method::erin, "0.01");
  EXPECT_EQ(erin1.vertex_count, 13440);
  EXPECT_EQ(erin1.edges.size(), 21840u);
  Instance erin20 = build(Method::erin, "7.12");
  EXPECT_EQ(erin20.vertex_count, 672);
  EXPECT_EQ(erin20.edges.size(), 1092u);
  Instance sted1 = build(Method::stedman, "0.01");
  EXPECT_EQ(sted1.vertex_count, 27720);
  EXPECT_EQ(sted1.edges.size(), 45360u);
  Instance sted5 = build(Method::stedman, "5.05");
  EXPECT_EQ(sted5.vertex_count, 5544);
  EXPECT_EQ(sted5.edges.size(), 9072u);
  Instance sted168 = build(Method::stedman, "7.03");
  EXPECT_EQ(sted168.vertex_count, 165);
  EXPECT_EQ(sted168.edges.size(), 270u);
}

TEST(Build, EveryTableRowAndEdgeFormula) {
  ASSERT_EQ(manifest().size(), 38u);
  for (const ManifestEntry& row : manifest()) {
    Instance inst = build(row.method, row.group);
    int sixes_per_part = 840 / row.parts;
    int per_gadget = row.method == Method::erin ? 26 : 54;
    int size = row.method == Method::erin ? 16 : 33;
    EXPECT_EQ(inst.vertex_count, row.vertices) << row.name();
    EXPECT_EQ(static_cast<int>(inst.edges.size()), row.edges) << row.name();
    EXPECT_EQ(row.vertices, size * sixes_per_part) << row.name();
    EXPECT_EQ(row.edges, per_gadget * sixes_per_part) << row.name();
  }
}

TEST(Build, DegreeAccountingAndNumbering) {
  for (Method m : {Method::erin, Method::stedman}) {
    for (std::string_view group : {"5.05", "6.05", "7.03"}) {
      Instance inst = build(m, group);
      Gadget g = build_gadget(gadget_kind_for(m));
      std::map<int, int> wiring_degree;
      for (const WiringEdge& w : inst.wiring) {
        ++wiring_degree[w.out_vertex];
        ++wiring_degree[w.in_vertex];
        int out_label = inst.meta[w.out_vertex - 1].label;
        int in_label = inst.meta[w.in_vertex - 1].label;
        ASSERT_NE(g.outgoing_slot(out_label), 0);
        ASSERT_NE(g.incoming_slot(in_label), 0);
      }
      for (int v = 1; v <= inst.vertex_count; ++v) {
        int label = inst.meta[v - 1].label;
        ASSERT_EQ(label, (v - 1) % g.vertex_count + 1);
        ASSERT_EQ(inst.meta[v - 1].six_id, inst.gadget_six[inst.gadget_of_vertex(v) - 1]);
        bool boundary = g.incoming_slot(label) != 0 || g.outgoing_slot(label) != 0;
        ASSERT_EQ(wiring_degree[v], boundary ? 2 : 0) << v;
      }
      for (std::size_t j = 1; j < inst.gadget_six.size(); ++j) {
        ASSERT_LT(inst.gadget_six[j - 1], inst.gadget_six[j]);
      }
    }
  }
}

TEST(Build, StedmanSpeedsAlternate) {
  Instance inst = build(Method::stedman, "5.05");
  Gadget g = build_gadget(GadgetKind::s6);
  for (const WiringEdge& w : inst.wiring) {
    int out_slot = g.outgoing_slot(inst.meta[w.out_vertex - 1].label);
    int in_slot = g.incoming_slot(inst.meta[w.in_vertex - 1].label);
    ASSERT_EQ(out_slot <= 3, in_slot > 3);
    ASSERT_EQ(w.from.speed, out_slot <= 3 ? Speed::slow : Speed::quick);
    ASSERT_EQ(w.to.speed, speed_after(w.call));
  }
}

TEST(Build, WiringFollowsTheTransitions) {
  PartitionIntoParts parts = partition_into_parts(catalog_group("5.05"));
  Instance inst = build_instance(Method::erin, parts);
  TransitionMaps erin = erin_transitions();
  for (const WiringEdge& w : inst.wiring) {
    SixEndRef expected = parts.rep_of_six_end(erin.apply(w.call, w.from));
    ASSERT_EQ(w.to, expected);
    ASSERT_EQ(inst.meta[w.in_vertex - 1].six_id, expected.six_id);
  }
}

TEST(Build, DropSelfEdges) {
  Instance full = build(Method::stedman, "6.05");
  Instance dropped = build(Method::stedman, "6.05", {.drop_self_edges = true});
  std::size_t self = 0;
  for (const WiringEdge& w : full.wiring) {
    self += full.gadget_of_vertex(w.out_vertex) == full.gadget_of_vertex(w.in_vertex);
  }
  EXPECT_EQ(full.edges.size() - dropped.edges.size(), self);
  for (const WiringEdge& w : dropped.wiring) {
    EXPECT_NE(dropped.gadget_of_vertex(w.out_vertex), dropped.gadget_of_vertex(w.in_vertex));
  }
}

TEST(TrivialCheck, StedmanParity) {
  auto status = [](Method m, std::string_view group) {
    return trivial_nh_check(m, partition_into_parts(catalog_group(group)));
  };
  EXPECT_EQ(status(Method::stedman, "6.23"), TrivialStatus::trivially_non_hamiltonian);
  EXPECT_EQ(status(Method::stedman, "7.03"), TrivialStatus::trivially_non_hamiltonian);
  EXPECT_EQ(status(Method::stedman, "5.05"), TrivialStatus::possibly_hamiltonian);
  EXPECT_EQ(status(Method::erin, "7.03"), TrivialStatus::possibly_hamiltonian);
  for (const CatalogEntry& entry : group_catalog()) {
    bool odd = (840 / entry.parts) % 2 == 1;
    EXPECT_EQ(status(Method::stedman, entry.index) == TrivialStatus::trivially_non_hamiltonian,
              odd);
  }
}

TEST(Export, HcpLayoutAndRoundTrip) {
  Instance inst = build(Method::erin, "0.01");
  std::ostringstream out;
  write_hcp(out, inst, "erin1");
  std::string text = out.str();
  EXPECT_EQ(text.rfind("NAME: erin1\nTYPE: HCP\nDIMENSION: 13440\nEDGE_DATA_FORMAT: EDGE_LIST\n", 0),
            0u);
  EXPECT_TRUE(text.ends_with("-1\nEOF\n"));
  std::istringstream in(text);
  HcpGraph g = read_hcp(in);
  EXPECT_EQ(g.name, "erin1");
  EXPECT_EQ(g.dimension, 13440);
  EXPECT_EQ(g.edges.size(), 21840u);
  EXPECT_EQ(g.edges, inst.edges);
}

TEST(Export, MetaRoundTrip) {
  Instance inst = build(Method::stedman, "6.05");
  std::ostringstream out;
  write_meta(out, inst);
  std::istringstream in(out.str());
  Instance back = read_meta(in);
  EXPECT_EQ(back.method, inst.method);
  EXPECT_EQ(back.group_index, inst.group_index);
  EXPECT_EQ(back.vertex_count, inst.vertex_count);
  EXPECT_EQ(back.gadget_six, inst.gadget_six);
  EXPECT_EQ(back.edges, inst.edges);
  ASSERT_EQ(back.wiring.size(), inst.wiring.size());
  std::ostringstream again;
  write_meta(again, back);
  EXPECT_EQ(again.str(), out.str());
}

TEST(Export, FilesAreDeterministic) {
  namespace fs = std::filesystem;
  fs::path dir = fs::path(RINGHCP_TEST_TMPDIR) / "builder_determinism";
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  export_hcp(build(Method::stedman, "5.05"), "sted5", dir / "a.hcp");
  export_hcp(build(Method::stedman, "5.05"), "sted5", dir / "b.hcp");
  EXPECT_EQ(slurp(dir / "a.hcp"), slurp(dir / "b.hcp"));
  EXPECT_EQ(slurp(dir / "a.hcp.meta"), slurp(dir / "b.hcp.meta"));
  EXPECT_FALSE(slurp(dir / "a.hcp").empty());
  EXPECT_THROW(export_hcp(build(Method::erin, "7.03"), "x", dir / "missing" / "x.hcp"),
               std::runtime_error);
}

TEST(Export, RejectsMalformedInput) {
  std::istringstream bad("NAME: x\nTYPE: TSP\nDIMENSION: 3\n");
  EXPECT_THROW(read_hcp(bad), std::runtime_error);
  std::istringstream bad_meta("method grandsire\n");
  EXPECT_THROW(read_meta(bad_meta), std::exception);
}

}  // namespace
}  // namespace ringhcp
