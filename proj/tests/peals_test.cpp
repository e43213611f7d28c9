#include "ringhcp/peals.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "oracle.hpp"

namespace ringhcp {
namespace {

struct Solved {
  Instance inst;
  std::vector<std::vector<int>> cycles;
};

const Solved& sted60() {
  static const Solved s = [] {
    Solved out{build_instance(Method::stedman, partition_into_parts(catalog_group("6.05"))), {}};
    out.cycles = solve(Graph(out.inst.vertex_count, out.inst.edges), {.mode = SolveMode::enumerate})
                     .cycles;
    return out;
  }();
  return s;
}

std::vector<std::pair<int, int>> wiring_used(const Instance& inst, const std::vector<int>& cycle) {
  std::set<std::pair<int, int>> wiring;
  for (const WiringEdge& w : inst.wiring) wiring.emplace(w.out_vertex, w.in_vertex);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (wiring.count({u, v})) out.emplace_back(u, v);
    if (wiring.count({v, u})) out.emplace_back(v, u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Decode, SixtyPartSolutionsAlternate) {
  const Solved& s = sted60();
  ASSERT_EQ(s.cycles.size(), 20u);
  std::set<std::vector<Call>> distinct;
  for (const auto& cycle : s.cycles) {
    CallSequence cs = decode(s.inst, cycle);
    EXPECT_EQ(cs.method, Method::stedman);
    EXPECT_EQ(cs.group_index, "6.05");
    ASSERT_EQ(cs.calls.size(), 14u);
    Speed speed = cs.start.speed;
    for (Call c : cs.calls) {
      ASSERT_EQ(call_for(speed, is_bob(c)), c);
      speed = speed_after(c);
    }
    EXPECT_EQ(speed, cs.start.speed);
    distinct.insert(cs.calls);

    std::vector<int> reversed(cycle.rbegin(), cycle.rend());
    EXPECT_EQ(decode(s.inst, reversed), cs);
    std::vector<int> rotated = cycle;
    std::rotate(rotated.begin(), rotated.begin() + 17, rotated.end());
    EXPECT_EQ(decode(s.inst, rotated), cs);

    EXPECT_EQ(encode_wiring(s.inst, cs), wiring_used(s.inst, cycle));
  }
}

TEST(Decode, RejectsNonCycles) {
  const Solved& s = sted60();
  std::vector<int> bad = s.cycles.front();
  std::swap(bad[3], bad[40]);
  EXPECT_THROW(decode(s.inst, bad), DecodeError);
  EXPECT_THROW(decode(s.inst, std::vector<int>{1, 2, 3}), DecodeError);
}

TEST(Expand, SixtyPartSolutionsCoverTheExtent) {
  const Solved& s = sted60();
  const std::set<std::size_t> allowed = {12, 20, 30, 60};
  for (const auto& cycle : s.cycles) {
    CallSequence cs = decode(s.inst, cycle);
    RoundBlocks rb = expand(cs);
    EXPECT_TRUE(allowed.count(rb.block_count())) << rb.block_count();
    EXPECT_EQ(rb.row_count(), 5040u);
    std::set<std::string> rows;
    for (const auto& block : rb.blocks) {
      EXPECT_EQ(block.size() % 12, 0u);
      for (const Row& r : block) rows.insert(r.to_string());
    }
    EXPECT_EQ(rows.size(), 5040u);

    PealVerdict v = verify_peal(rb, Method::stedman);
    EXPECT_EQ(v.kind, VerdictKind::round_block_cover) << v.message;
    EXPECT_EQ(v.block_count, rb.block_count());
    EXPECT_EQ(v.row_count, 5040u);
  }
}

TEST(Expand, BlocksFollowTheCallsRowByRow) {
  const Solved& s = sted60();
  CallSequence cs = decode(s.inst, s.cycles.front());
  RoundBlocks rb = expand(cs);
  // Replay the first part with the string oracle.
  std::string row = Extent::instance().row(cs.start).to_string();
  const auto& block = rb.blocks.front();
  std::size_t i = 0;
  for (Call c : cs.calls) {
    std::string notation = call_notation(c).to_string();
    std::size_t start = 0;
    while (true) {
      std::size_t dot = notation.find('.', start);
      row = oracle::apply_token(row, notation.substr(start, dot - start));
      ASSERT_EQ(block[i++].to_string(), row);
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  }
}

TEST(Expand, ErinPlainCourse) {
  CallSequence cs;
  cs.method = Method::erin;
  cs.group_index = "0.01";
  cs.start = Extent::instance().six_end_of(Row::parse("1325476"), Speed::none);
  cs.calls.assign(7, Call::plain);
  RoundBlocks rb = expand(cs);
  ASSERT_EQ(rb.block_count(), 1u);
  EXPECT_EQ(rb.blocks.front().size(), 42u);
  EXPECT_EQ(rb.blocks.front().back(), Row::parse("1325476"));
  std::set<int> sixes;
  for (const Row& r : rb.blocks.front()) sixes.insert(Extent::instance().six_of(r));
  EXPECT_EQ(sixes.size(), 7u);
  EXPECT_NE(std::find(rb.blocks.front().begin(), rb.blocks.front().end(), Row::rounds()),
            rb.blocks.front().end());
  PealVerdict v = verify_peal(rb, Method::erin);
  EXPECT_EQ(v.kind, VerdictKind::invalid);  // 42 rows are not the extent
  EXPECT_FALSE(v.first_bad_change.has_value());
}

TEST(Verify, MutatedCallIsRejected) {
  const Solved& s = sted60();
  std::set<std::vector<Call>> solutions;
  for (const auto& cycle : s.cycles) solutions.insert(decode(s.inst, cycle).calls);
  CallSequence cs = decode(s.inst, s.cycles.front());
  int rejected = 0;
  for (std::size_t pos = 0; pos < cs.calls.size(); ++pos) {
    CallSequence mutated = cs;
    Call c = mutated.calls[pos];
    mutated.calls[pos] = call_for(c == Call::slow_plain || c == Call::slow_bob ? Speed::slow
                                                                               : Speed::quick,
                                  !is_bob(c));
    if (solutions.count(mutated.calls)) continue;
    EXPECT_THROW(expand(mutated), ExpandError);
    RoundBlocks loose = expand(mutated, {.strict = false});
    PealVerdict v = verify_peal(loose, Method::stedman);
    EXPECT_EQ(v.kind, VerdictKind::invalid) << pos;
    ++rejected;
  }
  EXPECT_GT(rejected, 0);
}

TEST(Verify, PatternBreakReportsTheChange) {
  const Solved& s = sted60();
  RoundBlocks rb = expand(decode(s.inst, s.cycles.front()));
  std::swap(rb.blocks[0][3], rb.blocks[0][4]);
  PealVerdict v = verify_peal(rb, Method::stedman);
  EXPECT_EQ(v.kind, VerdictKind::invalid);
  ASSERT_TRUE(v.first_bad_change.has_value());
  EXPECT_LE(*v.first_bad_change, 4u);
  EXPECT_EQ(to_string(VerdictKind::peal), "peal");
}

TEST(Expand, WrongSpeedIsAnError) {
  CallSequence cs;
  cs.method = Method::stedman;
  cs.group_index = "6.05";
  cs.start = Extent::instance().parse_six_end("1325476S");
  cs.calls = {Call::quick_plain};
  EXPECT_THROW(expand(cs), ExpandError);
}

TEST(CallsFile, RoundTripAndConciseForm) {
  const Solved& s = sted60();
  CallSequence cs = decode(s.inst, s.cycles.front());
  std::ostringstream out;
  write_calls(out, cs);
  EXPECT_EQ(out.str().rfind("stedman 6.05 ", 0), 0u);
  std::istringstream in(out.str());
  EXPECT_EQ(read_calls(in), cs);
  std::string concise = format_concise(cs);
  EXPECT_EQ(concise.rfind("14 sixes; bobs at", 0), 0u);

  std::istringstream wrong("erin 6.05 1325476S\np\n");
  EXPECT_THROW(read_calls(wrong), std::runtime_error);
  std::istringstream foreign("stedman 6.05 1325476S\np\n");
  EXPECT_THROW(read_calls(foreign), std::runtime_error);
}

}  // namespace
}  // namespace ringhcp
