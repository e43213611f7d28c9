#include "ringhcp/peals.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace ringhcp {

namespace {

std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

CallSequence decode(const Instance& inst, std::span<const int> cycle) {
  if (!verify_cycle(inst.vertex_count, inst.edges, cycle)) {
    throw DecodeError("not a Hamiltonian cycle of the instance");
  }
  const Gadget gadget = build_gadget(gadget_kind_for(inst.method));
  std::unordered_map<std::uint64_t, std::size_t> wiring_at;
  for (std::size_t i = 0; i < inst.wiring.size(); ++i) {
    wiring_at.emplace(pair_key(inst.wiring[i].out_vertex, inst.wiring[i].in_vertex), i);
  }

  const std::size_t n = cycle.size();
  std::vector<int> seq(cycle.begin(), cycle.end());
  std::vector<std::size_t> used;  // wiring indices in traversal order
  std::size_t first_pos = 0;      // position in seq of the first wiring edge
  bool oriented = false;
  std::string why;
  for (int attempt = 0; attempt < 2 && !oriented; ++attempt) {
    if (attempt == 1) std::reverse(seq.begin(), seq.end());
    used.clear();
    oriented = true;
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < n; ++i) {
      int u = seq[i], v = seq[(i + 1) % n];
      auto it = wiring_at.find(pair_key(u, v));
      if (it == wiring_at.end()) continue;
      if (inst.wiring[it->second].out_vertex != u) {
        oriented = false;
        why = "wiring edge " + std::to_string(u) + "-" + std::to_string(v) +
              " traversed incoming to outgoing";
        break;
      }
      used.push_back(it->second);
      positions.push_back(i);
    }
    if (oriented && used.empty()) {
      oriented = false;
      why = "cycle uses no wiring edges";
    }
    if (oriented) first_pos = positions.front();
  }
  if (!oriented) throw DecodeError("no orientation sweeps every gadget in to out: " + why);

  // Each stretch between wiring edges must be one whole gadget entered at
  // i_k and left at o_k.
  const std::size_t m = static_cast<std::size_t>(inst.gadget_size);
  if (used.size() != inst.gadget_count()) {
    throw DecodeError("cycle uses " + std::to_string(used.size()) + " wiring edges for " +
                      std::to_string(inst.gadget_count()) + " gadgets");
  }
  for (std::size_t s = 0; s < used.size(); ++s) {
    std::size_t begin = (first_pos + 1 + s * m) % n;
    int entry = seq[begin];
    int exit = seq[(begin + m - 1) % n];
    int j = inst.gadget_of_vertex(entry);
    for (std::size_t t = 0; t < m; ++t) {
      if (inst.gadget_of_vertex(seq[(begin + t) % n]) != j) {
        throw DecodeError("gadget " + std::to_string(j) + " is not swept in one pass");
      }
    }
    int k_in = gadget.incoming_slot(inst.meta[entry - 1].label);
    int k_out = gadget.outgoing_slot(inst.meta[exit - 1].label);
    if (!k_in || k_in != k_out) {
      throw DecodeError("gadget " + std::to_string(j) + " entered at slot " +
                        std::to_string(k_in) + " but left at slot " + std::to_string(k_out));
    }
  }

  // Start from the edge leaving gadget 1.
  std::size_t start = 0;
  for (std::size_t s = 0; s < used.size(); ++s) {
    if (inst.gadget_of_vertex(inst.wiring[used[s]].out_vertex) == 1) start = s;
  }
  std::rotate(used.begin(), used.begin() + static_cast<std::ptrdiff_t>(start), used.end());

  CallSequence cs;
  cs.method = inst.method;
  cs.group_index = inst.group_index;
  cs.start = inst.wiring[used.front()].from;
  for (std::size_t s = 0; s < used.size(); ++s) {
    const WiringEdge& w = inst.wiring[used[s]];
    const WiringEdge& next = inst.wiring[used[(s + 1) % used.size()]];
    if (w.to != next.from) throw DecodeError("wiring metadata does not chain at call " + std::to_string(s + 1));
    cs.calls.push_back(w.call);
  }
  return cs;
}

std::vector<std::pair<int, int>> encode_wiring(const Instance& inst, const CallSequence& cs) {
  std::vector<std::pair<int, int>> out;
  SixEndRef cur = cs.start;
  for (Call c : cs.calls) {
    auto it = std::find_if(inst.wiring.begin(), inst.wiring.end(), [&](const WiringEdge& w) {
      return w.from == cur && w.call == c;
    });
    if (it == inst.wiring.end()) {
      throw std::invalid_argument("no wiring edge for call " + std::string(call_token(c)));
    }
    out.emplace_back(it->out_vertex, it->in_vertex);
    cur = it->to;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t RoundBlocks::row_count() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

RoundBlocks expand(const CallSequence& cs, const PartGroup& group, ExpandOptions options) {
  const Extent& extent = Extent::instance();
  const Row start = extent.row(cs.start);
  if (cs.calls.empty()) throw ExpandError("empty call sequence", 0, 0);

  // Part starts: images of the start six-end under every group element.
  std::vector<int> start_of_rank(kExtentRows, -1);
  std::vector<Row> starts;
  for (const Row& g : group.elements) {
    Row s = relabel(start, g);
    start_of_rank[s.rank()] = static_cast<int>(starts.size());
    starts.push_back(s);
  }

  RoundBlocks out;
  std::vector<bool> seen(kExtentRows, false);
  std::vector<bool> start_reached(starts.size(), false);
  for (std::size_t si = 0; si < starts.size(); ++si) {
    if (start_reached[si]) continue;
    std::vector<Row> block;
    Row cur = starts[si];
    Speed speed = cs.start.speed;
    const std::size_t block_index = out.blocks.size();
    bool closed = false;
    while (!closed) {
      for (std::size_t pos = 0; pos < cs.calls.size(); ++pos) {
        Call c = cs.calls[pos];
        if (call_for(speed, is_bob(c)) != c) {
          throw ExpandError("call " + std::string(call_token(c)) + " at position " +
                                std::to_string(pos + 1) + " does not match the six speed",
                            block_index, pos);
        }
        for (const Change& ch : call_notation(c).changes()) {
          cur = apply_change(cur, ch);
          if (options.strict && seen[cur.rank()]) {
            throw ExpandError("row " + cur.to_string() + " repeated in block " +
                                  std::to_string(block_index + 1) + " at call " +
                                  std::to_string(pos + 1),
                              block_index, pos);
          }
          seen[cur.rank()] = true;
          block.push_back(cur);
        }
        speed = speed_after(c);
      }
      int hit = start_of_rank[cur.rank()];
      if (hit < 0) {
        if (options.strict) {
          throw ExpandError("part ended at " + cur.to_string() + ", which starts no part",
                            block_index, cs.calls.size() - 1);
        }
      } else {
        start_reached[hit] = true;
      }
      closed = (cur == starts[si]) || block.size() > static_cast<std::size_t>(kExtentRows);
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

RoundBlocks expand(const CallSequence& cs, ExpandOptions options) {
  return expand(cs, catalog_group(cs.group_index), options);
}

PealVerdict verify_peal(const RoundBlocks& rb, Method method) {
  PealVerdict v;
  v.block_count = rb.block_count();
  v.row_count = rb.row_count();
  const std::size_t period = method == Method::erin ? 6 : 12;
  // Fixed place of each change in the method's lead; 0 marks the call
  // change (7 for a plain, 5 for a bob).
  static constexpr int erin_lead[6] = {3, 1, 3, 1, 3, 0};
  static constexpr int stedman_lead[12] = {3, 1, 3, 1, 3, 0, 1, 3, 1, 3, 1, 0};
  const int* lead = method == Method::erin ? erin_lead : stedman_lead;

  std::vector<bool> seen(kExtentRows, false);
  std::size_t change_base = 0;
  for (std::size_t b = 0; b < rb.blocks.size(); ++b) {
    const auto& rows = rb.blocks[b];
    if (rows.empty() || rows.size() % period != 0) {
      v.message = "block " + std::to_string(b + 1) + " has " + std::to_string(rows.size()) +
                  " rows, not a whole number of leads";
      return v;
    }
    for (const Row& r : rows) {
      if (r.size() != kTriples || !r.is_permutation()) {
        v.message = "block " + std::to_string(b + 1) + " holds a malformed row";
        return v;
      }
      if (seen[r.rank()]) {
        v.message = "row " + r.to_string() + " repeated";
        return v;
      }
      seen[r.rank()] = true;
    }
    std::vector<int> fixed(rows.size(), -1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto c = change_between(rows[i], rows[(i + 1) % rows.size()]);
      if (c && c->fixed_places().size() == 1) fixed[i] = c->fixed_places().front();
    }
    // Best phase of the lead against this block.
    std::size_t best_match = 0;
    for (std::size_t offset = 0; offset < period; ++offset) {
      std::size_t i = 0;
      for (; i < rows.size(); ++i) {
        int want = lead[(i + offset) % period];
        int got = fixed[i];
        bool ok = want == 0 ? (got == 7 || got == 5) : got == want;
        if (!ok) break;
      }
      best_match = std::max(best_match, i);
      if (i == rows.size()) break;
    }
    if (best_match != rows.size()) {
      v.first_bad_change = change_base + best_match;
      v.message = "change " + std::to_string(best_match + 1) + " of block " +
                  std::to_string(b + 1) + " breaks the method";
      return v;
    }
    change_base += rows.size();
  }
  if (v.row_count != static_cast<std::size_t>(kExtentRows)) {
    v.message = "covers " + std::to_string(v.row_count) + " of 5040 rows";
    return v;
  }
  if (v.block_count == 1) {
    v.kind = VerdictKind::peal;
    v.message = "peal of 5040 changes";
  } else {
    v.kind = VerdictKind::round_block_cover;
    v.message = std::to_string(v.block_count) + " round blocks";
  }
  return v;
}

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::peal: return "peal";
    case VerdictKind::round_block_cover: return "round-block-cover";
    case VerdictKind::invalid: return "invalid";
  }
  return "?";
}

void write_calls(std::ostream& out, const CallSequence& cs) {
  out << to_string(cs.method) << " " << cs.group_index << " "
      << Extent::instance().format(cs.start) << "\n";
  for (Call c : cs.calls) out << call_token(c) << "\n";
}

CallSequence read_calls(std::istream& in) {
  CallSequence cs;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty call sequence file");
  std::istringstream header(line);
  std::string method, start;
  if (!(header >> method >> cs.group_index >> start)) {
    throw std::runtime_error("bad call sequence header '" + line + "'");
  }
  cs.method = parse_method(method);
  cs.start = Extent::instance().parse_six_end(start);
  if ((cs.method == Method::erin) != (cs.start.speed == Speed::none)) {
    throw std::runtime_error("start six-end speed does not suit " + method);
  }
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    Call c = parse_call(token);
    bool erin_call = c == Call::plain || c == Call::bob;
    if (erin_call != (cs.method == Method::erin)) {
      throw std::runtime_error("call '" + token + "' does not belong to " + method);
    }
    cs.calls.push_back(c);
  }
  return cs;
}

std::string format_concise(const CallSequence& cs) {
  std::string s = std::to_string(cs.calls.size()) + " sixes; bobs at";
  bool any = false;
  for (std::size_t i = 0; i < cs.calls.size(); ++i) {
    if (is_bob(cs.calls[i])) {
      s += " " + std::to_string(i + 1);
      any = true;
    }
  }
  if (!any) s += " none";
  return s;
}

}  // namespace ringhcp
