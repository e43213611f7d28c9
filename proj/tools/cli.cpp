#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ringhcp/builder.hpp"
#include "ringhcp/gadgets.hpp"
#include "ringhcp/groups.hpp"
#include "ringhcp/manifest.hpp"
#include "ringhcp/peals.hpp"
#include "ringhcp/solver.hpp"

namespace ringhcp::cli {

namespace {

constexpr int kUsage = 2;
// Instances at or below this size are solved without a budget by
// `reproduce --solve`.
constexpr int kDeskScaleVertices = 700;

std::string join_rows(const auto& rows) {
  std::string s;
  for (const Row& r : rows) {
    if (!s.empty()) s.push_back(' ');
    s += r.to_string();
  }
  return s;
}

std::vector<std::string> group_names() {
  std::vector<std::string> names;
  for (const auto& e : group_catalog()) names.emplace_back(e.index);
  return names;
}

std::vector<int> read_cycle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<int> cycle;
    int v;
    while (fields >> v) cycle.push_back(v);
    if (!cycle.empty()) return cycle;
  }
  throw std::runtime_error(path + ": no cycle found");
}

int cmd_sixes(std::ostream& out) {
  for (const Six& s : Extent::instance().sixes()) {
    out << s.id << ": " << join_rows(s.members) << " | ends: " << join_rows(s.six_ends) << "\n";
  }
  return 0;
}

int cmd_groups(std::ostream& out) {
  out << "index  generators        order parts round-blocks  odd-capable\n";
  for (const auto& e : group_catalog()) {
    PartGroup g = e.group();
    std::string gens, blocks;
    for (auto gen : e.generators) gens += (gens.empty() ? "" : ",") + std::string(gen);
    for (int b : e.round_blocks) blocks += (blocks.empty() ? "" : ",") + std::to_string(b);
    out << std::left << std::setw(7) << e.index << std::setw(18) << gens << std::setw(6)
        << g.order() << std::setw(6) << kSixCount / g.order() << std::setw(14) << blocks
        << (e.odd_block_capable ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_gadget(const std::string& kind, std::ostream& out) {
  InOutCertificate cert = verify_in_out(build_gadget(parse_gadget_kind(kind)));
  out << format_certificate(cert);
  return cert.ok() ? 0 : 1;
}

int cmd_build(const std::string& method, const std::string& group, bool drop_self,
              const std::string& path, std::string name, std::ostream& err) {
  Method m = parse_method(method);
  PartitionIntoParts parts = partition_into_parts(catalog_group(group));
  Instance inst = build_instance(m, parts, BuildOptions{drop_self});
  if (name.empty()) {
    name = std::string(m == Method::stedman ? "Sted" : "Erin") +
           std::to_string(parts.group().order()) + "_" + group;
  }
  export_hcp(inst, name, path);
  err << "wrote " << path << " (" << inst.vertex_count << " vertices, " << inst.edges.size()
      << " edges) and " << path << ".meta\n";
  if (trivial_nh_check(m, parts) == TrivialStatus::trivially_non_hamiltonian) {
    err << "note: parts of " << parts.part_size()
        << " sixes cannot alternate slow and quick; the instance is non-Hamiltonian\n";
  }
  return 0;
}

int cmd_solve(const std::string& path, bool enumerate, std::optional<double> budget, int threads,
              std::ostream& out, std::ostream& err) {
  HcpGraph hcp = read_hcp_file(path);
  Graph g(hcp.dimension, hcp.edges);
  SolveOptions options;
  options.mode = enumerate ? SolveMode::enumerate : SolveMode::decide;
  options.budget_seconds = budget;
  options.threads = std::max(1, threads);
  HcResult r = solve(g, options);
  for (const auto& c : r.cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << "\n";
  }
  if (!r.authoritative) out << "# partial result: search stopped at the budget\n";
  out << "STATUS " << to_string(r.status) << " COUNT " << r.count << "\n";
  err << "searched " << r.nodes << " nodes in " << r.seconds << " s\n";
  return 0;
}

int cmd_decode(const std::string& meta_path, const std::string& cycle_path,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  Instance inst = read_meta_file(meta_path);
  CallSequence cs = decode(inst, read_cycle(cycle_path));
  if (out_path.empty()) {
    write_calls(out, cs);
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error(out_path + ": cannot open for writing");
    write_calls(f, cs);
  }
  err << format_concise(cs) << "\n";
  return 0;
}

int cmd_verify(const std::string& calls_path, std::ostream& out) {
  std::ifstream in(calls_path);
  if (!in) throw std::runtime_error(calls_path + ": cannot open");
  CallSequence cs = read_calls(in);
  const CatalogEntry* entry = find_group(cs.group_index);
  if (!entry) throw CLI::ValidationError("unknown group index '" + cs.group_index + "'");
  out << "calls " << format_concise(cs) << "\n";
  RoundBlocks blocks;
  try {
    blocks = expand(cs, entry->group());
  } catch (const ExpandError& e) {
    out << "VERDICT invalid\n" << "reason " << e.what() << "\n";
    return 1;
  }
  PealVerdict v = verify_peal(blocks, cs.method);
  out << "VERDICT " << to_string(v.kind) << " BLOCKS " << v.block_count << " ROWS "
      << v.row_count << "\n";
  if (v.kind == VerdictKind::invalid) {
    out << "reason " << v.message << "\n";
    if (v.first_bad_change) out << "first-bad-change " << *v.first_bad_change << "\n";
    return 1;
  }
  bool listed = std::find(entry->round_blocks.begin(), entry->round_blocks.end(),
                          static_cast<int>(v.block_count)) != entry->round_blocks.end();
  out << "block-count-in-catalog " << (listed ? "yes" : "no") << "\n";
  return 0;
}

int cmd_reproduce(bool solve_small, bool solve_hard, std::optional<double> budget, int threads,
                  std::ostream& out, std::ostream& err) {
  int mismatches = 0;
  for (const ManifestEntry& m : manifest()) {
    PartitionIntoParts parts = partition_into_parts(catalog_group(m.group));
    Instance inst = build_instance(m.method, parts);
    bool size_ok =
        inst.vertex_count == m.vertices && static_cast<int>(inst.edges.size()) == m.edges;
    mismatches += !size_ok;
    out << std::left << std::setw(16) << m.name() << std::right << std::setw(7)
        << inst.vertex_count << std::setw(7) << inst.edges.size() << "  expected "
        << std::setw(6) << m.vertices << std::setw(7) << m.edges << "  "
        << (size_ok ? "ok" : "MISMATCH");

    bool known = m.hamiltonicity != Hamiltonicity::unknown;
    bool attempt = solve_small && known && m.vertices <= kDeskScaleVertices;
    if (solve_hard && !attempt && (m.vertices > kDeskScaleVertices || !known)) attempt = true;
    if (attempt) {
      Graph g(inst.vertex_count, inst.edges);
      SolveOptions o;
      o.mode = m.solutions ? SolveMode::enumerate : SolveMode::decide;
      o.threads = std::max(1, threads);
      if (m.vertices > kDeskScaleVertices || !known) o.budget_seconds = budget;
      HcResult r = solve(g, o);
      out << "  solved " << to_string(r.status);
      if (o.mode == SolveMode::enumerate) out << " (" << r.count << ")";
      bool status_ok = r.status != HcStatus::timeout &&
                       (!known || (r.status == HcStatus::hamiltonian) ==
                                      (m.hamiltonicity == Hamiltonicity::hamiltonian));
      bool count_ok = !m.solutions || r.status == HcStatus::timeout ||
                      r.count == static_cast<std::uint64_t>(*m.solutions);
      if (r.status == HcStatus::timeout) {
        out << " (budget reached, not counted)";
      } else if (!status_ok || !count_ok) {
        out << " expected " << to_string(m.hamiltonicity);
        if (m.solutions) out << " (" << *m.solutions << ")";
        out << " MISMATCH";
        ++mismatches;
      }
    }
    out << "\n";
  }
  out << manifest().size() - static_cast<std::size_t>(mismatches) << "/" << manifest().size()
      << " match\n";
  if (mismatches) err << mismatches << " instance(s) differ from the published tables\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bobs-only Stedman and Erin Triples as Hamiltonian cycle problems", "ringhcp"};
  app.require_subcommand(1);

  auto* sixes = app.add_subcommand("sixes", "Partition of the extent into sixes");
  bool list_sixes = false;
  sixes->add_flag("--list", list_sixes, "One line per six with its six-ends")->required();

  auto* groups = app.add_subcommand("groups", "Catalog of part groups");
  bool list_groups = false;
  groups->add_flag("--list", list_groups, "Index, generators, order and round blocks")->required();

  auto* gadget = app.add_subcommand("gadget", "Exhaustive in-out check of a gadget");
  std::string gadget_kind;
  gadget->add_option("--check", gadget_kind, "Gadget to check")
      ->required()
      ->check(CLI::IsMember({"s3", "s6"}));

  auto* build = app.add_subcommand("build", "Build an HCP instance and its metadata sidecar");
  std::string method, group, out_path, name;
  bool drop_self = false;
  build->add_option("--method", method, "erin or stedman")
      ->required()
      ->check(CLI::IsMember({"erin", "stedman"}));
  build->add_option("--group", group, "Part group index, e.g. 5.05")
      ->required()
      ->check(CLI::IsMember(group_names()));
  build->add_flag("--drop-self-edges", drop_self, "Omit wiring edges inside one gadget");
  build->add_option("--out", out_path, "Output HCP path; metadata goes to <path>.meta")->required();
  build->add_option("--name", name, "NAME field of the HCP file");

  auto* solve_cmd = app.add_subcommand("solve", "Exact Hamiltonian cycle search");
  std::string in_path;
  bool enumerate = false;
  std::optional<double> budget;
  int threads = 1;
  solve_cmd->add_option("--in", in_path, "HCP file")->required()->check(CLI::ExistingFile);
  solve_cmd->add_flag("--enumerate", enumerate, "Find every Hamiltonian cycle");
  solve_cmd->add_option("--budget", budget, "Time limit in seconds")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  auto* decode_cmd = app.add_subcommand("decode", "Read the call sequence off a cycle");
  std::string meta_path, cycle_path, calls_out;
  decode_cmd->add_option("--in", meta_path, "Instance metadata (.meta)")
      ->required()
      ->check(CLI::ExistingFile);
  decode_cmd->add_option("--cycle", cycle_path, "File whose first line is a cycle")
      ->required()
      ->check(CLI::ExistingFile);
  decode_cmd->add_option("--out", calls_out, "Write the call sequence here");

  auto* verify_cmd = app.add_subcommand("verify", "Expand a call sequence and verify the rows");
  std::string calls_path;
  verify_cmd->add_option("--calls", calls_path, "Call sequence file")
      ->required()
      ->check(CLI::ExistingFile);

  auto* reproduce = app.add_subcommand("reproduce", "Rebuild all published instances");
  bool table = false, solve_small = false, solve_hard = false;
  std::optional<double> hard_budget;
  reproduce->add_flag("--table", table, "Compare sizes with the published tables")->required();
  reproduce->add_flag("--solve", solve_small, "Also solve instances up to 700 vertices");
  reproduce->add_flag("--solve-hard", solve_hard, "Also attempt large or open instances");
  reproduce->add_option("--budget", hard_budget, "Seconds per hard instance")
      ->check(CLI::PositiveNumber);
  reproduce->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (solve_hard && !hard_budget) {
      throw CLI::ValidationError("--solve-hard", "requires --budget");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return kUsage;
  }

  try {
    if (*sixes) return cmd_sixes(out);
    if (*groups) return cmd_groups(out);
    if (*gadget) return cmd_gadget(gadget_kind, out);
    if (*build) return cmd_build(method, group, drop_self, out_path, name, err);
    if (*solve_cmd) return cmd_solve(in_path, enumerate, budget, threads, out, err);
    if (*decode_cmd) return cmd_decode(meta_path, cycle_path, calls_out, out, err);
    if (*verify_cmd) return cmd_verify(calls_path, out);
    if (*reproduce) {
      return cmd_reproduce(solve_small, solve_hard, hard_budget, threads, out, err);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

}  // namespace ringhcp::cli
