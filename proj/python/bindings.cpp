#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "ringhcp/builder.hpp"
#include "ringhcp/gadgets.hpp"
#include "ringhcp/groups.hpp"
#include "ringhcp/manifest.hpp"
#include "ringhcp/peals.hpp"
#include "ringhcp/rows.hpp"
#include "ringhcp/sixes.hpp"
#include "ringhcp/solver.hpp"

namespace py = pybind11;
using namespace ringhcp;

namespace {

std::vector<std::string> texts(std::span<const Row> rows) {
  std::vector<std::string> out;
  for (const Row& r : rows) out.push_back(r.to_string());
  return out;
}

py::dict result_dict(const HcResult& r) {
  py::dict d;
  d["status"] = std::string(to_string(r.status));
  d["count"] = r.count;
  d["cycles"] = r.cycles;
  d["authoritative"] = r.authoritative;
  d["nodes"] = r.nodes;
  d["seconds"] = r.seconds;
  return d;
}

HcResult run_solver(int n, const std::vector<std::pair<int, int>>& edges, bool enumerate,
                    std::optional<double> budget, int threads) {
  SolveOptions o;
  o.mode = enumerate ? SolveMode::enumerate : SolveMode::decide;
  o.budget_seconds = budget;
  o.threads = threads;
  Graph g(n, edges);
  py::gil_scoped_release release;
  return solve(g, o);
}

std::vector<std::string> call_tokens(const CallSequence& cs) {
  std::vector<std::string> out;
  for (Call c : cs.calls) out.emplace_back(call_token(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ringhcp, m) {
  m.doc() = "Hamiltonian cycle instances for Erin and Stedman Triples";

  m.def("apply_place_notation",
        [](const std::string& row, const std::string& notation) {
          Row r = Row::parse(row);
          return apply_sequence(r, parse_place_notation(notation, r.size())).to_string();
        },
        py::arg("row"), py::arg("notation"));
  m.def("parity", [](const std::string& row) {
    return parity(Row::parse(row)) == Parity::odd ? "odd" : "even";
  });
  m.def("plain_course_length",
        [](const std::string& notation, const std::string& start) {
          Row r = Row::parse(start);
          return plain_course_length(parse_place_notation(notation, r.size()), r);
        },
        py::arg("notation"), py::arg("start") = "1234567");
  m.def("six_of", [](const std::string& row) {
    return texts(generate_six(Row::parse(row)).members);
  });

  m.def("gadget_certificate", [](const std::string& kind) {
    InOutCertificate cert = verify_in_out(build_gadget(parse_gadget_kind(kind)));
    py::dict d;
    d["ok"] = cert.ok();
    d["slot_paths"] = cert.slot_paths;
    d["no_cross_paths"] = cert.no_cross_paths;
    d["no_two_path_cover"] = cert.no_two_path_cover;
    d["violations"] = cert.violations;
    d["text"] = format_certificate(cert);
    return d;
  });

  m.def("groups", [] {
    py::list out;
    for (const CatalogEntry& e : group_catalog()) {
      py::dict d;
      d["index"] = std::string(e.index);
      d["parts"] = e.parts;
      d["generators"] = std::vector<std::string>(e.generators.begin(), e.generators.end());
      d["round_blocks"] = e.round_blocks;
      d["odd_block_capable"] = e.odd_block_capable;
      out.append(d);
    }
    return out;
  });
  m.def("group_elements", [](const std::string& index) {
    return texts(catalog_group(index).elements);
  });

  m.def("manifest", [] {
    py::list out;
    for (const ManifestEntry& e : manifest()) {
      py::dict d;
      d["name"] = e.name();
      d["method"] = std::string(to_string(e.method));
      d["group"] = std::string(e.group);
      d["vertices"] = e.vertices;
      d["edges"] = e.edges;
      d["hamiltonicity"] = std::string(to_string(e.hamiltonicity));
      d["solutions"] = e.solutions;
      out.append(d);
    }
    return out;
  });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("method", [](const Instance& i) { return to_string(i.method); })
      .def_readonly("group", &Instance::group_index)
      .def_readonly("vertex_count", &Instance::vertex_count)
      .def_readonly("edges", &Instance::edges)
      .def_property_readonly("gadget_count", &Instance::gadget_count)
      .def_property_readonly("trivially_non_hamiltonian",
                             [](const Instance& i) {
                               return i.method == Method::stedman && i.gadget_count() % 2 == 1;
                             })
      .def("to_hcp",
           [](const Instance& i, const std::string& name) {
             std::ostringstream out;
             write_hcp(out, i, name);
             return out.str();
           },
           py::arg("name") = "instance")
      .def("export", &export_hcp, py::arg("name"), py::arg("path"))
      .def("__repr__", [](const Instance& i) {
        return "<Instance " + std::string(to_string(i.method)) + " " + i.group_index + " " +
               std::to_string(i.vertex_count) + " vertices, " + std::to_string(i.edges.size()) +
               " edges>";
      });

  m.def("build",
        [](const std::string& method, const std::string& group, bool drop_self_edges) {
          return build_instance(parse_method(method), partition_into_parts(catalog_group(group)),
                                {.drop_self_edges = drop_self_edges});
        },
        py::arg("method"), py::arg("group"), py::arg("drop_self_edges") = false);
  m.def("load", [](const std::string& meta_path) { return read_meta_file(meta_path); },
        py::arg("meta_path"));

  m.def("solve",
        [](int n, const std::vector<std::pair<int, int>>& edges, bool enumerate,
           std::optional<double> budget, int threads) {
          return result_dict(run_solver(n, edges, enumerate, budget, threads));
        },
        py::arg("vertex_count"), py::arg("edges"), py::arg("enumerate") = false,
        py::arg("budget") = py::none(), py::arg("threads") = 1);
  m.def("solve_instance",
        [](const Instance& i, bool enumerate, std::optional<double> budget, int threads) {
          return result_dict(run_solver(i.vertex_count, i.edges, enumerate, budget, threads));
        },
        py::arg("instance"), py::arg("enumerate") = false, py::arg("budget") = py::none(),
        py::arg("threads") = 1);

  py::class_<CallSequence>(m, "CallSequence")
      .def_property_readonly("method", [](const CallSequence& c) { return to_string(c.method); })
      .def_readonly("group", &CallSequence::group_index)
      .def_property_readonly("start",
                             [](const CallSequence& c) { return Extent::instance().format(c.start); })
      .def_property_readonly("calls", &call_tokens)
      .def_property_readonly("concise", &format_concise)
      .def("to_text",
           [](const CallSequence& c) {
             std::ostringstream out;
             write_calls(out, c);
             return out.str();
           })
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_calls(in);
                  })
      .def("__eq__", [](const CallSequence& a, const CallSequence& b) { return a == b; })
      .def("__repr__", [](const CallSequence& c) { return "<CallSequence " + format_concise(c) + ">"; });

  m.def("decode", [](const Instance& i, const std::vector<int>& cycle) { return decode(i, cycle); },
        py::arg("instance"), py::arg("cycle"));

  m.def("verify",
        [](const CallSequence& cs) {
          py::dict d;
          try {
            RoundBlocks rb = expand(cs);
            PealVerdict v = verify_peal(rb, cs.method);
            d["verdict"] = std::string(to_string(v.kind));
            d["blocks"] = v.block_count;
            d["rows"] = v.row_count;
            d["first_bad_change"] = v.first_bad_change;
            d["message"] = v.message;
          } catch (const ExpandError& e) {
            d["verdict"] = "invalid";
            d["blocks"] = 0;
            d["rows"] = 0;
            d["first_bad_change"] = py::none();
            d["message"] = std::string(e.what());
          }
          return d;
        },
        py::arg("calls"));
}
