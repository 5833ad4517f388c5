#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exnet/golden.hpp"
#include "exnet/reports.hpp"

namespace py = pybind11;
using namespace exnet;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

LabeledNetwork network(int n, const EdgeList& edges) { return LabeledNetwork::from_edges(n, edges); }

std::string dump(const Json& doc) { return doc.dump(); }

Json load(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exchangeable random network models";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<InvalidParameters> invalid(m, "InvalidParameters", PyExc_ValueError);
  static py::exception<SizeCapExceeded> size_cap(m, "SizeCapExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const InvalidParameters& e) {
      py::set_error(invalid, e.what());
    } catch (const SizeCapExceeded& e) {
      py::set_error(size_cap, e.what());
    }
  });

  m.def("class_keys", [](int n) {
    std::vector<std::string> keys;
    for (const UnlabeledClass& c : ClassCatalog::get(n).classes()) keys.push_back(c.key());
    return keys;
  });
  m.def("stats", [](int n, const EdgeList& e) { return dump(stats_report(network(n, e))); });
  m.def("exch_mle", [](int n, const EdgeList& e, bool use_float) { return dump(mle_report(network(n, e), use_float)); },
        py::arg("n"), py::arg("edges"), py::arg("use_float") = false);
  m.def(
      "dissociated_mle",
      [](int n, const EdgeList& e, int restarts, std::uint64_t seed) {
        DissociatedOptions opts;
        opts.restarts = restarts;
        opts.seed = seed;
        py::gil_scoped_release release;
        return dump(to_json(dissociated_mle(network(n, e), opts)));
      },
      py::arg("n"), py::arg("edges"), py::arg("restarts") = 32, py::arg("seed") = DissociatedOptions{}.seed);
  m.def("ergm_fit", [](const std::string& family, int n, const EdgeList& e) {
    return dump(to_json(ergm_fit({parse_ergm_family(family), n}, network(n, e))));
  });
  m.def("ergm_eval", [](const std::string& family, const std::string& nu, int n, const EdgeList& e) {
    return dump(eval_report(parse_ergm_family(family), load(nu), network(n, e)));
  });
  m.def(
      "markov",
      [](const std::string& joint, const std::string& dep, bool use_float, double tol) {
        return dump(markov_report(load(joint), load(dep), use_float, tol));
      },
      py::arg("joint"), py::arg("dependence"), py::arg("use_float") = false, py::arg("tolerance") = 1e-10);
  m.def(
      "skeleton",
      [](const std::string& joint, bool use_float, double tol) { return dump(skeleton_report(load(joint), use_float, tol)); },
      py::arg("joint"), py::arg("use_float") = false, py::arg("tolerance") = 1e-10);
  m.def(
      "extend",
      [](const std::string& z, int target, bool dissociated, bool use_float, double tol, int restarts,
         std::optional<std::uint64_t> seed) {
        ExtendRequest req;
        req.m = target;
        req.dissociated = dissociated;
        req.use_float = use_float;
        req.tolerance = tol;
        req.restarts = restarts;
        req.seed = seed;
        return dump(extend_report(load(z), req));
      },
      py::arg("z"), py::arg("m"), py::arg("dissociated") = false, py::arg("use_float") = false,
      py::arg("tolerance") = 1e-9, py::arg("restarts") = 8, py::arg("seed") = py::none());
  m.def("collisions", [](int n) { return dump(to_json(degree_collision_classes(n), n)); });
  m.def(
      "graphon_z",
      [](const std::string& graphon, const std::string& key, const std::string& method, int resolution, int samples,
         std::uint64_t seed) {
        GraphonZOptions opts;
        if (method == "monte-carlo")
          opts.method = GraphonZOptions::Method::monte_carlo;
        else if (method != "quadrature")
          throw InvalidParameters("method must be quadrature or monte-carlo");
        opts.resolution = resolution;
        opts.samples = samples;
        opts.seed = seed;
        return dump(graphon_z_report(graphon, key, opts));
      },
      py::arg("graphon"), py::arg("class_key"), py::arg("method") = "quadrature", py::arg("resolution") = 64,
      py::arg("samples") = 100000, py::arg("seed") = 0);
  m.def("sample_er", [](int n, double p, std::uint64_t seed, int count) { return dump(networks_json(sample_er(n, p, seed, count))); });
  m.def("sample_beta", [](const std::vector<double>& beta, std::uint64_t seed, int count) {
    return dump(networks_json(sample_beta(beta, seed, count)));
  });
  m.def("sample_graphon", [](const std::string& graphon, int n, std::uint64_t seed, int count) {
    return dump(networks_json(sample_graphon(Graphon::parse(graphon), n, seed, count)));
  });
  m.def("paper_examples", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const GoldenItem& item : run_golden_examples()) out.emplace_back(item.name, item.passed, item.detail);
    return out;
  });
}
