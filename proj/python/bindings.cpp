#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "lexintel/config.hpp"
#include "lexintel/dli.hpp"
#include "lexintel/error.hpp"
#include "lexintel/evaluation.hpp"
#include "lexintel/pipeline.hpp"
#include "lexintel/semantics.hpp"
#include "lexintel/stemmer.hpp"
#include "lexintel/surface.hpp"
#include "lexintel/text.hpp"

namespace py = pybind11;
using namespace lexintel;

namespace {

std::u32string code_points(const std::string& s) { return decode_utf8(s); }

py::dict ap_result(const AffinityPropagationResult& r) {
  py::dict d;
  d["exemplars"] = r.exemplars;
  d["labels"] = r.labels;
  d["iterations"] = r.iterations;
  d["converged"] = r.converged;
  return d;
}

ClusterSet as_clusters(const std::vector<std::vector<double>>& centers) {
  ClusterSet set;
  set.centers = centers;
  set.sizes.assign(centers.size(), 1);
  return set;
}

std::vector<std::string> run_command(const std::string& command, const std::filesystem::path& config_path,
                                     const std::map<std::string, std::string>& overrides,
                                     const std::filesystem::path& cloze, const std::filesystem::path& matrix) {
  auto config = RunConfig::load(config_path);
  for (const auto& [key, value] : overrides) config.set(key, value, std::filesystem::current_path());
  std::ostringstream log;
  std::vector<std::filesystem::path> written;
  {
    py::gil_scoped_release release;
    if (command == "stats") written = run_stats(config, log);
    else if (command == "pairsim") written = run_pairsim(config, log);
    else if (command == "matrix") written = run_matrix(config, log);
    else if (command == "eval") written = run_eval(config, cloze, matrix, log);
    else if (command == "needs-transcription") written = run_needs_transcription(config, log);
    else if (command == "export-requests") written = run_export_requests(config, log);
    else throw ConfigError("unknown command '" + command + "'");
  }
  std::vector<std::string> out;
  for (const auto& p : written) out.push_back(p.string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lexical intelligibility toolkit";

  auto base = py::register_exception<Error>(m, "LexintelError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("dli", &dli, py::arg("s_s"), py::arg("s_l"));
  m.def(
      "alpha_beta",
      [](double s_s, double s_l) {
        const auto ab = alpha_beta(s_s, s_l);
        return py::make_tuple(ab.alpha, ab.beta);
      },
      py::arg("s_s"), py::arg("s_l"));
  m.def("check_bounds", &check_bounds, py::arg("s_s"), py::arg("s_l"), py::arg("d"), py::arg("eps") = kBoundsEpsilon);

  m.def("strip_accents", [](const std::string& s) { return strip_accents(s); });
  m.def("tokenize", [](const std::string& s) { return tokenize(s); });
  m.def("stem", [](const std::string& lang, const std::string& word) {
    return Stemmer(LanguageId(lang)).stem(strip_accents(word));
  });

  m.def("levenshtein", [](const std::string& a, const std::string& b) {
    return levenshtein(code_points(a), code_points(b));
  });
  m.def("levenshtein", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return levenshtein(a, b);
  });
  m.def("orthographic_similarity", [](const std::string& a, const std::string& b) {
    return orthographic_similarity(a, b);
  });
  m.def(
      "phonetic_similarity",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) { return surface_similarity(a, b); },
      "Similarity of two phoneme sequences.");

  m.def("cosine_similarity", [](const std::vector<double>& u, const std::vector<double>& v) {
    return cosine_similarity(std::span<const double>(u), std::span<const double>(v));
  });
  m.def(
      "affinity_propagation",
      [](const std::vector<std::vector<double>>& points, double damping, int max_iter, int convergence_iter) {
        if (points.empty()) throw Error("no points");
        const std::size_t dim = points.front().size();
        std::vector<double> flat;
        flat.reserve(points.size() * dim);
        for (const auto& p : points) {
          if (p.size() != dim) throw Error("points differ in dimension");
          flat.insert(flat.end(), p.begin(), p.end());
        }
        AffinityPropagationParams params;
        params.damping = damping;
        params.max_iter = max_iter;
        params.convergence_iter = convergence_iter;
        return ap_result(affinity_propagation(flat, dim, params));
      },
      py::arg("points"), py::arg("damping") = 0.5, py::arg("max_iter") = 200, py::arg("convergence_iter") = 15);
  m.def(
      "contextual_similarity",
      [](const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
        return contextual_similarity(as_clusters(a), as_clusters(b));
      },
      py::arg("centers_a"), py::arg("centers_b"));

  m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) { return spearman(x, y); });
  m.def(
      "permutation_p_value",
      [](const std::vector<double>& x, const std::vector<double>& y, std::size_t n_perm, std::uint64_t seed,
         unsigned workers) {
        py::gil_scoped_release release;
        return permutation_p_value(x, y, n_perm, seed, workers);
      },
      py::arg("x"), py::arg("y"), py::arg("n_perm") = kDefaultPermutations, py::arg("seed") = kDefaultSeed,
      py::arg("workers") = 1);
  m.def("t_approximation_p_value", &t_approximation_p_value, py::arg("rho"), py::arg("n"));

  m.def("run", &run_command, py::arg("command"), py::arg("config"),
        py::arg("overrides") = std::map<std::string, std::string>{}, py::arg("cloze") = std::filesystem::path(),
        py::arg("matrix") = std::filesystem::path(),
        "Runs a subcommand and returns the paths it wrote.");
}
