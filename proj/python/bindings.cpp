#include "votemap/compass.hpp"
#include "votemap/core.hpp"
#include "votemap/embedding.hpp"
#include "votemap/error.hpp"
#include "votemap/fitting.hpp"
#include "votemap/io.hpp"
#include "votemap/metric.hpp"
#include "votemap/models.hpp"
#include "votemap/samplers.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace votemap;

namespace {

py::array_t<double> to_numpy(const FrequencyMatrix& a) {
  const auto m = static_cast<py::ssize_t>(a.size());
  py::array_t<double> out({m, m});
  std::copy(a.data().begin(), a.data().end(), out.mutable_data());
  return out;
}

FrequencyMatrix from_numpy(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DimensionError("expected a square 2-d array");
  FrequencyMatrix out(static_cast<std::size_t>(a.shape(0)));
  std::copy(a.data(), a.data() + a.size(), out.data().begin());
  return out;
}

// Votes are sequences of 0-based candidates, optionally with counts.
Election make_election(std::size_t m, const std::vector<std::vector<std::size_t>>& votes,
                       const std::vector<std::uint64_t>& counts) {
  if (!counts.empty() && counts.size() != votes.size()) throw DimensionError("need one count per vote");
  Election e(m);
  for (std::size_t k = 0; k < votes.size(); ++k) e.add(Ranking(votes[k]), counts.empty() ? 1 : counts[k]);
  return e;
}

std::vector<std::vector<std::size_t>> expand(const Election& e) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& w : e.votes())
    for (std::uint64_t k = 0; k < w.multiplicity; ++k) out.emplace_back(w.ranking.order().begin(), w.ranking.order().end());
  return out;
}

std::optional<Dispersion> dispersion(std::optional<double> phi, std::optional<double> norm_phi) {
  if (phi && norm_phi) throw DomainError("give phi or norm_phi, not both");
  // Decimal strings keep the user's value exact for rational evaluation.
  if (phi) return Dispersion::phi(parse_rational(py::str(py::float_(*phi)).cast<std::string>()));
  if (norm_phi) return Dispersion::norm(parse_rational(py::str(py::float_(*norm_phi)).cast<std::string>()));
  return std::nullopt;
}

ModelSpec make_spec(const std::string& family, std::size_t m, std::optional<double> phi, std::optional<double> norm_phi,
                    double p, std::optional<double> psi, const std::string& tree, const std::string& base) {
  const auto d = dispersion(phi, norm_phi);
  auto need = [&] {
    if (!d) throw DomainError("family '" + family + "' needs phi or norm_phi");
    return *d;
  };
  auto plain = [&](const std::string& name) -> ModelSpec {
    if (name == "ic") return ModelSpec::ic(m);
    if (name == "conitzer") return ModelSpec::conitzer(m);
    if (name == "walsh") return ModelSpec::walsh(m);
    if (name == "gs-caterpillar") return ModelSpec::gs_tree(GSTree::caterpillar(m));
    if (name == "gs-balanced") return ModelSpec::gs_tree(GSTree::balanced(m));
    if (name == "gs-flat") return ModelSpec::gs_tree(GSTree::flat(m));
    if (name == "gs-tree") return ModelSpec::gs_tree(GSTree::parse(tree));
    throw DomainError("unknown family '" + name + "'");
  };
  ModelSpec spec;
  if (family == "mallows") {
    spec = ModelSpec::mallows(m, need());
  } else if (family == "mallows-mixture") {
    const Dispersion f = need();
    const Dispersion r = psi ? Dispersion{parse_rational(py::str(py::float_(*psi)).cast<std::string>()), f.normalized} : f;
    spec = ModelSpec::reversal_mixture(m, f, r, parse_rational(py::str(py::float_(p)).cast<std::string>()));
  } else if (family == "phi-conitzer") {
    spec = ModelSpec::mallows_filtered(ModelSpec::conitzer(m), need());
  } else if (family == "phi-walsh") {
    spec = ModelSpec::mallows_filtered(ModelSpec::walsh(m), need());
  } else if (family == "mallows-filtered") {
    spec = ModelSpec::mallows_filtered(plain(base), need());
  } else {
    spec = plain(family);
  }
  spec.validate();
  return spec;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Frequency matrices, positionwise distances and skeleton maps of vote distributions";

  py::register_exception<Error>(mod, "VotemapError", PyExc_ValueError);

  mod.def("frequency_matrix",
          [](std::size_t m, const std::vector<std::vector<std::size_t>>& votes, const std::vector<std::uint64_t>& counts) {
            return to_numpy(frequency_matrix(make_election(m, votes, counts)));
          },
          py::arg("m"), py::arg("votes"), py::arg("counts") = std::vector<std::uint64_t>{});

  mod.def("compass_matrix", [](const std::string& name, std::size_t m) {
    static const std::map<std::string, CompassKind> kinds = {{"ID", CompassKind::Identity},
                                                             {"UN", CompassKind::Uniformity},
                                                             {"ST", CompassKind::Stratification},
                                                             {"AN", CompassKind::Antagonism}};
    const auto it = kinds.find(name);
    if (it == kinds.end()) throw DomainError("compass name must be ID, UN, ST or AN");
    return to_numpy(compass_matrix<double>(it->second, m));
  });

  mod.def("model_matrix",
          [](const std::string& family, std::size_t m, std::optional<double> phi, std::optional<double> norm_phi,
             double p, std::optional<double> psi, const std::string& tree, const std::string& base) {
            return to_numpy(model_matrix(make_spec(family, m, phi, norm_phi, p, psi, tree, base)));
          },
          py::arg("family"), py::arg("m"), py::arg("phi") = py::none(), py::arg("norm_phi") = py::none(),
          py::arg("p") = 0.5, py::arg("psi") = py::none(), py::arg("tree") = "", py::arg("base") = "");

  mod.def("norm_phi_to_phi", &norm_phi_to_phi, py::arg("m"), py::arg("norm_phi"));
  mod.def("phi_to_norm_phi", &phi_to_norm_phi, py::arg("m"), py::arg("phi"));

  mod.def("emd", [](const std::vector<double>& x, const std::vector<double>& y) { return emd(x, y); });

  mod.def("positionwise_distance", [](const py::array_t<double>& a, const py::array_t<double>& b) {
    const auto r = positionwise_distance(from_numpy(a), from_numpy(b));
    py::dict d;
    d["raw"] = r.raw;
    d["normalized"] = r.normalized;
    d["assignment"] = r.assignment;
    return d;
  });

  mod.def("sample_election",
          [](const std::string& family, std::size_t m, std::uint64_t n, std::uint64_t seed, std::optional<double> phi,
             std::optional<double> norm_phi, double p, std::optional<double> psi, const std::string& tree,
             const std::string& base) {
            return expand(sample_election({make_spec(family, m, phi, norm_phi, p, psi, tree, base), n, seed}));
          },
          py::arg("family"), py::arg("m"), py::arg("n"), py::arg("seed") = 0, py::arg("phi") = py::none(),
          py::arg("norm_phi") = py::none(), py::arg("p") = 0.5, py::arg("psi") = py::none(), py::arg("tree") = "",
          py::arg("base") = "");

  mod.def("fit_model",
          [](std::size_t m, const std::vector<std::vector<std::size_t>>& votes, const std::string& family,
             double grid_step) {
            const auto r = fit_model(make_election(m, votes, {}), parse_fit_family(family), grid_step);
            py::dict d;
            d["family"] = fit_family_name(r.family);
            d["norm_phi"] = r.norm_phi;
            d["phi"] = r.phi;
            d["p"] = r.p ? py::cast(*r.p) : py::none();
            d["distance"] = r.distance;
            return d;
          },
          py::arg("m"), py::arg("votes"), py::arg("family") = "mallows", py::arg("grid_step") = 0.001);

  mod.def("kemeny", [](std::size_t m, const std::vector<std::vector<std::size_t>>& votes) {
    const auto k = kemeny_mle_phi(make_election(m, votes, {}));
    py::dict d;
    d["consensus"] = std::vector<std::size_t>(k.consensus.order().begin(), k.consensus.order().end());
    d["total_distance"] = k.total_distance;
    d["phi_hat"] = k.phi_hat;
    d["norm_phi_hat"] = k.norm_phi_hat;
    return d;
  });

  mod.def("skeleton_map",
          [](std::size_t m, std::uint64_t seed, std::size_t max_iter) {
            EmbeddingOptions opt;
            opt.seed = seed;
            opt.max_iter = max_iter;
            const auto layout = embed(build_catalog(m), opt);
            py::dict d;
            d["labels"] = layout.labels;
            d["coords"] = layout.coords;
            d["stress"] = layout.stress;
            d["stress_history"] = layout.stress_history;
            return d;
          },
          py::arg("m"), py::arg("seed") = 0, py::arg("max_iter") = 300);

  mod.def("read_soc", [](const std::filesystem::path& path) {
    const auto profile = read_soc_profile(path);
    py::dict d;
    d["m"] = profile.election.candidates();
    d["names"] = profile.names;
    d["votes"] = expand(profile.election);
    return d;
  });

  mod.def("write_soc", [](const std::filesystem::path& path, std::size_t m, const std::vector<std::vector<std::size_t>>& votes) {
    write_soc(make_election(m, votes, {}), path);
  });
}
