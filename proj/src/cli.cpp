#include "votemap/cli.hpp"

#include "votemap/compass.hpp"
#include "votemap/core.hpp"
#include "votemap/embedding.hpp"
#include "votemap/error.hpp"
#include "votemap/fitting.hpp"
#include "votemap/io.hpp"
#include "votemap/metric.hpp"
#include "votemap/models.hpp"
#include "votemap/samplers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

namespace votemap {

namespace {

using json = nlohmann::ordered_json;

// Flag combinations CLI11 cannot express; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string precision = "float";
};

struct ModelFlags {
  std::string model;
  std::size_t m = 0;
  std::string normphi;
  std::string phi;
  std::string p;
  std::string psi;
  std::string tree;
  std::string base;
  std::string central;
};

void add_model_flags(CLI::App* sub, ModelFlags& f) {
  sub->add_option("--model", f.model,
                  "ic, mallows, mallows-mixture, conitzer, walsh, phi-conitzer, phi-walsh, gs-tree, gs-caterpillar, "
                  "gs-balanced, gs-flat, mallows-filtered (matrix also takes id, un, st, an)")
      ->required();
  sub->add_option("--m", f.m, "number of candidates")->required()->check(CLI::PositiveNumber);
  auto* norm = sub->add_option("--normphi", f.normphi, "normalized dispersion in [0,1]");
  auto* phi = sub->add_option("--phi", f.phi, "dispersion in [0,1]");
  norm->excludes(phi);
  sub->add_option("--p", f.p, "mixture: probability of the central-vote component (default 1/2)");
  sub->add_option("--psi", f.psi, "mixture: dispersion of the reversed component, same scale as phi");
  sub->add_option("--tree", f.tree, "gs-tree: file with the tree in parenthesized notation")->check(CLI::ExistingFile);
  sub->add_option("--base", f.base, "mallows-filtered: base family (ic, conitzer, walsh, gs-*)");
  sub->add_option("--central", f.central, "central vote / axis as 1-based candidates, e.g. 3,1,2");
}

Rational flag_rational(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::optional<Dispersion> flag_dispersion(const ModelFlags& f) {
  if (!f.normphi.empty()) return Dispersion::norm(flag_rational("--normphi", f.normphi));
  if (!f.phi.empty()) return Dispersion::phi(flag_rational("--phi", f.phi));
  return std::nullopt;
}

Ranking parse_central(const std::string& text, std::size_t m) {
  std::vector<Candidate> order;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    try {
      const long c = std::stol(item);
      if (c < 1 || static_cast<std::size_t>(c) > m) throw UsageError("");
      order.push_back(static_cast<Candidate>(c - 1));
    } catch (const std::exception&) {
      throw UsageError("--central: '" + item + "' is not a candidate in 1.." + std::to_string(m));
    }
  }
  try {
    Ranking v(std::move(order));
    if (v.size() != m) throw UsageError("--central must list all " + std::to_string(m) + " candidates");
    return v;
  } catch (const Error& e) {
    throw UsageError(std::string("--central: ") + e.what());
  }
}

std::optional<CompassKind> compass_kind(const std::string& name) {
  if (name == "id") return CompassKind::Identity;
  if (name == "un") return CompassKind::Uniformity;
  if (name == "st") return CompassKind::Stratification;
  if (name == "an") return CompassKind::Antagonism;
  return std::nullopt;
}

// Families without parameters; also the valid --base values.
std::optional<ModelSpec> plain_spec(const std::string& name, std::size_t m, const ModelFlags& f) {
  if (name == "ic") return ModelSpec::ic(m);
  if (name == "conitzer") return ModelSpec::conitzer(m);
  if (name == "walsh") return ModelSpec::walsh(m);
  if (name == "gs-caterpillar") return ModelSpec::gs_tree(GSTree::caterpillar(m));
  if (name == "gs-balanced") return ModelSpec::gs_tree(GSTree::balanced(m));
  if (name == "gs-flat") return ModelSpec::gs_tree(GSTree::flat(m));
  if (name == "gs-tree") {
    if (f.tree.empty()) throw UsageError("--tree is required for gs-tree");
    GSTree t = read_tree(f.tree);
    if (t.candidates() != m)
      throw DomainError("--tree has " + std::to_string(t.candidates()) + " leaves but --m is " + std::to_string(m));
    return ModelSpec::gs_tree(std::move(t));
  }
  return std::nullopt;
}

ModelSpec build_spec(const ModelFlags& f) {
  const std::size_t m = f.m;
  const auto d = flag_dispersion(f);
  const auto need_d = [&] {
    if (!d) throw UsageError("--phi or --normphi is required for --model " + f.model);
    return *d;
  };
  std::optional<ModelSpec> spec;
  if (f.model == "mallows") {
    spec = ModelSpec::mallows(m, need_d());
  } else if (f.model == "mallows-mixture" || f.model == "mallows-mix") {
    const Dispersion phi = need_d();
    const Dispersion psi = f.psi.empty() ? phi : Dispersion{flag_rational("--psi", f.psi), phi.normalized};
    const Rational p = f.p.empty() ? Rational(1, 2) : flag_rational("--p", f.p);
    spec = ModelSpec::reversal_mixture(m, phi, psi, p);
  } else if (f.model == "phi-conitzer") {
    spec = ModelSpec::mallows_filtered(ModelSpec::conitzer(m), need_d());
  } else if (f.model == "phi-walsh") {
    spec = ModelSpec::mallows_filtered(ModelSpec::walsh(m), need_d());
  } else if (f.model == "mallows-filtered") {
    if (f.base.empty()) throw UsageError("--base is required for mallows-filtered");
    auto base = plain_spec(f.base, m, f);
    if (!base) throw UsageError("--base: unsupported base family '" + f.base + "'");
    spec = ModelSpec::mallows_filtered(std::move(*base), need_d());
  } else {
    spec = plain_spec(f.model, m, f);
    if (!spec) {
      if (compass_kind(f.model)) throw DomainError("--model " + f.model + " is a compass matrix, not a vote distribution");
      throw UsageError("--model: unknown family '" + f.model + "'");
    }
    if (d) throw UsageError("--model " + f.model + " takes no dispersion");
  }
  if (f.model != "mallows-mixture" && f.model != "mallows-mix" && (!f.p.empty() || !f.psi.empty()))
    throw UsageError("--p and --psi apply to mallows-mixture only");
  if (!f.central.empty()) {
    Ranking v = parse_central(f.central, m);
    // The filtered families keep their axis on the base distribution.
    if (spec->family == ModelFamily::MallowsFiltered) {
      auto base = std::make_shared<ModelSpec>(*spec->base);
      base->central = std::move(v);
      spec->base = std::move(base);
    } else {
      spec->central = std::move(v);
    }
  }
  spec->validate();
  return *spec;
}

bool is_soc(const std::string& path) {
  const auto ext = std::filesystem::path(path).extension().string();
  return ext == ".soc";
}

FrequencyMatrix load_matrix(const std::string& path) {
  return is_soc(path) ? frequency_matrix(read_soc(path)) : read_matrix_csv(path);
}

json ranking_json(const Ranking& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v[i] + 1);
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positionwise maps of vote distributions", "votemap"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--precision", g.precision, "model-matrix arithmetic")
      ->check(CLI::IsMember({"rational", "float"}))
      ->capture_default_str();

  ModelFlags matrix_flags;
  std::string matrix_out;
  auto* matrix = app.add_subcommand("matrix", "write a model's frequency matrix as CSV");
  add_model_flags(matrix, matrix_flags);
  matrix->add_option("--out", matrix_out, "output CSV")->required();

  std::string dist_a, dist_b;
  bool dist_raw = false;
  auto* distance = app.add_subcommand("distance", "positionwise distance between two elections or matrices");
  distance->add_option("--a", dist_a, ".soc election or matrix CSV")->required()->check(CLI::ExistingFile);
  distance->add_option("--b", dist_b, ".soc election or matrix CSV")->required()->check(CLI::ExistingFile);
  distance->add_flag("--raw", dist_raw, "report the unnormalized distance as 'distance'");

  ModelFlags sample_flags;
  std::uint64_t sample_n = 0;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "sample an election from a model");
  add_model_flags(sample, sample_flags);
  sample->add_option("--n", sample_n, "number of voters")->required()->check(CLI::PositiveNumber);
  sample->add_option("--out", sample_out, "output .soc")->required();

  std::string fit_election;
  std::vector<std::string> fit_families{"mallows", "phi-conitzer", "phi-walsh"};
  double fit_step = 0.001;
  auto* fit = app.add_subcommand("fit", "fit model families to an election");
  fit->add_option("--election", fit_election, ".soc election")->required()->check(CLI::ExistingFile);
  fit->add_option("--families", fit_families, "comma-separated families")
      ->delimiter(',')
      ->check(CLI::IsMember({"mallows", "phi-conitzer", "phi-walsh", "mallows-mixture"}))
      ->capture_default_str();
  fit->add_option("--grid-step", fit_step, "norm-phi grid step")->check(CLI::Range(1e-6, 1.0))->capture_default_str();

  std::size_t map_m = 0;
  std::string map_out, map_svg, map_ratios;
  std::size_t map_iter = 300;
  auto* map = app.add_subcommand("map", "build and embed the skeleton map");
  map->add_option("--m", map_m, "number of candidates (even)")->required()->check(CLI::PositiveNumber);
  map->add_option("--out", map_out, "layout CSV")->required();
  map->add_option("--svg", map_svg, "scatter plot SVG");
  map->add_option("--ratios", map_ratios, "misrepresentation ratios CSV");
  map->add_option("--max-iter", map_iter, "SMACOF iteration cap")->capture_default_str();

  ModelFlags var_flags;
  std::uint64_t var_n = 0;
  std::size_t var_trials = 0;
  auto* variance = app.add_subcommand("variance", "distance of sampled elections to the model matrix");
  add_model_flags(variance, var_flags);
  variance->add_option("--n", var_n, "voters per election")->required()->check(CLI::PositiveNumber);
  variance->add_option("--trials", var_trials, "number of elections")->required()->check(CLI::PositiveNumber);

  std::string kem_election;
  auto* kemeny = app.add_subcommand("kemeny", "Kemeny consensus and Mallows MLE dispersion");
  kemeny->add_option("--election", kem_election, ".soc election")->required()->check(CLI::ExistingFile);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*matrix) {
      const std::size_t m = matrix_flags.m;
      const bool exact = g.precision == "rational";
      if (auto kind = compass_kind(matrix_flags.model)) {
        if (exact)
          write_matrix_csv(compass_matrix<Rational>(*kind, m), matrix_out);
        else
          write_matrix_csv(compass_matrix<double>(*kind, m), matrix_out);
      } else {
        const ModelSpec spec = build_spec(matrix_flags);
        if (exact)
          write_matrix_csv(model_matrix_exact(spec), matrix_out);
        else
          write_matrix_csv(model_matrix(spec), matrix_out);
      }
      emit(out, json{{"command", "matrix"}, {"model", matrix_flags.model}, {"m", m}, {"precision", g.precision},
                     {"out", matrix_out}});
    } else if (*distance) {
      const auto report = positionwise_distance(load_matrix(dist_a), load_matrix(dist_b));
      json assignment = json::array();
      for (auto c : report.assignment) assignment.push_back(c + 1);
      emit(out, json{{"command", "distance"},
                     {"a", dist_a},
                     {"b", dist_b},
                     {"m", report.m},
                     {"distance", dist_raw ? report.raw : report.normalized},
                     {"normalized", report.normalized},
                     {"raw", report.raw},
                     {"assignment", assignment}});
    } else if (*sample) {
      const Election e = sample_election({build_spec(sample_flags), sample_n, g.seed});
      write_soc(e, sample_out);
      emit(out, json{{"command", "sample"}, {"model", sample_flags.model}, {"m", e.candidates()},
                     {"n", e.voters()}, {"unique", e.compacted().votes().size()}, {"seed", g.seed},
                     {"out", sample_out}});
    } else if (*fit) {
      const Election e = read_soc(fit_election);
      const FrequencyMatrix target = frequency_matrix(e);
      std::vector<FitResult> results;
      for (const auto& name : fit_families) results.push_back(fit_model(target, parse_fit_family(name), fit_step, g.threads));
      std::stable_sort(results.begin(), results.end(),
                       [](const FitResult& a, const FitResult& b) { return a.distance < b.distance; });
      for (const auto& r : results) {
        json j{{"command", "fit"},          {"election", fit_election}, {"family", fit_family_name(r.family)},
               {"norm_phi", r.norm_phi},     {"phi", r.phi}};
        if (r.p) j["p"] = *r.p;
        j["distance"] = r.distance;
        j["grid_step"] = r.grid_step;
        emit(out, j);
      }
    } else if (*map) {
      const MapCatalog catalog = build_catalog(map_m);
      EmbeddingOptions opt;
      opt.seed = g.seed;
      opt.max_iter = map_iter;
      const EmbeddingLayout layout = embed(catalog, opt, g.threads);
      write_layout_csv(layout, map_out);
      std::vector<std::string> groups;
      for (const auto& p : catalog.points) groups.push_back(p.group);
      if (!map_svg.empty()) write_layout_svg(layout, map_svg, groups);
      const auto ratios = misrepresentation_ratios(layout);
      if (!map_ratios.empty()) write_ratios_csv(ratios, map_ratios);
      std::size_t inside = 0;
      for (const auto& r : ratios) inside += r.ratio >= 0.8 && r.ratio <= 1.15;
      emit(out, json{{"command", "map"},
                     {"m", map_m},
                     {"points", layout.labels.size()},
                     {"stress", layout.stress},
                     {"iterations", layout.stress_history.size() - 1},
                     {"ratios_in_band", ratios.empty() ? 0.0 : static_cast<double>(inside) / ratios.size()},
                     {"out", map_out}});
    } else if (*variance) {
      const auto s = empirical_matrix_distance(build_spec(var_flags), var_n, var_trials, g.seed, g.threads);
      emit(out, json{{"command", "variance"}, {"model", var_flags.model}, {"m", var_flags.m}, {"n", var_n},
                     {"trials", s.trials}, {"mean", s.mean}, {"q10", s.q10}, {"q90", s.q90}});
    } else if (*kemeny) {
      const auto k = kemeny_mle_phi(read_soc(kem_election));
      emit(out, json{{"command", "kemeny"},
                     {"election", kem_election},
                     {"consensus", ranking_json(k.consensus)},
                     {"total_distance", k.total_distance},
                     {"phi_hat", k.phi_hat},
                     {"norm_phi_hat", k.norm_phi_hat}});
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace votemap
