#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "epr/automorphisms.hpp"
#include "epr/complex.hpp"
#include "epr/cosmology.hpp"
#include "epr/error.hpp"
#include "epr/frucht.hpp"
#include "epr/json_io.hpp"
#include "epr/macrotime.hpp"
#include "epr/perm_group.hpp"
#include "epr/spectral.hpp"

namespace {

constexpr const char* kVersion = "epru 0.1.0";

using nlohmann::json;

// Fixed-precision text for CSV cells, independent of stream state.
std::string csv_number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

struct Output {
  std::string path;  // empty: stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::fwrite(text.data(), 1, text.size(), stdout);
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      epr::fail(epr::ErrorCode::IoError, "cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
      epr::fail(epr::ErrorCode::IoError, "failed writing " + path);
    }
  }
};

int read_threads_env() {
  const char* raw = std::getenv("EPR_UNIVERSE_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1) {
    epr::fail(epr::ErrorCode::InvalidArgument,
              "EPR_UNIVERSE_THREADS must be a positive integer");
  }
  return static_cast<int>(value);
}

// Reports share an envelope so every command echoes version, seed, config.
json envelope(const std::string& command, std::uint64_t seed,
              const json& config) {
  json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["config"] = config;
  j["config"]["threads"] = read_threads_env();
  return j;
}

json policy_json(const epr::DecayPolicy& policy) {
  json j;
  j["removals_per_step"] = policy.removals_per_step;
  j["steps"] = policy.steps;
  j["seed"] = policy.seed;
  j["rewire_to_matter"] = policy.rewire_to_matter;
  return j;
}

struct ChainArgs {
  std::string in;
  std::string ambient;
  int removals = 1;
  int steps = 1;
  std::uint64_t seed = 0;
  bool rewire = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--in", in, "initial basis complex (JSON file)")
        ->required();
    cmd->add_option("--ambient", ambient,
                    "ambient aspect (default: basis extended by isolated "
                    "objects)");
    cmd->add_option("--removals", removals, "objects removed per step")
        ->required();
    cmd->add_option("--steps", steps, "number of decay steps")->required();
    cmd->add_option("--seed", seed, "64-bit seed for the decay draw");
    cmd->add_flag("--rewire", rewire,
                  "rewire detached connections to non-basis objects");
  }

  epr::DecayChain run(epr::EprComplex& e0_out, epr::DecayPolicy& policy_out) const {
    e0_out = epr::read_complex_file(in);
    epr::EprComplex a0 = ambient.empty() ? epr::default_ambient(e0_out)
                                         : epr::read_complex_file(ambient);
    policy_out = epr::DecayPolicy{removals, steps, seed, rewire};
    return epr::generate_chain(e0_out, a0, policy_out);
  }
};

void emit_report(const Output& out, const std::string& format, const json& j,
                 const std::string& csv) {
  if (format == "csv") {
    out.emit(csv);
  } else {
    out.emit(epr::dump_canonical(j));
  }
}

int run(int argc, char** argv) {
  CLI::App app{"finite EPR-complex universe toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  // Inherited by every subcommand, so --out works after the subcommand too.
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout")
      ->configurable(false);

  // gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "build a complex and print its JSON");
  std::string gen_kind;
  int gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_in;
  gen->add_option("kind", gen_kind, "cycle|complete|path|star|gnp|file")
      ->required();
  auto* gen_n_opt = gen->add_option("n", gen_n, "object count");
  gen->add_option("--p", gen_p, "edge probability for gnp (default 0.5)");
  gen->add_option("--seed", gen_seed, "seed for gnp");
  gen->add_option("--in", gen_in, "input complex for kind=file");

  // poset ------------------------------------------------------------------
  auto* poset = app.add_subcommand("poset", "order queries");
  poset->require_subcommand(1);
  std::vector<std::string> poset_in;
  std::size_t limit_enum = 10000;
  auto* poset_leq = poset->add_subcommand("leq", "is E below F?");
  poset_leq->add_option("--in", poset_in, "two complexes: E, F")
      ->required()
      ->expected(2);
  auto* poset_join =
      poset->add_subcommand("join", "join of parts inside an ambient aspect");
  poset_join
      ->add_option("--in", poset_in, "ambient aspect, then two or more parts")
      ->required()
      ->expected(3, -1);
  auto* poset_meet =
      poset->add_subcommand("meet", "maximal common lower bounds");
  poset_meet->add_option("--in", poset_in, "two complexes: E, A")
      ->required()
      ->expected(2);
  poset_meet->add_option("--limit-enum", limit_enum,
                         "cap on enumerated lower bounds (default 10000)");

  // aut --------------------------------------------------------------------
  auto* aut = app.add_subcommand("aut", "automorphism group of a complex");
  std::string aut_in;
  aut->add_option("--in", aut_in, "complex (JSON file)")->required();

  // frucht -----------------------------------------------------------------
  auto* frucht = app.add_subcommand(
      "frucht", "complex whose automorphism group realizes the input group");
  std::string frucht_in;
  std::uint64_t limit_frucht = 720;
  frucht->add_option("--in", frucht_in, "group (JSON file)")->required();
  frucht->add_option("--limit-frucht", limit_frucht,
                     "largest allowed group order (default 720)");

  // spectral -----------------------------------------------------------------
  auto* spectral = app.add_subcommand("spectral", "Laplacian eigensystem");
  std::string spectral_in;
  std::string spectral_format = "json";
  bool spectral_vectors = false;
  spectral->add_option("--in", spectral_in, "complex (JSON file)")->required();
  spectral->add_option("--format", spectral_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  spectral->add_flag("--eigenvectors", spectral_vectors,
                     "include the eigenvector matrix");

  // chain / entropy / expand -------------------------------------------------
  auto* chain = app.add_subcommand("chain", "run a decay chain");
  ChainArgs chain_args;
  chain_args.add_to(chain);
  std::string chain_measure;
  std::string chain_format = "json";
  chain->add_option("--measure", chain_measure,
                    "append an entropy series: resolution|diffusion");
  chain->add_option("--format", chain_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* entropy = app.add_subcommand("entropy", "entropy series of a chain");
  ChainArgs entropy_args;
  entropy_args.add_to(entropy);
  std::string entropy_measure = "resolution";
  std::string entropy_format = "json";
  entropy->add_option("--measure", entropy_measure,
                      "resolution|diffusion (default resolution)");
  entropy->add_option("--format", entropy_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* expand = app.add_subcommand("expand", "expansion diagnostics");
  ChainArgs expand_args;
  expand_args.add_to(expand);
  std::string expand_format = "json";
  expand->add_option("--format", expand_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // flatness -----------------------------------------------------------------
  auto* flatness = app.add_subcommand("flatness", "transitivity of a complex");
  std::string flatness_in;
  flatness->add_option("--in", flatness_in, "complex (JSON file)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help/version text or the usage error
    return code == 0 ? 0 : 2;
  }
  Output out{out_path};

  if (gen->parsed()) {
    if (gen_kind == "file") {
      if (gen_in.empty()) {
        std::cerr << "usage: epru gen file --in <complex.json>\n";
        return 2;
      }
    } else if (gen_n_opt->count() == 0) {
      std::cerr << "usage: epru gen " << gen_kind << " <n>\n";
      return 2;
    }
    epr::EprComplex c;
    if (gen_kind == "cycle") {
      c = epr::cycle_complex(gen_n);
    } else if (gen_kind == "complete") {
      c = epr::complete_complex(gen_n);
    } else if (gen_kind == "path") {
      c = epr::path_complex(gen_n);
    } else if (gen_kind == "star") {
      c = epr::star_complex(gen_n);
    } else if (gen_kind == "gnp") {
      c = epr::gnp_complex(gen_n, gen_p, gen_seed);
    } else if (gen_kind == "file") {
      c = epr::read_complex_file(gen_in);
    } else {
      std::cerr << "unknown generator kind: " << gen_kind
                << " (expected cycle|complete|path|star|gnp|file)\n";
      return 2;
    }
    out.emit(epr::dump_canonical(epr::complex_to_json(c)));
    return 0;
  }

  if (poset_leq->parsed()) {
    epr::EprComplex e = epr::read_complex_file(poset_in[0]);
    epr::EprComplex f = epr::read_complex_file(poset_in[1]);
    json j = envelope("poset leq", 0, json{{"in", poset_in}});
    j["leq"] = epr::leq(e, f);
    out.emit(epr::dump_canonical(j));
    return 0;
  }

  if (poset_join->parsed()) {
    epr::EprComplex ambient = epr::read_complex_file(poset_in[0]);
    std::vector<epr::EprComplex> parts;
    for (std::size_t i = 1; i < poset_in.size(); ++i) {
      parts.push_back(epr::read_complex_file(poset_in[i]));
    }
    epr::EprComplex joined = epr::join_in_aspect(ambient, parts);
    out.emit(epr::dump_canonical(epr::complex_to_json(joined)));
    return 0;
  }

  if (poset_meet->parsed()) {
    epr::EprComplex e = epr::read_complex_file(poset_in[0]);
    epr::EprComplex a = epr::read_complex_file(poset_in[1]);
    epr::LowerBoundSet bounds = epr::meet(e, a, limit_enum);
    json j = envelope("poset meet", 0, json{{"in", poset_in},
                                            {"limit_enum", limit_enum}});
    j["bounds"] = json::array();
    for (const auto& b : bounds.bounds) {
      j["bounds"].push_back(epr::complex_to_json(b));
    }
    j["unique"] = bounds.unique;
    j["selected"] = bounds.selected;
    out.emit(epr::dump_canonical(j));
    return 0;
  }

  if (aut->parsed()) {
    epr::EprComplex e = epr::read_complex_file(aut_in);
    epr::PermGroup group = epr::automorphisms(e);
    json j = envelope("aut", 0, json{{"in", aut_in}});
    j["group"] = epr::group_to_json(group);
    j["order"] = epr::group_order(group).str();
    j["orbits"] = epr::orbits(group);
    out.emit(epr::dump_canonical(j));
    return 0;
  }

  if (frucht->parsed()) {
    epr::PermGroup group = epr::group_from_json(epr::read_json_file(frucht_in));
    epr::EprComplex realized = epr::frucht_realize(group, limit_frucht);
    out.emit(epr::dump_canonical(epr::complex_to_json(realized)));
    return 0;
  }

  if (spectral->parsed()) {
    epr::EprComplex e = epr::read_complex_file(spectral_in);
    epr::SpectralBasis basis = epr::spectral_basis(e);
    json j = envelope("spectral", 0, json{{"in", spectral_in}});
    j["eigenvalues"] = basis.eigenvalues;
    j["tie_break_tag"] = basis.tie_break_tag;
    if (spectral_vectors) j["eigenvectors"] = basis.eigenvectors;
    std::string csv = "k,eigenvalue\n";
    for (std::size_t k = 0; k < basis.eigenvalues.size(); ++k) {
      csv += std::to_string(k) + "," + csv_number(basis.eigenvalues[k]) + "\n";
    }
    emit_report(out, spectral_format, j, csv);
    return 0;
  }

  if (chain->parsed()) {
    epr::EprComplex e0;
    epr::DecayPolicy policy;
    epr::DecayChain c = chain_args.run(e0, policy);
    json j = envelope("chain", policy.seed,
                      json{{"in", chain_args.in},
                           {"ambient", chain_args.ambient},
                           {"measure", chain_measure}});
    j["policy"] = policy_json(policy);
    j["basis_sizes"] = json::array();
    for (const auto& basis : c.basis_complexes) {
      j["basis_sizes"].push_back(basis.object_count());
    }
    j["violations"] = epr::validate_chain(c).violations;
    std::string csv = "step,basis_size\n";
    std::vector<double> values;
    if (!chain_measure.empty()) {
      epr::EntropyReport report =
          epr::entropy_series(c, epr::parse_measure(chain_measure));
      j["entropy"] = {{"measure", report.measure_name},
                      {"values", report.values},
                      {"deltas", report.deltas},
                      {"monotone_fraction", report.monotone_fraction}};
      values = report.values;
      csv = "step,basis_size," + report.measure_name + "\n";
    }
    for (std::size_t i = 0; i < c.basis_complexes.size(); ++i) {
      csv += std::to_string(i) + "," +
             std::to_string(c.basis_complexes[i].object_count());
      if (!values.empty()) csv += "," + csv_number(values[i]);
      csv += "\n";
    }
    emit_report(out, chain_format, j, csv);
    return 0;
  }

  if (entropy->parsed()) {
    epr::EprComplex e0;
    epr::DecayPolicy policy;
    epr::DecayChain c = entropy_args.run(e0, policy);
    epr::EntropyReport report =
        epr::entropy_series(c, epr::parse_measure(entropy_measure));
    json j = envelope("entropy", policy.seed,
                      json{{"in", entropy_args.in},
                           {"ambient", entropy_args.ambient},
                           {"measure", entropy_measure}});
    j["policy"] = policy_json(policy);
    j["measure"] = report.measure_name;
    j["values"] = report.values;
    j["deltas"] = report.deltas;
    j["monotone_fraction"] = report.monotone_fraction;
    json sizes = json::array();
    for (const auto& basis : c.basis_complexes) {
      sizes.push_back(basis.object_count());
    }
    j["basis_sizes"] = sizes;
    std::string csv = "step,basis_size," + report.measure_name + "\n";
    for (std::size_t i = 0; i < report.values.size(); ++i) {
      csv += std::to_string(i) + "," +
             std::to_string(c.basis_complexes[i].object_count()) + "," +
             csv_number(report.values[i]) + "\n";
    }
    emit_report(out, entropy_format, j, csv);
    return 0;
  }

  if (expand->parsed()) {
    epr::EprComplex e0;
    epr::DecayPolicy policy;
    epr::DecayChain c = expand_args.run(e0, policy);
    epr::ExpansionReport report = epr::expansion_series(c);
    json j = envelope("expand", policy.seed,
                      json{{"in", expand_args.in},
                           {"ambient", expand_args.ambient}});
    j["policy"] = policy_json(policy);
    j["cutoff_series"] = report.cutoff_series;
    j["spread_series"] = report.spread_series;
    j["expansion_factor_series"] = report.expansion_factor_series;
    j["monotone_fraction"] = report.monotone_fraction;
    j["zero_baseline"] = report.zero_baseline;
    std::string csv = "step,K,sigma,factor\n";
    for (std::size_t i = 0; i < report.spread_series.size(); ++i) {
      csv += std::to_string(i) + "," +
             std::to_string(report.cutoff_series[i]) + "," +
             csv_number(report.spread_series[i]) + "," +
             csv_number(report.expansion_factor_series[i]) + "\n";
    }
    emit_report(out, expand_format, j, csv);
    return 0;
  }

  if (flatness->parsed()) {
    epr::EprComplex e = epr::read_complex_file(flatness_in);
    epr::SymmetryScore score = epr::symmetry_score(e);
    json j = envelope("flatness", 0, json{{"in", flatness_in}});
    j["orbit_count"] = score.orbit_count;
    j["transitivity_fraction"] = score.transitivity_fraction;
    j["flatness"] = epr::flatness_score(e);
    out.emit(epr::dump_canonical(j));
    return 0;
  }

  return 2;  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const epr::Error& e) {
    nlohmann::json err;
    err["error"] = {{"code", epr::to_string(e.code())},
                    {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = {{"code", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
}
