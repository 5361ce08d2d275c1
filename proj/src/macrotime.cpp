#include "epr/macrotime.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "epr/error.hpp"
#include "epr/rng.hpp"
#include "epr/spectral.hpp"

namespace epr {

EprComplex default_ambient(const EprComplex& e0) {
  std::vector<ObjectId> all(e0.n_phi);
  for (int o = 0; o < e0.n_phi; ++o) all[o] = o;
  return make_complex(e0.n_phi, std::move(all),
                      std::vector<Edge>(e0.edges));
}

DecayChain generate_chain(const EprComplex& e0, const EprComplex& a0,
                          const DecayPolicy& policy) {
  if (policy.removals_per_step < 1 || policy.steps < 1) {
    fail(ErrorCode::InvalidPolicy,
         "policy needs removals_per_step >= 1 and steps >= 1");
  }
  if (static_cast<long long>(policy.removals_per_step) * policy.steps >=
      e0.object_count()) {
    fail(ErrorCode::PolicyExhaustsBasis,
         "removals_per_step * steps must stay below the basis size " +
             std::to_string(e0.object_count()));
  }
  if (!is_aspect(a0)) {
    fail(ErrorCode::NotAnAspect, "ambient complex does not cover Phi");
  }
  if (!leq(e0, a0)) {
    fail(ErrorCode::BasisNotBelowAspect,
         "initial basis is not below the ambient aspect");
  }

  DecayChain chain;
  chain.seed = policy.seed;
  chain.ambient_aspects.push_back(a0);
  chain.basis_complexes.push_back(e0);

  SplitMix64 rng(policy.seed);
  for (int step = 0; step < policy.steps; ++step) {
    const EprComplex& basis = chain.basis_complexes.back();
    const EprComplex& aspect = chain.ambient_aspects.back();

    std::vector<ObjectId> pool = basis.objects;
    for (int j = 0; j < policy.removals_per_step; ++j) {
      std::size_t pick =
          j + static_cast<std::size_t>(rng.below(pool.size() - j));
      std::swap(pool[j], pool[pick]);
    }
    std::set<ObjectId> removed(pool.begin(),
                               pool.begin() + policy.removals_per_step);
    std::vector<ObjectId> survivors(pool.begin() + policy.removals_per_step,
                                    pool.end());
    std::sort(survivors.begin(), survivors.end());

    auto surviving = [&](ObjectId o) {
      return std::binary_search(survivors.begin(), survivors.end(), o);
    };
    std::vector<ObjectId> matter;
    for (ObjectId o = 0; o < aspect.n_phi; ++o) {
      if (!surviving(o)) matter.push_back(o);
    }

    std::vector<Edge> next_edges;
    std::set<Edge> present(aspect.edges.begin(), aspect.edges.end());
    for (const auto& edge : aspect.edges) {
      bool detached = (removed.count(edge.first) && surviving(edge.second)) ||
                      (removed.count(edge.second) && surviving(edge.first));
      if (!detached) {
        next_edges.push_back(edge);
        continue;
      }
      if (!policy.rewire_to_matter) continue;
      // The surviving endpoint is re-attached to a drawn matter object; a
      // draw that collides with an existing edge is dropped, keeping the
      // aspect simple.
      ObjectId keep = surviving(edge.first) ? edge.first : edge.second;
      ObjectId target = matter[rng.below(matter.size())];
      if (target == keep) continue;
      Edge rewired{std::min(keep, target), std::max(keep, target)};
      if (present.insert(rewired).second) next_edges.push_back(rewired);
    }

    chain.ambient_aspects.push_back(
        make_complex(aspect.n_phi, aspect.objects, std::move(next_edges)));
    chain.basis_complexes.push_back(induced(basis, survivors));
  }
  return chain;
}

ChainValidation validate_chain(const DecayChain& c) {
  ChainValidation report;
  auto flag = [&report](int i, const std::string& what) {
    report.violations.push_back("step " + std::to_string(i) + ": " + what);
  };

  if (c.ambient_aspects.size() != c.basis_complexes.size()) {
    report.violations.push_back("aspect and basis lists differ in length");
    return report;
  }
  for (std::size_t i = 0; i < c.basis_complexes.size(); ++i) {
    if (!is_aspect(c.ambient_aspects[i])) {
      flag(static_cast<int>(i), "ambient complex is not an aspect");
    }
    if (!leq(c.basis_complexes[i], c.ambient_aspects[i])) {
      flag(static_cast<int>(i), "basis is not below its ambient aspect");
    }
    if (i + 1 < c.basis_complexes.size()) {
      if (c.basis_complexes[i + 1].object_count() >=
          c.basis_complexes[i].object_count()) {
        flag(static_cast<int>(i + 1), "basis size did not strictly decrease");
      }
      if (!leq(c.basis_complexes[i + 1], c.basis_complexes[i])) {
        flag(static_cast<int>(i + 1),
             "basis is not an induced subcomplex of its predecessor");
      }
    }
  }
  return report;
}

namespace {

void require_step(const DecayChain& c, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= c.basis_complexes.size()) {
    fail(ErrorCode::IndexOutOfRange,
         "step " + std::to_string(i) + " outside the chain of length " +
             std::to_string(c.basis_complexes.size()));
  }
}

}  // namespace

bool exists_at(const EprComplex& f, const DecayChain& c, int i) {
  require_step(c, i);
  return leq(f, c.ambient_aspects[i]);
}

double resolution_entropy(const DecayChain& c, int i) {
  require_step(c, i);
  return std::log2(static_cast<double>(c.basis_complexes[0].object_count()) /
                   c.basis_complexes[i].object_count());
}

namespace {

double diffusion_entropy_with_basis(const DecayChain& c, int i,
                                    const SpectralBasis& basis) {
  const EprComplex& e0 = c.basis_complexes[0];
  const EprComplex& ei = c.basis_complexes[i];
  int cutoff = block_aligned_cutoff(basis, ei.object_count());
  double total = 0.0;
  for (ObjectId o : ei.objects) {
    StateVector projected = lowpass_project(delta_state(e0, o), basis, cutoff);
    std::vector<double> mass(projected.amplitudes.size());
    for (std::size_t p = 0; p < mass.size(); ++p) {
      mass[p] = projected.amplitudes[p] * projected.amplitudes[p];
    }
    total += shannon_entropy_bits(mass);
  }
  return total / ei.object_count();
}

}  // namespace

double diffusion_entropy(const DecayChain& c, int i) {
  require_step(c, i);
  if (!is_connected(c.basis_complexes[0])) {
    fail(ErrorCode::DisconnectedInitialBasis,
         "diffusion entropy needs a connected initial basis");
  }
  return diffusion_entropy_with_basis(c, i, spectral_basis(c.basis_complexes[0]));
}

EntropyMeasure parse_measure(const std::string& name) {
  if (name == "resolution") return EntropyMeasure::Resolution;
  if (name == "diffusion") return EntropyMeasure::Diffusion;
  fail(ErrorCode::UnknownMeasure, "unknown entropy measure: " + name);
}

EntropyReport entropy_series(const DecayChain& c, EntropyMeasure measure) {
  EntropyReport report;
  const int length = static_cast<int>(c.basis_complexes.size());
  if (measure == EntropyMeasure::Resolution) {
    report.measure_name = "resolution";
    for (int i = 0; i < length; ++i) {
      report.values.push_back(resolution_entropy(c, i));
    }
  } else {
    report.measure_name = "diffusion";
    if (!is_connected(c.basis_complexes[0])) {
      fail(ErrorCode::DisconnectedInitialBasis,
           "diffusion entropy needs a connected initial basis");
    }
    SpectralBasis basis = spectral_basis(c.basis_complexes[0]);
    for (int i = 0; i < length; ++i) {
      report.values.push_back(diffusion_entropy_with_basis(c, i, basis));
    }
  }
  int monotone = 0;
  for (std::size_t i = 0; i + 1 < report.values.size(); ++i) {
    double delta = report.values[i + 1] - report.values[i];
    report.deltas.push_back(delta);
    if (delta >= -1e-12) ++monotone;
  }
  report.monotone_fraction =
      report.deltas.empty()
          ? 1.0
          : static_cast<double>(monotone) / report.deltas.size();
  return report;
}

}  // namespace epr
