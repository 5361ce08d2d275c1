#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "epr/complex.hpp"

namespace epr {

struct DecayPolicy {
  int removals_per_step = 1;
  int steps = 1;
  std::uint64_t seed = 0;
  bool rewire_to_matter = false;
};

// Bases E_M(t_0..t_J) strictly decreasing by induced subcomplexes, each below
// its ambient aspect A(t_i). Both lists have steps+1 entries.
struct DecayChain {
  std::vector<EprComplex> ambient_aspects;
  std::vector<EprComplex> basis_complexes;
  std::uint64_t seed = 0;
};

// E0 extended to all of Phi by isolated objects; the least aspect above E0.
EprComplex default_ambient(const EprComplex& e0);

// At each step, removals_per_step basis objects are drawn by a single
// SplitMix64 stream seeded once from policy.seed (partial Fisher-Yates over
// the surviving objects in ascending order); every ambient edge between a
// drawn object and a surviving basis object is deleted (rewired to a
// non-basis object instead when rewire_to_matter is set), and the next basis
// is the induced subcomplex on the survivors.
DecayChain generate_chain(const EprComplex& e0, const EprComplex& a0,
                          const DecayPolicy& policy);

struct ChainValidation {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

ChainValidation validate_chain(const DecayChain& c);

// Whether f exists at macro-time t_i: f <= A(t_i).
bool exists_at(const EprComplex& f, const DecayChain& c, int i);

// log2(|obj(E_M(t_0))| / |obj(E_M(t_i))|); exactly non-decreasing in i.
double resolution_entropy(const DecayChain& c, int i);

// Mean over surviving objects of the Shannon entropy (bits) of the projected
// delta's probability mass, cutoff at |obj(E_M(t_i))| aligned up to a
// degenerate-block boundary of the t_0 basis.
double diffusion_entropy(const DecayChain& c, int i);

enum class EntropyMeasure { Resolution, Diffusion };

EntropyMeasure parse_measure(const std::string& name);  // UnknownMeasure

struct EntropyReport {
  std::string measure_name;
  std::vector<double> values;
  std::vector<double> deltas;
  double monotone_fraction = 1.0;  // share of steps with delta >= -1e-12
};

EntropyReport entropy_series(const DecayChain& c, EntropyMeasure measure);

}  // namespace epr
