#pragma once

#include <vector>

#include "epr/complex.hpp"
#include "epr/macrotime.hpp"
#include "epr/spectral.hpp"

namespace epr {

// Mean over the mode set of |wrap(2 pi k (o1 - o2) / n)|, the analytic DFT
// phase difference on the cycle C_n. Defined for cycle carriers only.
double phase_distance(int n, const std::vector<int>& modes, int o1, int o2);

struct PhaseMetric {
  int carrier = 0;             // cycle size n
  std::vector<int> mode_set;
  std::vector<std::vector<double>> values;  // n x n, symmetric, zero diagonal
};

PhaseMetric phase_metric(int n, const std::vector<int>& modes);

// sqrt( sum_o |s(o)|^2 d(center, o)^2 ) in graph-distance units.
double spread(const StateVector& s, const EprComplex& e, ObjectId center);

struct ExpansionReport {
  std::vector<int> cutoff_series;              // block-aligned K_i
  std::vector<double> spread_series;           // sigma_i
  std::vector<double> expansion_factor_series; // sigma_i / baseline
  double monotone_fraction = 1.0;  // over block-crossing steps only
  bool zero_baseline = false;      // sigma_0 = 0, baseline shifted
};

ExpansionReport expansion_series(const DecayChain& c);

// transitivity_fraction of the automorphism action; 1.0 = flat.
double flatness_score(const EprComplex& e);

}  // namespace epr
