#include "epr/cosmology.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "epr/automorphisms.hpp"
#include "epr/error.hpp"

namespace epr {

double phase_distance(int n, const std::vector<int>& modes, int o1, int o2) {
  if (n < 3) {
    fail(ErrorCode::NotACycleCarrier,
         "phase distance is defined on cycles C_n with n >= 3, got n = " +
             std::to_string(n));
  }
  if (o1 < 0 || o1 >= n || o2 < 0 || o2 >= n) {
    fail(ErrorCode::IndexOutOfRange, "positions must lie in [0, n)");
  }
  if (modes.empty()) {
    fail(ErrorCode::InvalidMode, "mode set must be non-empty");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  double total = 0.0;
  for (int k : modes) {
    double phase = two_pi * k * (o1 - o2) / n;
    total += std::abs(std::remainder(phase, two_pi));
  }
  return total / static_cast<double>(modes.size());
}

PhaseMetric phase_metric(int n, const std::vector<int>& modes) {
  PhaseMetric metric;
  metric.carrier = n;
  metric.mode_set = modes;
  metric.values.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double d = phase_distance(n, modes, i, j);
      metric.values[i][j] = d;
      metric.values[j][i] = d;
    }
  }
  return metric;
}

double spread(const StateVector& s, const EprComplex& e, ObjectId center) {
  if (!(s.carrier == e)) {
    fail(ErrorCode::CarrierMismatch, "state is over a different carrier");
  }
  if (std::abs(s.norm() - 1.0) > 1e-8) {
    fail(ErrorCode::NotNormalized, "spread needs a unit-norm state");
  }
  if (!is_connected(e)) {
    fail(ErrorCode::Disconnected, "spread needs a connected carrier");
  }
  auto dist = distances_from(e, center);  // ObjectNotInComplex when absent
  double sum = 0.0;
  for (std::size_t p = 0; p < dist.size(); ++p) {
    double d = static_cast<double>(*dist[p]);
    sum += s.amplitudes[p] * s.amplitudes[p] * d * d;
  }
  return std::sqrt(sum);
}

ExpansionReport expansion_series(const DecayChain& c) {
  const EprComplex& e0 = c.basis_complexes.front();
  if (!is_connected(e0)) {
    fail(ErrorCode::DisconnectedInitialBasis,
         "expansion series needs a connected initial basis");
  }
  SpectralBasis basis = spectral_basis(e0);

  ExpansionReport report;
  for (const EprComplex& ei : c.basis_complexes) {
    int cutoff = block_aligned_cutoff(basis, ei.object_count());
    double total = 0.0;
    for (ObjectId o : ei.objects) {
      StateVector projected =
          lowpass_project(delta_state(e0, o), basis, cutoff);
      total += spread(projected, e0, o);
    }
    report.cutoff_series.push_back(cutoff);
    report.spread_series.push_back(total / ei.object_count());
  }

  double baseline = report.spread_series.front();
  if (baseline <= 1e-12) {
    report.zero_baseline = true;
    baseline = 0.0;
    for (double sigma : report.spread_series) {
      if (sigma > 1e-12) {
        baseline = sigma;
        break;
      }
    }
    if (baseline == 0.0) baseline = 1.0;  // all-zero series, factors stay 0
  }
  for (double sigma : report.spread_series) {
    report.expansion_factor_series.push_back(sigma / baseline);
  }

  int crossings = 0;
  int monotone = 0;
  for (std::size_t i = 0; i + 1 < report.spread_series.size(); ++i) {
    if (report.cutoff_series[i + 1] < report.cutoff_series[i]) {
      ++crossings;
      if (report.spread_series[i + 1] >= report.spread_series[i] - 1e-12) {
        ++monotone;
      }
    }
  }
  report.monotone_fraction =
      crossings == 0 ? 1.0 : static_cast<double>(monotone) / crossings;
  return report;
}

double flatness_score(const EprComplex& e) {
  if (e.object_count() < 2) {
    fail(ErrorCode::InvalidArgument,
         "flatness needs at least two objects");
  }
  return symmetry_score(e).transitivity_fraction;
}

}  // namespace epr
