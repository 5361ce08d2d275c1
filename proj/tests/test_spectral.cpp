#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "epr/complex.hpp"
#include "epr/rng.hpp"
#include "epr/spectral.hpp"
#include "test_support.hpp"

using namespace epr;
using epr::testing::fails_with;

namespace {

std::vector<double> cycle_spectrum(int n) {
  std::vector<double> values(n);
  for (int k = 0; k < n; ++k) {
    values[k] = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
  }
  std::sort(values.begin(), values.end());
  return values;
}

StateVector random_state(const EprComplex& carrier, std::uint64_t seed) {
  SplitMix64 rng(seed);
  StateVector s;
  s.carrier = carrier;
  s.amplitudes.resize(carrier.objects.size());
  for (double& x : s.amplitudes) x = 2.0 * rng.next_double() - 1.0;
  return s;
}

}  // namespace

TEST_CASE("laplacian structure") {
  SymMatrix single = laplacian(make_complex(2, {0, 1}, {{0, 1}}));
  CHECK(single.at(0, 0) == 1.0);
  CHECK(single.at(0, 1) == -1.0);
  CHECK(single.at(1, 0) == -1.0);
  CHECK(single.at(1, 1) == 1.0);

  SymMatrix zero = laplacian(edgeless_complex(3));
  for (double x : zero.a) CHECK(x == 0.0);

  SymMatrix c4 = laplacian(cycle_complex(4));
  for (int i = 0; i < 4; ++i) {
    CHECK(c4.at(i, i) == 2.0);
    double row = 0.0;
    for (int j = 0; j < 4; ++j) row += c4.at(i, j);
    CHECK(row == 0.0);
  }
}

TEST_CASE("eigendecomposition on analytic spectra") {
  Eigensystem c4 = eigendecompose(laplacian(cycle_complex(4)));
  REQUIRE(c4.eigenvalues.size() == 4);
  CHECK(c4.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(c4.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(c4.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(c4.eigenvalues[3] == doctest::Approx(4.0).epsilon(1e-9));

  Eigensystem k5 = eigendecompose(laplacian(complete_complex(5)));
  CHECK(std::abs(k5.eigenvalues[0]) < 1e-9);
  for (int k = 1; k < 5; ++k) {
    CHECK(k5.eigenvalues[k] == doctest::Approx(5.0).epsilon(1e-9));
  }

  for (int n = 3; n <= 16; ++n) {
    Eigensystem sys = eigendecompose(laplacian(cycle_complex(n)));
    std::vector<double> expected = cycle_spectrum(n);
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(sys.eigenvalues[k] - expected[k]) < 1e-9);
    }
  }
}

TEST_CASE("eigendecomposition properties and determinism") {
  auto check_basis = [](const EprComplex& e, int components) {
    SymMatrix l = laplacian(e);
    Eigensystem sys = eigendecompose(l);
    const int n = l.n;

    int near_zero = 0;
    for (double v : sys.eigenvalues) {
      CHECK(v >= -1e-9);
      if (std::abs(v) < 1e-8) ++near_zero;
    }
    CHECK(near_zero == components);

    // Orthonormality within 1e-9.
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) {
          dot += sys.eigenvectors[a][i] * sys.eigenvectors[b][i];
        }
        CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-9);
      }
    }
    // Reconstruction within 1e-8.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) {
          sum += sys.eigenvalues[k] * sys.eigenvectors[k][i] *
                 sys.eigenvectors[k][j];
        }
        CHECK(std::abs(sum - l.at(i, j)) <= 1e-8);
      }
    }
    // Eigenvector equation within 1e-8.
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        double lv = 0.0;
        for (int j = 0; j < n; ++j) lv += l.at(i, j) * sys.eigenvectors[k][j];
        CHECK(std::abs(lv - sys.eigenvalues[k] * sys.eigenvectors[k][i]) <=
              1e-8);
      }
    }
  };

  check_basis(cycle_complex(8), 1);
  check_basis(complete_complex(6), 1);
  check_basis(epr::testing::petersen_complex(), 1);
  check_basis(make_complex(5, {0, 1, 2, 3, 4}, {{0, 1}, {2, 3}, {3, 4}}), 2);

  // Bit-identical across runs on the same input.
  Eigensystem a = eigendecompose(laplacian(cycle_complex(12)));
  Eigensystem b = eigendecompose(laplacian(cycle_complex(12)));
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);

  SymMatrix skew(2);
  skew.at(0, 1) = 1.0;
  CHECK(fails_with(ErrorCode::NotSymmetric,
                   [&] { eigendecompose(skew); }));
  CHECK(fails_with(ErrorCode::ConvergenceFailure, [] {
    eigendecompose(laplacian(cycle_complex(16)), 0);
  }));
}

TEST_CASE("delta states, expansion, resummation") {
  EprComplex c4 = cycle_complex(4);
  SpectralBasis basis = spectral_basis(c4);

  StateVector d0 = delta_state(c4, 0);
  CHECK(d0.norm() == doctest::Approx(1.0));
  StateVector d2 = delta_state(c4, 2);
  double overlap = 0.0;
  for (int i = 0; i < 4; ++i) overlap += d0.amplitudes[i] * d2.amplitudes[i];
  CHECK(overlap == 0.0);
  CHECK(fails_with(ErrorCode::ObjectNotInComplex,
                   [&] { delta_state(c4, 9); }));

  // Parseval for the delta.
  FourierSum f = fourier_expand(d0, basis);
  double parseval = 0.0;
  for (double c : f.coefficients) parseval += c * c;
  CHECK(std::abs(parseval - 1.0) <= 1e-10);

  // Constant state hits only mode 0.
  StateVector constant;
  constant.carrier = c4;
  constant.amplitudes.assign(4, 0.5);
  FourierSum cf = fourier_expand(constant, basis);
  CHECK(std::abs(cf.coefficients[0] - 1.0) <= 1e-10);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(cf.coefficients[k]) <= 1e-10);

  // Round trip on 100 seeded random states over two carriers.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const EprComplex& carrier = seed % 2 == 0
                                    ? c4
                                    : epr::testing::petersen_complex();
    SpectralBasis cb = spectral_basis(carrier);
    StateVector s = random_state(carrier, seed * 977 + 1);
    FourierSum expanded = fourier_expand(s, cb);
    double energy = 0.0;
    for (double c : expanded.coefficients) energy += c * c;
    CHECK(std::abs(energy - s.norm() * s.norm()) <= 1e-10);
    StateVector back = fourier_resum(expanded, cb);
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
      CHECK(std::abs(back.amplitudes[i] - s.amplitudes[i]) <= 1e-10);
    }
  }

  CHECK(fails_with(ErrorCode::CarrierMismatch, [&] {
    fourier_expand(delta_state(cycle_complex(5), 0), basis);
  }));
}

TEST_CASE("lowpass projection") {
  EprComplex c32 = cycle_complex(32);
  SpectralBasis basis = spectral_basis(c32);
  StateVector d = delta_state(c32, 0);

  // Full cutoff reproduces the state.
  StateVector full = lowpass_project(d, basis, 32);
  for (int i = 0; i < 32; ++i) {
    CHECK(std::abs(full.amplitudes[i] - d.amplitudes[i]) <= 1e-10);
  }

  // K=1 on a connected carrier is the uniform state.
  StateVector flat = lowpass_project(d, basis, 1);
  for (int i = 0; i < 32; ++i) {
    CHECK(flat.amplitudes[i] == doctest::Approx(1.0 / std::sqrt(32.0)));
  }

  // K=4: support spreads, entropy positive.
  StateVector mid = lowpass_project(d, basis, 4);
  std::vector<double> mass(32);
  int support = 0;
  for (int i = 0; i < 32; ++i) {
    mass[i] = mid.amplitudes[i] * mid.amplitudes[i];
    if (mass[i] > 1e-12) ++support;
  }
  CHECK(support > 1);
  CHECK(shannon_entropy_bits(mass) > 0.0);

  // Idempotence at fixed K.
  StateVector once = lowpass_project(d, basis, 7);
  StateVector twice = lowpass_project(once, basis, 7);
  for (int i = 0; i < 32; ++i) {
    CHECK(std::abs(twice.amplitudes[i] - once.amplitudes[i]) <= 1e-10);
  }

  // Raw projection norm is non-increasing as K decreases.
  FourierSum f = fourier_expand(d, basis);
  double previous = 2.0;
  for (int k = 32; k >= 1; --k) {
    double energy = 0.0;
    for (int mode = 0; mode < k; ++mode) {
      energy += f.coefficients[mode] * f.coefficients[mode];
    }
    CHECK(energy <= previous + 1e-12);
    previous = energy;
  }

  CHECK(fails_with(ErrorCode::BadCutoff, [&] { lowpass_project(d, basis, 0); }));
  CHECK(fails_with(ErrorCode::BadCutoff,
                   [&] { lowpass_project(d, basis, 33); }));
}

TEST_CASE("block alignment on cycle spectra") {
  SpectralBasis basis = spectral_basis(cycle_complex(64));
  // Blocks: {0}, then 31 pairs, then {4}; boundaries at odd counts and 64.
  CHECK(block_aligned_cutoff(basis, 1) == 1);
  CHECK(block_aligned_cutoff(basis, 2) == 3);
  CHECK(block_aligned_cutoff(basis, 3) == 3);
  CHECK(block_aligned_cutoff(basis, 60) == 61);
  CHECK(block_aligned_cutoff(basis, 63) == 63);
  CHECK(block_aligned_cutoff(basis, 64) == 64);
  CHECK(fails_with(ErrorCode::BadCutoff,
                   [&] { block_aligned_cutoff(basis, 0); }));
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy_bits({1.0, 0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(shannon_entropy_bits({0.25, 0.25, 0.25, 0.25}) ==
        doctest::Approx(2.0));
  CHECK(fails_with(ErrorCode::InvalidArgument,
                   [] { shannon_entropy_bits({-0.5, 1.5}); }));
}
