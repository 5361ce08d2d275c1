#pragma once

#include <string>
#include <vector>

#include "epr/complex.hpp"

namespace epr {

// Dense symmetric matrix over the positions of a carrier complex.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;  // row-major, n*n

  explicit SymMatrix(int size = 0) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}
  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Combinatorial Laplacian L = D - A on obj(E), indexed by positions.
SymMatrix laplacian(const EprComplex& e);

struct Eigensystem {
  std::vector<double> eigenvalues;               // ascending
  std::vector<std::vector<double>> eigenvectors; // eigenvectors[k] ~ eigenvalues[k]
};

// Cyclic Jacobi sweeps until the off-diagonal mass falls below
// 1e-14 * ||input||_F; ConvergenceFailure past max_sweeps. Degenerate blocks
// (adjacent gaps < 1e-8) are re-orthogonalized in index order and signed so
// the first component of magnitude > 1e-8 is positive, making the returned
// basis a pure function of the input matrix.
Eigensystem eigendecompose(const SymMatrix& matrix, int max_sweeps = 100);

struct SpectralBasis {
  EprComplex carrier;
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::string tie_break_tag;

  int dimension() const { return static_cast<int>(eigenvalues.size()); }
};

SpectralBasis spectral_basis(const EprComplex& carrier, int max_sweeps = 100);

// Amplitudes over the carrier's objects, aligned with carrier positions.
struct StateVector {
  EprComplex carrier;
  std::vector<double> amplitudes;

  double norm() const;
};

StateVector delta_state(const EprComplex& e, ObjectId o);

struct FourierSum {
  std::vector<double> coefficients;  // aligned with a basis
};

FourierSum fourier_expand(const StateVector& s, const SpectralBasis& b);
StateVector fourier_resum(const FourierSum& f, const SpectralBasis& b);

// Reconstruction from the K lowest modes, renormalized to unit norm.
StateVector lowpass_project(const StateVector& s, const SpectralBasis& b,
                            int k);

// Smallest cutoff >= k that does not split a degenerate eigenvalue block.
int block_aligned_cutoff(const SpectralBasis& b, int k);

// -sum p log2 p with the 0 log 0 = 0 convention.
double shannon_entropy_bits(const std::vector<double>& probabilities);

}  // namespace epr
