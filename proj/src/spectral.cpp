#include "epr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "epr/error.hpp"

namespace epr {

SymMatrix laplacian(const EprComplex& e) {
  const int n = e.object_count();
  SymMatrix l(n);
  for (const auto& [a, b] : e.edges) {
    int pa = e.position_of(a);
    int pb = e.position_of(b);
    l.at(pa, pb) = -1.0;
    l.at(pb, pa) = -1.0;
    l.at(pa, pa) += 1.0;
    l.at(pb, pb) += 1.0;
  }
  return l;
}

namespace {

constexpr double kDegenerateGap = 1e-8;

double frobenius(const SymMatrix& m) {
  double sum = 0.0;
  for (double x : m.a) sum += x * x;
  return std::sqrt(sum);
}

double off_diagonal_norm(const SymMatrix& m) {
  double sum = 0.0;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) {
      if (i != j) sum += m.at(i, j) * m.at(i, j);
    }
  }
  return std::sqrt(sum);
}

// One Jacobi rotation zeroing a(p,q), accumulating into the column basis v.
void rotate(SymMatrix& a, std::vector<std::vector<double>>& v, int p, int q) {
  const double apq = a.at(p, q);
  if (apq == 0.0) return;
  const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  const double app = a.at(p, p);
  const double aqq = a.at(q, q);
  a.at(p, p) = app - t * apq;
  a.at(q, q) = aqq + t * apq;
  a.at(p, q) = 0.0;
  a.at(q, p) = 0.0;
  for (int i = 0; i < a.n; ++i) {
    if (i == p || i == q) continue;
    const double aip = a.at(i, p);
    const double aiq = a.at(i, q);
    a.at(i, p) = aip - s * (aiq + tau * aip);
    a.at(p, i) = a.at(i, p);
    a.at(i, q) = aiq + s * (aip - tau * aiq);
    a.at(q, i) = a.at(i, q);
  }
  for (int i = 0; i < a.n; ++i) {
    const double vip = v[i][p];
    const double viq = v[i][q];
    v[i][p] = vip - s * (viq + tau * vip);
    v[i][q] = viq + s * (vip - tau * viq);
  }
}

void fix_sign(std::vector<double>& vec) {
  for (double x : vec) {
    if (std::abs(x) > kDegenerateGap) {
      if (x < 0.0) {
        for (double& y : vec) y = -y;
      }
      return;
    }
  }
}

}  // namespace

Eigensystem eigendecompose(const SymMatrix& matrix, int max_sweeps) {
  const int n = matrix.n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(matrix.at(i, j) - matrix.at(j, i)) > 1e-12) {
        fail(ErrorCode::NotSymmetric,
             "matrix is not symmetric at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
      }
    }
  }

  SymMatrix a = matrix;
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  const double tolerance = 1e-14 * frobenius(matrix);
  bool converged = off_diagonal_norm(a) <= tolerance;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    converged = off_diagonal_norm(a) <= tolerance;
  }
  if (!converged) {
    fail(ErrorCode::ConvergenceFailure,
         "Jacobi sweeps did not converge within " +
             std::to_string(max_sweeps) + " sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int x, int y) { return a.at(x, x) < a.at(y, y); });

  Eigensystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors.assign(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a.at(order[k], order[k]);
    for (int i = 0; i < n; ++i) out.eigenvectors[k][i] = v[i][order[k]];
  }

  // Within each degenerate block: Gram-Schmidt in index order, then the sign
  // convention. Outside blocks this is a no-op up to the sign flip.
  int start = 0;
  while (start < n) {
    int stop = start + 1;
    while (stop < n &&
           out.eigenvalues[stop] - out.eigenvalues[stop - 1] < kDegenerateGap) {
      ++stop;
    }
    for (int k = start; k < stop; ++k) {
      auto& vk = out.eigenvectors[k];
      for (int j = start; j < k; ++j) {
        const auto& vj = out.eigenvectors[j];
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += vj[i] * vk[i];
        for (int i = 0; i < n; ++i) vk[i] -= dot * vj[i];
      }
      double norm = 0.0;
      for (double x : vk) norm += x * x;
      norm = std::sqrt(norm);
      if (norm > 0.0) {
        for (double& x : vk) x /= norm;
      }
      fix_sign(vk);
    }
    start = stop;
  }
  return out;
}

SpectralBasis spectral_basis(const EprComplex& carrier, int max_sweeps) {
  Eigensystem eig = eigendecompose(laplacian(carrier), max_sweeps);
  SpectralBasis basis;
  basis.carrier = carrier;
  basis.eigenvalues = std::move(eig.eigenvalues);
  basis.eigenvectors = std::move(eig.eigenvectors);
  basis.tie_break_tag =
      "degenerate blocks (gap < 1e-8): Gram-Schmidt in index order, first "
      "component of magnitude > 1e-8 made positive";
  return basis;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (double x : amplitudes) sum += x * x;
  return std::sqrt(sum);
}

StateVector delta_state(const EprComplex& e, ObjectId o) {
  int pos = e.position_of(o);
  if (pos < 0) {
    fail(ErrorCode::ObjectNotInComplex,
         "object " + std::to_string(o) + " not in the carrier");
  }
  StateVector s;
  s.carrier = e;
  s.amplitudes.assign(e.objects.size(), 0.0);
  s.amplitudes[pos] = 1.0;
  return s;
}

namespace {

void require_same_carrier(const EprComplex& lhs, const EprComplex& rhs) {
  if (!(lhs == rhs)) {
    fail(ErrorCode::CarrierMismatch,
         "state and basis are over different carriers");
  }
}

}  // namespace

FourierSum fourier_expand(const StateVector& s, const SpectralBasis& b) {
  require_same_carrier(s.carrier, b.carrier);
  FourierSum f;
  f.coefficients.resize(b.dimension());
  for (int k = 0; k < b.dimension(); ++k) {
    double dot = 0.0;
    for (int i = 0; i < b.dimension(); ++i) {
      dot += b.eigenvectors[k][i] * s.amplitudes[i];
    }
    f.coefficients[k] = dot;
  }
  return f;
}

StateVector fourier_resum(const FourierSum& f, const SpectralBasis& b) {
  if (static_cast<int>(f.coefficients.size()) != b.dimension()) {
    fail(ErrorCode::CarrierMismatch,
         "coefficient count does not match the basis dimension");
  }
  StateVector s;
  s.carrier = b.carrier;
  s.amplitudes.assign(b.dimension(), 0.0);
  for (int k = 0; k < b.dimension(); ++k) {
    for (int i = 0; i < b.dimension(); ++i) {
      s.amplitudes[i] += f.coefficients[k] * b.eigenvectors[k][i];
    }
  }
  return s;
}

StateVector lowpass_project(const StateVector& s, const SpectralBasis& b,
                            int k) {
  if (k < 1 || k > b.dimension()) {
    fail(ErrorCode::BadCutoff,
         "cutoff " + std::to_string(k) + " outside [1, " +
             std::to_string(b.dimension()) + "]");
  }
  FourierSum f = fourier_expand(s, b);
  StateVector out;
  out.carrier = b.carrier;
  out.amplitudes.assign(b.dimension(), 0.0);
  for (int mode = 0; mode < k; ++mode) {
    for (int i = 0; i < b.dimension(); ++i) {
      out.amplitudes[i] += f.coefficients[mode] * b.eigenvectors[mode][i];
    }
  }
  double norm = out.norm();
  if (norm < 1e-12) {
    fail(ErrorCode::InvalidArgument,
         "projection vanished; state has no mass in the lowest " +
             std::to_string(k) + " modes");
  }
  for (double& x : out.amplitudes) x /= norm;
  return out;
}

int block_aligned_cutoff(const SpectralBasis& b, int k) {
  if (k < 1 || k > b.dimension()) {
    fail(ErrorCode::BadCutoff,
         "cutoff " + std::to_string(k) + " outside [1, " +
             std::to_string(b.dimension()) + "]");
  }
  int aligned = k;
  while (aligned < b.dimension() &&
         b.eigenvalues[aligned] - b.eigenvalues[aligned - 1] < kDegenerateGap) {
    ++aligned;
  }
  return aligned;
}

double shannon_entropy_bits(const std::vector<double>& probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p < -1e-12) {
      fail(ErrorCode::InvalidArgument, "negative probability");
    }
    if (p > 1e-300) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace epr
