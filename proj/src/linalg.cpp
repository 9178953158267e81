#include "cstarineq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cstarineq/errors.hpp"

namespace cstarineq {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalFactor = 1e-12;

// Eigensolve of the symmetric pivot [[app, h], [h, aqq]], h > 0. rt1 carries
// the eigenvalue of larger magnitude and (cs1, sn1) its unit eigenvector.
// Expression order follows the standard 2x2 kernel (dlaev2) so that results on
// exactly singular inputs, roundoff included, agree with mainstream tooling.
void pivot_eig(double app, double h, double aqq, double& rt1, double& rt2, double& cs1,
               double& sn1) {
  const double sm = app + aqq;
  const double df = app - aqq;
  const double adf = std::abs(df);
  const double tb = h + h;
  const double ab = std::abs(tb);
  double rt;
  if (adf > ab) {
    rt = adf * std::sqrt(1.0 + (ab / adf) * (ab / adf));
  } else if (adf < ab) {
    rt = ab * std::sqrt(1.0 + (adf / ab) * (adf / ab));
  } else {
    rt = ab * std::sqrt(2.0);
  }
  const double acmx = std::abs(app) > std::abs(aqq) ? app : aqq;
  const double acmn = std::abs(app) > std::abs(aqq) ? aqq : app;
  int sgn1;
  if (sm < 0.0) {
    rt1 = 0.5 * (sm - rt);
    sgn1 = -1;
    rt2 = (acmx / rt1) * acmn - (h / rt1) * h;
  } else if (sm > 0.0) {
    rt1 = 0.5 * (sm + rt);
    sgn1 = 1;
    rt2 = (acmx / rt1) * acmn - (h / rt1) * h;
  } else {
    rt1 = 0.5 * rt;
    rt2 = -0.5 * rt;
    sgn1 = 1;
  }
  double cs;
  int sgn2;
  if (df >= 0.0) {
    cs = df + rt;
    sgn2 = 1;
  } else {
    cs = df - rt;
    sgn2 = -1;
  }
  const double acs = std::abs(cs);
  if (acs > ab) {
    const double ct = -tb / cs;
    sn1 = 1.0 / std::sqrt(1.0 + ct * ct);
    cs1 = ct * sn1;
  } else {
    if (ab == 0.0) {
      cs1 = 1.0;
      sn1 = 0.0;
    } else {
      const double tn = -cs / tb;
      cs1 = 1.0 / std::sqrt(1.0 + tn * tn);
      sn1 = tn * cs1;
    }
  }
  if (sgn1 == sgn2) {
    const double tn = cs1;
    cs1 = -sn1;
    sn1 = tn;
  }
}

double off_diagonal_frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

ComplexMatrix assemble(const SpectralDecomposition& d, const std::vector<double>& values) {
  const ComplexMatrix& v = d.eigenvectors;
  ComplexMatrix scaled = v;
  for (std::size_t j = 0; j < d.dim; ++j)
    for (std::size_t i = 0; i < d.dim; ++i) scaled(i, j) *= values[j];
  return hermitian_part(scaled * v.adjoint());
}

double spectral_radius(const SpectralDecomposition& d) {
  double m = 0.0;
  for (double v : d.eigenvalues) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

double hermitian_input_tolerance(const ComplexMatrix& m) {
  return 1e-10 * std::max(1.0, m.max_abs());
}

SpectralDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("eigensystem of non-square matrix");
  if (!m.is_hermitian(hermitian_input_tolerance(m))) {
    throw SymmetryError("matrix is not Hermitian within tolerance");
  }
  const std::size_t n = m.rows();

  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kOffDiagonalFactor * m.frobenius_norm();

  bool converged = (n < 2);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_frobenius(a) <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double h = std::abs(a(p, q));
        if (h < 1e-300) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const Complex phase = a(p, q) / h;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        double rt1, rt2, cs1, sn1;
        pivot_eig(app, h, aqq, rt1, rt2, cs1, sn1);
        // The pivot block factors as diag(phase,1)·[[app,h],[h,aqq]]·diag(phase,1)*;
        // columns (p,q) therefore mix through [[phase·cs1, -phase·sn1], [sn1, cs1]].
        const Complex pc = phase * cs1;
        const Complex ps = phase * sn1;

        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = aip * pc + aiq * sn1;
          a(i, q) = -(aip * ps) + aiq * cs1;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        a(p, p) = rt1;
        a(q, q) = rt2;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = vip * pc + viq * sn1;
          v(i, q) = -(vip * ps) + viq * cs1;
        }
      }
    }
  }
  if (!converged && off_diagonal_frobenius(a) > threshold) {
    throw NumericalError("eigensystem did not converge within 100 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  SpectralDecomposition d;
  d.dim = n;
  d.eigenvalues.resize(n);
  d.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    d.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) d.eigenvectors(i, k) = v(i, order[k]);
  }

  const ComplexMatrix gram = d.eigenvectors.adjoint() * d.eigenvectors;
  if (max_abs_diff(gram, ComplexMatrix::identity(n)) > 1e-10) {
    throw NumericalError("eigenvector columns are not orthonormal");
  }
  const ComplexMatrix rebuilt = assemble(d, d.eigenvalues);
  if (max_abs_diff(rebuilt, m) > 1e-9 * std::max(1.0, m.max_abs())) {
    throw NumericalError("eigensystem does not reconstruct the input");
  }
  return d;
}

ComplexMatrix matrix_function(const ComplexMatrix& m, const ScalarFunction& f) {
  SpectralDecomposition d = hermitian_eig(m);
  const double tol = 1e-10 * std::max(1.0, spectral_radius(d));
  std::vector<double> values(d.dim);
  for (std::size_t k = 0; k < d.dim; ++k) values[k] = f.eval_clamped(d.eigenvalues[k], tol);
  return assemble(d, values);
}

ComplexMatrix matrix_power(const ComplexMatrix& m, double r) {
  if (!std::isfinite(r)) throw PreconditionError("matrix power exponent must be finite");
  SpectralDecomposition d = hermitian_eig(m);
  const double clamp_tol = 1e-10 * std::max(1.0, spectral_radius(d));
  const bool integral = (r == std::round(r)) && std::abs(r) < 1e15;

  std::vector<double> values(d.dim);
  for (std::size_t k = 0; k < d.dim; ++k) {
    double u = d.eigenvalues[k];
    if (!integral) {
      if (u < -clamp_tol) {
        throw NegativityError("eigenvalue " + std::to_string(u) +
                              " is negative beyond clamping tolerance for exponent " +
                              std::to_string(r));
      }
      u = std::max(u, 0.0);
    }
    if (u == 0.0 && r < 0.0) throw DomainError("negative power of a singular matrix");
    const double y = std::pow(u, r);
    if (!std::isfinite(y)) {
      throw DomainError("eigenvalue power " + std::to_string(u) + "^" + std::to_string(r) +
                        " is not finite");
    }
    values[k] = y;
  }
  return assemble(d, values);
}

PsdVerdict psd_verdict(const ComplexMatrix& m, double tol) {
  SpectralDecomposition d = hermitian_eig(m);
  PsdVerdict verdict;
  verdict.tolerance = tol;
  verdict.min_eigenvalue = d.dim == 0 ? 0.0 : d.eigenvalues.front();
  verdict.is_psd = verdict.min_eigenvalue >= -tol;
  return verdict;
}

PsdVerdict psd_verdict(const ComplexMatrix& m) {
  SpectralDecomposition d = hermitian_eig(m);
  PsdVerdict verdict;
  verdict.tolerance = 1e-9 * std::max(1.0, spectral_radius(d));
  verdict.min_eigenvalue = d.dim == 0 ? 0.0 : d.eigenvalues.front();
  verdict.is_psd = verdict.min_eigenvalue >= -verdict.tolerance;
  return verdict;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  SpectralDecomposition d = hermitian_eig(m.adjoint() * m);
  return std::sqrt(std::max(0.0, d.eigenvalues.back()));
}

}  // namespace cstarineq
