#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cstarineq {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. This is the single carrier type for
/// algebra elements, module elements, operators, vectors (n x 1) and
/// scalars (1 x 1) throughout the library.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}

  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// From a row-major entry list. Throws ValidationError if the entry
  /// count does not match or any entry is non-finite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<Complex>& values);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Largest entry modulus.
  double max_abs() const;
  double frobenius_norm() const;

  /// True iff max_abs(M - M*) <= tol.
  bool is_hermitian(double tol) const;
  bool is_zero() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, Complex s);
ComplexMatrix operator-(const ComplexMatrix& a);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// (M + M*)/2, the Hermitian part of a square matrix.
ComplexMatrix hermitian_part(const ComplexMatrix& m);

}  // namespace cstarineq
