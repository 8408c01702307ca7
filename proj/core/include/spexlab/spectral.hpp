#ifndef SPEXLAB_SPECTRAL_HPP
#define SPEXLAB_SPECTRAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/polynomial.hpp"

namespace spexlab {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

Matrix<double> to_double(const Matrix<mpq_class>& m);

struct SpectralOptions {
  double tol = 1e-10;
  long max_iterations = 1'000'000;
};

/// Perron data with its certificate. For a graph, `perron` is indexed by
/// vertex, is zero outside the dominant component, and has max entry 1.
struct SpectralResult {
  double radius = 0.0;
  std::vector<double> perron;
  double residual = 0.0;  // ||A x - radius x||_inf
  long iterations = 0;
  // Collatz-Wielandt bracket min/max (A x)_i / x_i over the support of x.
  double cw_lower = 0.0;
  double cw_upper = 0.0;
  // Graphs: index (in components() order) of the component achieving the
  // radius, and every component's radius.
  int dominant_component = 0;
  std::vector<double> component_radii;
  // Matrices: not irreducible, so the Perron vector may not be unique.
  bool reducible = false;
  // 2x2 matrices: (a+d)/2 + sqrt(((a-d)/2)^2 + bc).
  std::optional<double> closed_form;
};

/// Power iteration on A + I from the all-ones vector, per component; the
/// shift keeps bipartite components from oscillating. Throws
/// ConvergenceError when the residual misses tol within the budget.
SpectralResult spectral_radius(const Graph& g, SpectralOptions opts = {});

/// Perron root of a square non-negative matrix, same contract as above.
SpectralResult matrix_radius(const Matrix<double>& m, SpectralOptions opts = {});
SpectralResult matrix_radius(const Matrix<mpq_class>& m, SpectralOptions opts = {});

using Partition = std::vector<std::vector<Vertex>>;

struct QuotientSystem {
  Partition partition;
  // Entry (i, j): mean number of neighbours in class j over class i.
  Matrix<mpq_class> matrix;
  bool equitable = false;
};

/// Throws GraphError for an empty class, an out-of-range or repeated
/// vertex, or a partition that misses a vertex.
QuotientSystem quotient(const Graph& g, const Partition& partition);

/// det(xI - M) by Faddeev-LeVerrier over the rationals; dimension <= 12.
Polynomial char_poly(const Matrix<mpq_class>& m);

/// Largest real root of char_poly(m), bracketed to `width`. For a
/// non-negative matrix this is its Perron root.
RootBracket exact_radius(const Matrix<mpq_class>& m, const mpq_class& width);

}  // namespace spexlab

#endif  // SPEXLAB_SPECTRAL_HPP
