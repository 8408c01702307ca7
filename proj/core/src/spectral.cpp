#include "spexlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace spexlab {

Matrix<double> to_double(const Matrix<mpq_class>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

namespace {

// Power iteration of (A + I) where apply(x, y) writes y = A x. The vector
// is kept max-normalized; the estimate is the least-squares fit
// x.Ax / x.x, which is the Rayleigh quotient for symmetric A.
SpectralResult power_iterate(int n, const std::function<void(const std::vector<double>&, std::vector<double>&)>& apply,
                             const SpectralOptions& opts) {
  if (!(opts.tol > 0)) throw std::invalid_argument("tolerance must be positive");
  SpectralResult r;
  std::vector<double> x(n, 1.0), ax(n);
  for (long it = 1;; ++it) {
    apply(x, ax);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
      num += x[i] * ax[i];
      den += x[i] * x[i];
    }
    const double rho = num / den;
    double res = 0.0;
    for (int i = 0; i < n; ++i) res = std::max(res, std::abs(ax[i] - rho * x[i]));
    if (res <= opts.tol) {
      r.radius = rho;
      r.residual = res;
      r.iterations = it;
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (int i = 0; i < n; ++i) {
        if (x[i] <= 0) continue;
        lo = std::min(lo, ax[i] / x[i]);
        hi = std::max(hi, ax[i] / x[i]);
      }
      r.cw_lower = lo;
      r.cw_upper = hi;
      r.perron = std::move(x);
      return r;
    }
    if (it >= opts.max_iterations)
      throw ConvergenceError("power iteration did not reach tolerance within " + std::to_string(opts.max_iterations) +
                             " iterations (residual " + std::to_string(res) + ")");
    double top = 0.0;
    for (int i = 0; i < n; ++i) {
      ax[i] += x[i];
      top = std::max(top, ax[i]);
    }
    if (top == 0.0) {
      // Nilpotent part: A x = 0 would have converged above.
      throw ConvergenceError("power iteration collapsed to zero");
    }
    for (int i = 0; i < n; ++i) x[i] = ax[i] / top;
  }
}

bool strongly_connected(const Matrix<double>& m) {
  const int n = m.rows();
  auto reach = [&](bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        const double e = forward ? m(u, v) : m(v, u);
        if (e > 0 && !seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n;
  };
  return n == 0 || (reach(true) && reach(false));
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, SpectralOptions opts) {
  if (g.order() < 1) throw std::invalid_argument("spectral radius of the empty graph");
  const auto parts = components(g);
  SpectralResult best;
  best.radius = -1.0;
  std::vector<double> radii;
  long total_iterations = 0;
  double worst_residual = 0.0;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto lists = parts[c].graph.adjacency_lists();
    const int n = parts[c].graph.order();
    SpectralResult r = power_iterate(
        n,
        [&](const std::vector<double>& x, std::vector<double>& y) {
          for (int u = 0; u < n; ++u) {
            double s = 0.0;
            for (Vertex w : lists[u]) s += x[w];
            y[u] = s;
          }
        },
        opts);
    total_iterations += r.iterations;
    worst_residual = std::max(worst_residual, r.residual);
    radii.push_back(r.radius);
    if (r.radius > best.radius) {
      best = r;
      best.dominant_component = static_cast<int>(c);
      std::vector<double> full(g.order(), 0.0);
      for (int i = 0; i < n; ++i) full[parts[c].labels[i]] = r.perron[i];
      best.perron = std::move(full);
    }
  }
  best.component_radii = std::move(radii);
  best.iterations = total_iterations;
  // The zero-padded vector is an eigenvector of the whole graph, so the
  // residual stays the dominant component's; the bracket widens to cover
  // every component.
  if (parts.size() > 1) {
    best.cw_lower = std::min(best.cw_lower, best.radius);
    best.cw_upper = std::max(best.cw_upper, best.radius);
  }
  return best;
}

SpectralResult matrix_radius(const Matrix<double>& m, SpectralOptions opts) {
  if (!m.square() || m.rows() == 0) throw std::invalid_argument("matrix_radius needs a non-empty square matrix");
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m(i, j) < 0) throw std::invalid_argument("matrix_radius needs a non-negative matrix");
  SpectralResult r = power_iterate(
      n,
      [&](const std::vector<double>& x, std::vector<double>& y) {
        for (int i = 0; i < n; ++i) {
          double s = 0.0;
          for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
          y[i] = s;
        }
      },
      opts);
  r.reducible = !strongly_connected(m);
  r.component_radii = {r.radius};
  if (n == 2) {
    const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    r.closed_form = (a + d) / 2 + std::sqrt((a - d) * (a - d) / 4 + b * c);
  }
  return r;
}

SpectralResult matrix_radius(const Matrix<mpq_class>& m, SpectralOptions opts) {
  return matrix_radius(to_double(m), opts);
}

QuotientSystem quotient(const Graph& g, const Partition& partition) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty()) throw GraphError("partition class " + std::to_string(i) + " is empty");
    for (Vertex v : partition[i]) {
      if (v < 0 || v >= n) throw GraphError("partition vertex " + std::to_string(v) + " out of range");
      if (cls[v] >= 0) throw GraphError("vertex " + std::to_string(v) + " appears in two classes");
      cls[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (cls[v] < 0) throw GraphError("vertex " + std::to_string(v) + " is not covered by the partition");

  const int p = static_cast<int>(partition.size());
  QuotientSystem q{partition, Matrix<mpq_class>(p, p), true};
  for (int i = 0; i < p; ++i) {
    std::vector<long> sums(p, 0);
    std::vector<int> first;
    for (std::size_t t = 0; t < partition[i].size(); ++t) {
      std::vector<int> counts(p, 0);
      g.neighbors(partition[i][t]).for_each([&](Vertex w) { ++counts[cls[w]]; });
      if (t == 0)
        first = counts;
      else if (counts != first)
        q.equitable = false;
      for (int j = 0; j < p; ++j) sums[j] += counts[j];
    }
    for (int j = 0; j < p; ++j) {
      q.matrix(i, j) = mpq_class(sums[j], static_cast<long>(partition[i].size()));
      q.matrix(i, j).canonicalize();
    }
  }
  return q;
}

Polynomial char_poly(const Matrix<mpq_class>& a) {
  if (!a.square()) throw std::invalid_argument("char_poly needs a square matrix");
  const int n = a.rows();
  if (n > 12) throw std::invalid_argument("char_poly supports dimension <= 12, got " + std::to_string(n));
  std::vector<mpq_class> c(n + 1, mpq_class(0));
  c[n] = 1;
  Matrix<mpq_class> mk(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Matrix<mpq_class> next(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (int t = 0; t < n; ++t) s += a(i, t) * mk(t, j);
        if (i == j) s += c[n - k + 1];
        next(i, j) = s;
      }
    mk = std::move(next);
    mpq_class trace = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) trace += a(i, t) * mk(t, i);
    c[n - k] = -trace / k;
  }
  return Polynomial(std::move(c));
}

RootBracket exact_radius(const Matrix<mpq_class>& m, const mpq_class& width) {
  auto bracket = isolate_largest_root(char_poly(m), width);
  if (!bracket) throw std::logic_error("characteristic polynomial without a real root");
  return *bracket;
}

}  // namespace spexlab
