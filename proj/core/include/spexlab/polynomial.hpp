#ifndef SPEXLAB_POLYNOMIAL_HPP
#define SPEXLAB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spexlab {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The zero polynomial has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> coefficients);
  static Polynomial monomial(const mpq_class& c, int power);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coefficient(int i) const;
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  mpq_class operator()(const mpq_class& x) const;
  double evaluate(double x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// "x^3 - 2*x + 1/2" style, highest degree first.
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// p divided by gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

int sign(const mpq_class& x);

/// Sturm chain of the square-free part of p.
class SturmChain {
 public:
  explicit SturmChain(const Polynomial& p);
  /// Distinct real roots in the half-open interval (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;
  const Polynomial& base() const { return chain_.front(); }

 private:
  int variations(const mpq_class& x) const;
  std::vector<Polynomial> chain_;
};

/// Bound B with every real root in (-B, B).
mpq_class cauchy_bound(const Polynomial& p);

/// Interval (lo, hi] holding exactly one real root of p.
struct RootBracket {
  mpq_class lo;
  mpq_class hi;
  double midpoint() const { return mpq_class((lo + hi) / 2).get_d(); }
  double width() const { return mpq_class(hi - lo).get_d(); }
};

/// Brackets the largest real root of p to width <= `width` by bisection
/// on Sturm counts. Empty when p has no real root.
std::optional<RootBracket> isolate_largest_root(const Polynomial& p, const mpq_class& width);

/// Shrinks `bracket` (which isolates a root r of `p`) by bisection until it
/// is no wider than `width`.
RootBracket refine_root(const SturmChain& p, RootBracket bracket, const mpq_class& width);

/// Exact sign of f at the root r of g isolated by `bracket`. Zero is
/// detected through gcd(f, g); otherwise the bracket is narrowed until f
/// has no root in it. The narrowed bracket is returned alongside the sign.
std::pair<int, RootBracket> sign_at_root(const Polynomial& f, const Polynomial& g, RootBracket bracket);

}  // namespace spexlab

#endif  // SPEXLAB_POLYNOMIAL_HPP
