#include "spexlab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spexlab {

Polynomial::Polynomial(std::vector<mpq_class> coefficients) : c_(std::move(coefficients)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Polynomial Polynomial::monomial(const mpq_class& c, int power) {
  std::vector<mpq_class> v(power + 1, mpq_class(0));
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

mpq_class Polynomial::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<mpq_class> m = c_;
  const mpq_class lead = c_.back();
  for (auto& c : m) c /= lead;
  return Polynomial(std::move(m));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<mpq_class> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<mpq_class> quot(a.degree() - db + 1, mpq_class(0));
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    const mpq_class factor = rem[i] / b.leading();
    quot[i - db] = factor;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * b.coefficient(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

int sign(const mpq_class& x) { return sgn(x); }

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  chain_.push_back(square_free_part(p));
  chain_.push_back(chain_.front().derivative());
  while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
    auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(Polynomial{} - r);
  }
  if (chain_.back().is_zero()) chain_.pop_back();
}

int SturmChain::variations(const mpq_class& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    const int s = sign(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

mpq_class cauchy_bound(const Polynomial& p) {
  if (p.degree() <= 0) return 1;
  mpq_class m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpq_class(abs(p.coefficient(i) / p.leading())));
  return m + 1;
}

RootBracket refine_root(const SturmChain& chain, RootBracket bracket, const mpq_class& width) {
  while (bracket.hi - bracket.lo > width) {
    const mpq_class mid = (bracket.lo + bracket.hi) / 2;
    if (chain.count_roots(mid, bracket.hi) >= 1)
      bracket.lo = mid;
    else
      bracket.hi = mid;
  }
  return bracket;
}

std::optional<RootBracket> isolate_largest_root(const Polynomial& p, const mpq_class& width) {
  if (p.degree() < 1) return std::nullopt;
  const SturmChain chain(p);
  const mpq_class bound = cauchy_bound(p);
  RootBracket bracket{-bound, bound};
  if (chain.count_roots(bracket.lo, bracket.hi) == 0) return std::nullopt;
  return refine_root(chain, bracket, width);
}

std::pair<int, RootBracket> sign_at_root(const Polynomial& f, const Polynomial& g, RootBracket bracket) {
  const SturmChain gchain(g);
  if (gchain.count_roots(bracket.lo, bracket.hi) != 1)
    throw std::invalid_argument("bracket does not isolate a single root of g");
  const Polynomial common = gcd(f, g);
  if (common.degree() >= 1 && SturmChain(common).count_roots(bracket.lo, bracket.hi) >= 1) return {0, bracket};
  const SturmChain fchain(f);
  while (fchain.count_roots(bracket.lo, bracket.hi) > 0) {
    const mpq_class mid = (bracket.lo + bracket.hi) / 2;
    if (gchain.count_roots(mid, bracket.hi) >= 1)
      bracket.lo = mid;
    else
      bracket.hi = mid;
  }
  return {sign(f(bracket.hi)), bracket};
}

}  // namespace spexlab
