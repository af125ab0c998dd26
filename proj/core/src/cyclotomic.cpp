#include "qdouble/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qdouble {

namespace {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors_ascending(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// Exact quotient of polynomials known to divide (leading coefficients
/// nonzero, constant-first storage).
std::vector<Rational> poly_divide(std::vector<Rational> num,
                                  const std::vector<Rational>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("poly_divide: degree underflow");
  std::vector<Rational> quot(num.size() - dd, Rational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = num[k + dd] / den[dd];
    quot[k] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const Rational& r : num)
    if (r != 0) throw std::logic_error("poly_divide: nonzero remainder");
  return quot;
}

/// Remainder of a raw coefficient vector modulo the N-th cyclotomic
/// polynomial; result has length phi(N).
std::vector<Rational> reduce_mod_cyclotomic(int n, std::vector<Rational> coeffs) {
  const std::vector<Rational>& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;  // = euler_phi(n)
  for (std::size_t k = coeffs.size(); k-- > deg;) {
    const Rational c = coeffs[k];
    if (c == 0) continue;
    coeffs[k] = 0;
    for (std::size_t j = 0; j < deg; ++j) coeffs[k - deg + j] -= c * phi[j];
  }
  coeffs.resize(deg, Rational(0));
  return coeffs;
}

/// Solves sum_j x_j * basis[j] = rhs exactly; basis vectors and rhs have
/// equal length.  Returns empty when inconsistent.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> basis,
                                  std::vector<Rational> rhs, bool& ok) {
  const std::size_t rows = rhs.size();
  const std::size_t cols = basis.size();
  // aug[r] = (basis[0][r], ..., basis[cols-1][r] | rhs[r])
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = basis[c][r];
    aug[r][cols] = rhs[r];
  }
  std::vector<int> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && aug[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      const Rational f = aug[r][col] / aug[row][col];
      for (std::size_t c = col; c <= cols; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (aug[r][cols] != 0) {
      ok = false;
      return {};
    }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    const int c = pivot_col_of_row[r];
    x[c] = aug[r][cols] / aug[r][c];
  }
  ok = true;
  return x;
}

}  // namespace

namespace {

const std::vector<Rational>& cyclotomic_polynomial_locked(
    int n, std::map<int, std::vector<Rational>>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<Rational> num(static_cast<std::size_t>(n) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d : divisors_ascending(n)) {
    if (d == n) continue;
    num = poly_divide(std::move(num), cyclotomic_polynomial_locked(d, cache));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::vector<Rational>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_polynomial_locked(n, cache);
}

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
  Cyclotomic c;
  c.coeffs_[0] = r;
  return c;
}

Cyclotomic Cyclotomic::from_phase(const Phase& p) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.den()), Rational(0));
  coeffs[static_cast<std::size_t>(p.num())] = 1;
  return from_coeffs(static_cast<int>(p.den()), std::move(coeffs));
}

Cyclotomic Cyclotomic::from_coeffs(int conductor, std::vector<Rational> coeffs) {
  if (conductor < 1) throw std::invalid_argument("cyclotomic: conductor must be >= 1");
  // Fold exponents into 0..N-1, reduce mod Phi_N.
  std::vector<Rational> folded(static_cast<std::size_t>(conductor), Rational(0));
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    folded[j % static_cast<std::size_t>(conductor)] += coeffs[j];
  folded = reduce_mod_cyclotomic(conductor, std::move(folded));

  // Lower the conductor to the least embedding divisor.
  for (int d : divisors_ascending(conductor)) {
    if (d == conductor) break;
    const int phi_d = euler_phi(d);
    std::vector<std::vector<Rational>> basis;
    basis.reserve(static_cast<std::size_t>(phi_d));
    for (int j = 0; j < phi_d; ++j) {
      std::vector<Rational> b(static_cast<std::size_t>(conductor), Rational(0));
      b[static_cast<std::size_t>(j) * (conductor / d) % conductor] = 1;
      basis.push_back(reduce_mod_cyclotomic(conductor, std::move(b)));
    }
    bool ok = false;
    std::vector<Rational> x = solve_exact(std::move(basis), folded, ok);
    if (ok) {
      Cyclotomic out;
      out.conductor_ = d;
      out.coeffs_ = std::move(x);
      return out;
    }
  }
  Cyclotomic out;
  out.conductor_ = conductor;
  out.coeffs_ = std::move(folded);
  return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  const int l = std::lcm(conductor_, o.conductor_);
  std::vector<Rational> acc(static_cast<std::size_t>(l), Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    acc[j * static_cast<std::size_t>(l / conductor_)] += coeffs_[j];
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
    acc[j * static_cast<std::size_t>(l / o.conductor_)] += o.coeffs_[j];
  return from_coeffs(l, std::move(acc));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Rational& r : out.coeffs_) r = -r;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  const int l = std::lcm(conductor_, o.conductor_);
  const std::size_t sl = static_cast<std::size_t>(l);
  std::vector<Rational> a(sl, Rational(0)), b(sl, Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    a[j * static_cast<std::size_t>(l / conductor_)] = coeffs_[j];
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
    b[j * static_cast<std::size_t>(l / o.conductor_)] = o.coeffs_[j];
  std::vector<Rational> prod(sl, Rational(0));  // exponents folded mod l
  for (std::size_t i = 0; i < sl; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < sl; ++j) {
      if (b[j] == 0) continue;
      prod[(i + j) % sl] += a[i] * b[j];
    }
  }
  return from_coeffs(l, std::move(prod));
}

Cyclotomic Cyclotomic::scale(const Rational& r) const {
  Cyclotomic out = *this;
  for (Rational& c : out.coeffs_) c *= r;
  if (r == 0) return from_coeffs(1, {Rational(0)});
  return out;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational())
    throw std::domain_error("cyclotomic: value is not rational (conductor " +
                            std::to_string(conductor_) + ")");
  return coeffs_[0];
}

std::int64_t Cyclotomic::as_integer() const {
  const Rational r = as_rational();
  if (boost::multiprecision::denominator(r) != 1)
    throw std::domain_error("cyclotomic: value " + str() + " is not an integer");
  const auto num = boost::multiprecision::numerator(r);
  if (num < std::numeric_limits<std::int64_t>::min() ||
      num > std::numeric_limits<std::int64_t>::max())
    throw std::domain_error("cyclotomic: integer out of 64-bit range");
  return static_cast<std::int64_t>(num);
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> out(0.0, 0.0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const double c = static_cast<double>(coeffs_[j]);
    const double t = 6.283185307179586476925286766559 * static_cast<double>(j) / conductor_;
    out += c * std::complex<double>(std::cos(t), std::sin(t));
  }
  return out;
}

std::string Cyclotomic::str() const {
  std::string out = "cyc(" + std::to_string(conductor_) + ";";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ",";
    out += coeffs_[j].str();
  }
  return out + ")";
}

Cyclotomic integrate(const Groupoid& g, const Cochain& beta) {
  if (beta.degree() != 0 || &beta.base() != &g)
    throw std::invalid_argument("integrate: beta must be a degree-0 cochain on g");
  for (int m = 0; m < g.num_morphisms(); ++m)
    if (!(beta({g.src(m)}) == beta({g.dst(m)})))
      throw std::invalid_argument("integrate: cochain is not locally constant");

  Cyclotomic by_objects;
  for (int x = 0; x < g.num_objects(); ++x)
    by_objects += Cyclotomic::from_phase(beta({x})).scale(Rational(1, g.out_degree(x)));

  Cyclotomic by_components;
  for (int rep : g.component_representatives()) {
    const int aut = static_cast<int>(g.automorphisms_at(rep).size());
    by_components += Cyclotomic::from_phase(beta({rep})).scale(Rational(1, aut));
  }
  if (!(by_objects == by_components))
    throw std::logic_error("integrate: object and component forms disagree");
  return by_objects;
}

}  // namespace qdouble
