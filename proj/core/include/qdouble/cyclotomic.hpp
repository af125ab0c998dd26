#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qdouble/cochain.hpp"
#include "qdouble/phase.hpp"

namespace qdouble {

using Rational = boost::multiprecision::cpp_rational;

/// An exact element of a cyclotomic field: the value
/// sum_j coeffs[j] * e^{2*pi*i*j/N}.  Values are kept in a canonical form
/// so that equality is coefficient comparison:
///   1. coefficients are reduced modulo the N-th cyclotomic polynomial, so
///      only exponents j < phi(N) appear;
///   2. the conductor is lowered to the least divisor d of N such that the
///      value lies in the d-th cyclotomic field (found by exact linear
///      solve), and the coefficients are rewritten over that field.
/// The canonical conductor is value-intrinsic: it does not depend on the
/// conductor the value was first built with.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return from_rational(Rational(1)); }
  static Cyclotomic from_rational(const Rational& r);
  /// The root of unity e^{2*pi*i*p/q}.
  static Cyclotomic from_phase(const Phase& p);
  /// Raw constructor: sum of coeffs[j] * e^{2*pi*i*j/N} with any number of
  /// coefficients (exponents are folded mod N), then canonicalized.
  static Cyclotomic from_coeffs(int conductor, std::vector<Rational> coeffs);

  int conductor() const { return conductor_; }
  /// Canonical coefficients, length phi(conductor).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic scale(const Rational& r) const;

  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  bool is_rational() const { return conductor_ == 1; }
  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  /// Throws when the value is not a rational number.
  Rational as_rational() const;
  /// Throws when the value is not a rational integer.
  std::int64_t as_integer() const;

  /// Float view for diagnostics only; never used for decisions.
  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  int conductor_;
  std::vector<Rational> coeffs_;
};

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// The exact groupoid integral of a locally constant degree-0 cochain:
///   sum over objects of beta(x) / #(morphisms out of x).
/// Also evaluates the per-component form, beta(rep) / #Aut(rep) summed over
/// components, and asserts the two agree.  Throws when beta is not locally
/// constant.
Cyclotomic integrate(const Groupoid& g, const Cochain& beta);

}  // namespace qdouble
