#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qdouble {

/// An exact root of unity e^{2*pi*i*p/q}, stored as the reduced fraction
/// p/q with 0 <= p < q.  The group operation is written multiplicatively:
/// multiplying phases adds the fractions modulo 1.  All arithmetic is exact;
/// intermediate products are widened to 128 bits so reduced fractions with
/// denominators up to ~2^31 never overflow.
class Phase {
 public:
  /// The trivial phase 1 (fraction 0/1).
  constexpr Phase() : num_(0), den_(1) {}

  /// e^{2*pi*i*num/den}.  den must be nonzero.
  Phase(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }

  static Phase one() { return Phase(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_one() const { return num_ == 0; }

  Phase operator*(const Phase& o) const {
    const __int128 n = static_cast<__int128>(num_) * o.den_ +
                       static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    return make_reduced(n, d);
  }
  Phase& operator*=(const Phase& o) { return *this = *this * o; }

  Phase inverse() const { return num_ == 0 ? Phase() : Phase(den_ - num_, den_); }
  Phase operator/(const Phase& o) const { return *this * o.inverse(); }

  /// Integer power, negative exponents allowed.
  Phase pow(std::int64_t k) const {
    const __int128 n = static_cast<__int128>(num_) * k;
    return make_reduced(n, den_);
  }

  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase& a, const Phase& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  std::complex<double> to_complex() const {
    const double t = 6.283185307179586476925286766559 *
                     static_cast<double>(num_) / static_cast<double>(den_);
    return {std::cos(t), std::sin(t)};
  }

  /// Serialized as the exponent fraction "p/q".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "p/q" (also accepts a bare integer "p", meaning the trivial
  /// phase when p is integral).
  static Phase parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Phase(std::stoll(s), 1);
      return Phase(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("phase: cannot parse \"" + s + "\" as p/q");
    }
  }

 private:
  static Phase make_reduced(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("phase: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    n %= d;
    if (n < 0) n += d;
    __int128 a = n, b = d;
    while (b != 0) { const __int128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    n /= a; d /= a;
    Phase p;
    p.num_ = static_cast<std::int64_t>(n);
    p.den_ = static_cast<std::int64_t>(d);
    if (p.den_ != d || p.num_ != n)
      throw std::overflow_error("phase: reduced fraction exceeds 64 bits");
    return p;
  }

  void reduce() { *this = make_reduced(num_, den_); }

  std::int64_t num_;
  std::int64_t den_;
};

inline Phase operator*(std::int64_t, const Phase&) = delete;

}  // namespace qdouble

template <>
struct std::hash<qdouble::Phase> {
  std::size_t operator()(const qdouble::Phase& p) const noexcept {
    return std::hash<std::int64_t>()(p.num() * 1000003 + p.den());
  }
};
