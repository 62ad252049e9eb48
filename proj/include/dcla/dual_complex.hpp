#pragma once

#include <complex>
#include <optional>

namespace dcla {

using cdouble = std::complex<double>;

/// Numerical cutoffs shared by the decompositions.
///
/// group_tol clusters eigenvalues of the standard part, resid_tol bounds
/// consistency and reconstruction residuals, zero_tol decides ranks and
/// appreciability. Thresholds are scaled by a problem norm where noted.
struct Tolerances {
  double group_tol = 1e-8;
  double resid_tol = 1e-9;
  double zero_tol = 1e-12;

  /// Throws InvalidArgument unless every field is finite and >= 0.
  void validate() const;
};

/// q = standard + infinitesimal * (epsilon j), with standard and
/// infinitesimal complex. The units satisfy epsilon^2 = 0 and
/// j * a = conj(a) * j for complex a, which makes the product
/// noncommutative.
struct DualComplex {
  cdouble standard{};
  cdouble infinitesimal{};

  constexpr DualComplex() = default;
  constexpr DualComplex(double re) : standard(re, 0.0) {}  // NOLINT(implicit)
  constexpr DualComplex(cdouble st) : standard(st) {}      // NOLINT(implicit)
  constexpr DualComplex(cdouble st, cdouble inf) : standard(st), infinitesimal(inf) {}

  /// From the four real coordinates on {1, i, epsilon j, epsilon k}.
  static constexpr DualComplex from_real4(double q0, double q1, double q2, double q3) {
    return {cdouble(q0, q1), cdouble(q2, q3)};
  }

  bool is_appreciable(double zero_tol = 0.0) const { return std::abs(standard) > zero_tol; }

  friend bool operator==(const DualComplex&, const DualComplex&) = default;
};

// (a + b ej)(c + d ej) = ac + (ad + b conj(c)) ej
constexpr DualComplex operator*(const DualComplex& p, const DualComplex& q) {
  return {p.standard * q.standard,
          p.standard * q.infinitesimal + p.infinitesimal * std::conj(q.standard)};
}

constexpr DualComplex operator+(const DualComplex& p, const DualComplex& q) {
  return {p.standard + q.standard, p.infinitesimal + q.infinitesimal};
}

constexpr DualComplex operator-(const DualComplex& p, const DualComplex& q) {
  return {p.standard - q.standard, p.infinitesimal - q.infinitesimal};
}

constexpr DualComplex operator-(const DualComplex& q) { return {-q.standard, -q.infinitesimal}; }

constexpr DualComplex operator*(double s, const DualComplex& q) {
  return {s * q.standard, s * q.infinitesimal};
}

inline DualComplex& operator+=(DualComplex& p, const DualComplex& q) { return p = p + q; }
inline DualComplex& operator-=(DualComplex& p, const DualComplex& q) { return p = p - q; }
inline DualComplex& operator*=(DualComplex& p, const DualComplex& q) { return p = p * q; }

/// q0 - q1 i - q2 ej - q3 ek.
constexpr DualComplex conj(const DualComplex& q) { return {std::conj(q.standard), -q.infinitesimal}; }

/// Magnitude; the infinitesimal part does not contribute.
inline double abs(const DualComplex& q) { return std::abs(q.standard); }

/// conj(q) / |q|^2. Throws NotAppreciable if |standard| <= zero_tol.
DualComplex inverse(const DualComplex& q, double zero_tol = 0.0);

/// Looks for an appreciable u with p u = u q (equivalently u^-1 p u = q).
///
/// The condition is real-linear in the four coordinates of u, so the
/// witness is taken from the null space of a 4x4 real system: the
/// smallest-norm null-space element whose standard part has magnitude 1.
/// Returns nullopt when the null space holds no appreciable element.
std::optional<DualComplex> find_similarity(const DualComplex& p, const DualComplex& q,
                                           double null_tol = 1e-12);

}  // namespace dcla
