#pragma once

#include <span>
#include <string>

namespace pctrees {

/// Triangular fuzzy number (l, m, u) with l <= m <= u.
///
/// Degenerate numbers (l == m == u) model crisp values. Multiplication and
/// division use the standard piecewise-linear approximations, so
/// a * inverse(a) has modal value 1 but is not (1, 1, 1) unless a is crisp.
struct Tfn {
  double l = 0.0;
  double m = 0.0;
  double u = 0.0;

  constexpr Tfn() = default;
  constexpr Tfn(double lower, double modal, double upper) : l(lower), m(modal), u(upper) {}
  static constexpr Tfn crisp(double c) { return {c, c, c}; }

  constexpr bool is_ordered() const { return l <= m && m <= u; }

  friend constexpr bool operator==(const Tfn&, const Tfn&) = default;
};

Tfn operator+(const Tfn& a, const Tfn& b);
Tfn operator-(const Tfn& a, const Tfn& b);

/// Throws DomainError if any component of either operand is negative.
Tfn operator*(const Tfn& a, const Tfn& b);

/// Throws DomainError if b.l <= 0.
Tfn operator/(const Tfn& a, const Tfn& b);

/// (1/u, 1/m, 1/l). Throws DomainError if a.l <= 0.
Tfn inverse(const Tfn& a);

/// Piecewise-linear membership grade; 1 at the apex even for degenerate sides.
double membership(const Tfn& a, double x);

/// Half the support width, (u - l) / 2.
double fuzziness(const Tfn& a);

/// Center of gravity, (l + m + u) / 3.
double defuzzify_centroid(const Tfn& a);

/// Relaxed normalization: sum of modal values is 1 and (sum l) * (sum u) is 1.
bool check_relaxed_normalization(std::span<const Tfn> ws, double tol);

/// Componentwise comparison within an absolute tolerance.
bool approx_equal(const Tfn& a, const Tfn& b, double tol);

std::string to_string(const Tfn& a);

}  // namespace pctrees
