#include "pctrees/tfn.hpp"

#include <cmath>
#include <cstdio>

#include "pctrees/error.hpp"

namespace pctrees {

namespace {

bool has_negative(const Tfn& a) { return a.l < 0.0 || a.m < 0.0 || a.u < 0.0; }

}  // namespace

Tfn operator+(const Tfn& a, const Tfn& b) { return {a.l + b.l, a.m + b.m, a.u + b.u}; }

Tfn operator-(const Tfn& a, const Tfn& b) { return {a.l - b.u, a.m - b.m, a.u - b.l}; }

Tfn operator*(const Tfn& a, const Tfn& b) {
  if (has_negative(a) || has_negative(b)) {
    throw DomainError("fuzzy multiplication requires nonnegative operands, got " + to_string(a) + " * " +
                      to_string(b));
  }
  return {a.l * b.l, a.m * b.m, a.u * b.u};
}

Tfn operator/(const Tfn& a, const Tfn& b) {
  if (!(b.l > 0.0)) {
    throw DomainError("fuzzy division by " + to_string(b) + ": lower bound of the divisor must be positive");
  }
  return {a.l / b.u, a.m / b.m, a.u / b.l};
}

Tfn inverse(const Tfn& a) {
  if (!(a.l > 0.0)) {
    throw DomainError("fuzzy inverse of " + to_string(a) + ": lower bound must be positive");
  }
  return {1.0 / a.u, 1.0 / a.m, 1.0 / a.l};
}

double membership(const Tfn& a, double x) {
  if (x == a.m) return 1.0;
  if (x < a.l || x > a.u) return 0.0;
  if (x < a.m) return (x - a.l) / (a.m - a.l);
  return (a.u - x) / (a.u - a.m);
}

double fuzziness(const Tfn& a) { return (a.u - a.l) / 2.0; }

double defuzzify_centroid(const Tfn& a) { return (a.l + a.m + a.u) / 3.0; }

bool check_relaxed_normalization(std::span<const Tfn> ws, double tol) {
  double sum_l = 0.0;
  double sum_m = 0.0;
  double sum_u = 0.0;
  for (const auto& w : ws) {
    sum_l += w.l;
    sum_m += w.m;
    sum_u += w.u;
  }
  return std::abs(sum_m - 1.0) <= tol && std::abs(sum_l * sum_u - 1.0) <= tol;
}

bool approx_equal(const Tfn& a, const Tfn& b, double tol) {
  return std::abs(a.l - b.l) <= tol && std::abs(a.m - b.m) <= tol && std::abs(a.u - b.u) <= tol;
}

std::string to_string(const Tfn& a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.4f, %.4f, %.4f)", a.l, a.m, a.u);
  return buf;
}

}  // namespace pctrees
