#pragma once
// Positive definite binary quadratic forms a x^2 + b xy + c y^2, Gauss
// reduction, and class numbers by exhaustive enumeration of reduced forms.

#include <vector>

#include <gzsm/quadratic/disc.hpp>

namespace gzsm {

struct QuadForm {
  Int a, b, c;

  bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const QuadForm& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
};

inline Int form_disc(const QuadForm& F) { return F.b * F.b - 4 * F.a * F.c; }

// Reduced: |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
inline bool is_reduced(const QuadForm& F) {
  if (!(abs(F.b) <= F.a && F.a <= F.c)) return false;
  if ((abs(F.b) == F.a || F.a == F.c) && F.b < 0) return false;
  return true;
}

// Gauss reduction of a positive definite form; terminates since a strictly
// decreases outside the final normalize/swap steps.
inline QuadForm reduce(QuadForm F) {
  if (form_disc(F) >= 0 || F.a <= 0)
    throw std::invalid_argument("reduce: form must be positive definite");
  while (!is_reduced(F)) {
    // Normalize: shift b into (-a, a] via b -> b - 2ak, c tracks the disc.
    Int two_a = 2 * F.a;
    Int b_shift = mod_floor(F.b + F.a, two_a) - F.a;  // in (-a, a]
    if (b_shift != F.b) {
      F.c -= divide_exact((F.b - b_shift) * (F.b + b_shift), 4 * F.a);
      F.b = b_shift;
    }
    if (F.a > F.c || (F.a == F.c && F.b < 0)) {
      F = QuadForm{F.c, -F.b, F.a};  // swap: (a,b,c) -> (c,-b,a)
    } else if (abs(F.b) == F.a && F.b < 0) {
      F.b = -F.b;  // boundary normalization, c unchanged
    }
  }
  return F;
}

// All reduced forms of discriminant d (not only primitive ones when
// primitive_only = false).  For reduced forms |b| <= a <= sqrt(|d|/3).
inline std::vector<QuadForm> reduced_forms(const Int& d, bool primitive_only = true) {
  if (!is_discriminant(d)) throw std::invalid_argument("reduced_forms: bad discriminant");
  std::vector<QuadForm> out;
  Int a_max = isqrt(abs(d) / 3);
  for (Int a = 1; a <= a_max; ++a) {
    // b = d mod 2 and -a < b <= a.
    for (Int b = -a + 1; b <= a; ++b) {
      if (mod_floor(b - d, 2) != 0) continue;
      Int num = b * b - d;
      if (!divides(4 * a, num)) continue;
      Int c = divide_exact(num, 4 * a);
      if (c < a) continue;
      if (b < 0 && (a == c || -b == a)) continue;  // reduced-boundary convention
      if (primitive_only && gcd(gcd(a, b), c) != 1) continue;
      out.push_back(QuadForm{a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// h(d): number of classes of primitive positive definite forms of
// discriminant d, i.e. the order of Pic(O_d).
inline Int class_number(const Int& d) { return Int(reduced_forms(d).size()); }

}  // namespace gzsm
