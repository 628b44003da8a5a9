#pragma once
// Genus theory of imaginary quadratic orders: the character vector Psi on
// Pic(O)/2Pic(O), its per-prime components Psi_p (evaluated as Hilbert
// symbols (d, n)_p when p does not divide the conductor), genus classes of
// arbitrary invertible ideals, norm-one residue classes modulo sqrt(d) O,
// and the rho-tilde counting function.

#include <set>
#include <utility>
#include <vector>

#include <gzsm/arith/symbols.hpp>
#include <gzsm/quadratic/ideal.hpp>

namespace gzsm {

// Number of components of the genus character vector: j = #{odd p | d}
// plus 0, 1, or 2 dyadic characters depending on d mod 32.
inline long genus_k(const Disc& D) {
  long j = 0;
  for (const Int& p : prime_divisors(abs(D.d)))
    if (p != 2) ++j;
  Int m16 = mod_floor(D.d, 16), m32 = mod_floor(D.d, 32);
  if (mod_floor(D.d, 4) == 1 || m16 == 4) return j;
  if (m16 == 8 || m16 == 12 || m32 == 16) return j + 1;
  return j + 2;  // d = 0 mod 32
}

inline int chi_m4(const Int& a) {
  if (divides(Int(2), a)) throw std::invalid_argument("chi_m4: even argument");
  return mod_floor(a, 4) == 1 ? 1 : -1;
}

inline int chi_8(const Int& a) {
  if (divides(Int(2), a)) throw std::invalid_argument("chi_8: even argument");
  unsigned long r = mod_floor(a, 8).get_ui();
  return (r == 1 || r == 7) ? 1 : -1;
}

enum class CharKind { kLegendre, kChiM4, kChi8, kChiM4Chi8 };

// One component of Psi.  `extended` marks the components Psi_p with p not
// dividing the conductor, which extend to all nonzero integers via the
// Hilbert symbol (d, n)_p.
struct GenusChar {
  CharKind kind;
  Int p;  // the odd prime of a Legendre component, or 2 for a dyadic one
  bool extended;
};

// Components of Psi in a fixed order: the odd primes dividing d ascending,
// then the dyadic component(s) selected by d mod 32.
inline std::vector<GenusChar> genus_components(const Disc& D) {
  std::vector<GenusChar> out;
  for (const Int& p : prime_divisors(abs(D.d)))
    if (p != 2) out.push_back(GenusChar{CharKind::kLegendre, p, !divides(p, D.f)});
  Int m16 = mod_floor(D.d, 16), m32 = mod_floor(D.d, 32);
  // In the first three cases v_2(d) <= 3, which forces 2 to not divide f,
  // so the dyadic component is a genuine Psi_2; in the last two 2 | f.
  if (m16 == 12) out.push_back(GenusChar{CharKind::kChiM4, 2, true});
  else if (m32 == 8) out.push_back(GenusChar{CharKind::kChi8, 2, true});
  else if (m32 == 24) out.push_back(GenusChar{CharKind::kChiM4Chi8, 2, true});
  else if (m32 == 16) out.push_back(GenusChar{CharKind::kChiM4, 2, false});
  else if (m32 == 0) {
    out.push_back(GenusChar{CharKind::kChiM4, 2, false});
    out.push_back(GenusChar{CharKind::kChi8, 2, false});
  }
  return out;
}

// Evaluate one component at n.  Extended components use (d, n)_p, defined
// for every nonzero n; the rest require n in the character's domain.
inline int eval_genus_char(const Disc& D, const GenusChar& ch, const Int& n) {
  if (n == 0) throw std::invalid_argument("eval_genus_char: n = 0");
  if (ch.extended) return hilbert_symbol(D.d, n, ch.p);
  switch (ch.kind) {
    case CharKind::kLegendre: {
      int r = kronecker(n, ch.p);
      if (r == 0) throw std::invalid_argument("eval_genus_char: n not coprime to p");
      return r;
    }
    case CharKind::kChiM4: return chi_m4(n);
    case CharKind::kChi8: return chi_8(n);
    case CharKind::kChiM4Chi8: return chi_m4(n) * chi_8(n);
  }
  throw std::logic_error("eval_genus_char: unreachable");
}

// Psi_p(n) = (d, n)_p for p | d, p not dividing f.
inline int psi_p(const Disc& D, const Int& p, const Int& n) {
  if (!divides(p, D.d) || divides(p, D.f))
    throw std::invalid_argument("psi_p: need p | d with p coprime to the conductor");
  return hilbert_symbol(D.d, n, p);
}

// Character-table evaluation of Psi_p, including the extension
// Psi_p(p) = (d* | p) with d* the complementary discriminant factor -- an
// independent oracle for psi_p.  (With the operands the other way around
// the extension contradicts both the Hilbert symbol and the square-class
// test, e.g. at d = -84, p = 3, where p3 * p19 is principal.)
inline int psi_p_character(const Disc& D, const Int& p, const Int& n) {
  if (!divides(p, D.d) || divides(p, D.f) || n == 0)
    throw std::invalid_argument("psi_p_character: bad arguments");
  long a = valuation(n, p);
  Int u = remove_factor(n, p);
  int base;
  Int d_star;
  if (p != 2) {
    int r = kronecker(u, p);
    base = r;
    d_star = divide_exact(D.d, mod_floor(p, 4) == 1 ? p : -p);
  } else {
    Int m16 = mod_floor(D.d, 16), m32 = mod_floor(D.d, 32);
    if (m16 == 12) {
      base = chi_m4(u);
      d_star = divide_exact(-D.d, Int(4));
    } else if (m32 == 8) {
      base = chi_8(u);
      d_star = divide_exact(D.d, Int(8));
    } else if (m32 == 24) {
      base = chi_m4(u) * chi_8(u);
      d_star = divide_exact(-D.d, Int(8));
    } else {
      throw std::logic_error("psi_p_character: no dyadic component");
    }
  }
  if (a % 2 == 0) return base;
  return kronecker(d_star, p) * base;
}

// The full vector Psi(n), one entry per component of genus_components.
inline std::vector<int> psi_vector(const Disc& D, const Int& n) {
  std::vector<int> out;
  for (const GenusChar& ch : genus_components(D)) out.push_back(eval_genus_char(D, ch, n));
  return out;
}

inline bool is_in_ker_psi(const Disc& D, const Int& n) {
  for (const GenusChar& ch : genus_components(D))
    if (eval_genus_char(D, ch, n) != 1) return false;
  return true;
}

// Does the GenusChar correspond to Psi_ell?
inline bool is_component_at(const GenusChar& ch, const Int& ell) {
  return ell == 2 ? ch.p == 2 : (ch.kind == CharKind::kLegendre && ch.p == ell);
}

// Kernel test for the projection of Psi away from the Psi_ell component.
inline bool is_in_ker_psi_hat(const Disc& D, const Int& ell, const Int& n) {
  if (!divides(ell, D.d) || divides(ell, D.f))
    throw std::invalid_argument("is_in_ker_psi_hat: need ell | d, ell coprime to f");
  bool found = false;
  for (const GenusChar& ch : genus_components(D)) {
    if (is_component_at(ch, ell)) {
      found = true;
      continue;
    }
    if (eval_genus_char(D, ch, n) != 1) return false;
  }
  // ell | d with ell coprime to f always owns a component.
  if (!found) throw std::logic_error("is_in_ker_psi_hat: missing component for ell");
  return true;
}

// Product of the extended components Psi_p(n), i.e. of the Hilbert symbols
// (d, n)_p over the primes p | d away from the conductor.  By reciprocity
// this equals the product of (d, n)_v over all remaining places (infinity,
// a non-extended dyadic place, primes of n away from d), which is how the
// tests pin it down.  Norms of principal-genus ideals land in its kernel
// (they kill the full Psi vector); a general ideal norm need not.
inline int psi_product(const Disc& D, const Int& n) {
  int r = 1;
  for (const GenusChar& ch : genus_components(D))
    if (ch.extended) r *= eval_genus_char(D, ch, n);
  return r;
}

// For a p-primary invertible ideal A at a conductor prime p: an ideal with
// norm coprime to f in the INVERSE Picard class (alpha O = A * tilde(A)
// forces [tilde(A)] = [A]^{-1}; that is the same class modulo squares, so
// genus computations may use it interchangeably).  It is built from an
// element alpha with alpha O_p = A O_p and gcd(N(alpha), f) supported at p,
// by stripping the p-part of alpha O.  alpha is found by an expanding-box
// search over x + y omega ordered by (max(|x|, |y|), y, x).
inline IdealLat tilde_rep(const IdealLat& A, const Int& p) {
  long k = valuation(A.norm(), p);
  if (A.norm() != pow_int(p, static_cast<unsigned long>(k)) || !is_invertible(A))
    throw std::invalid_argument("tilde_rep: need an invertible p-primary ideal");
  Int pk = A.norm();
  Int away_f = remove_factor(A.D.f, p);
  Int cap = 64 + 8 * pk * A.D.f * A.D.f;
  for (Int B = 1; B <= cap; ++B) {
    for (Int y = -B; y <= B; ++y) {
      for (Int x = -B; x <= B; ++x) {
        if (abs(x) != B && abs(y) != B) continue;  // box boundary only
        Elt al{x, y};
        Int N = elt_norm(A.D, al);
        if (N == 0) continue;
        if (gcd(remove_factor(N, p), away_f) != 1) continue;
        IdealLat aO = principal_ideal(A.D, al);
        if (!(primary_part(aO, p) == A)) continue;
        return preimage_scale(aO, pow_int(p, static_cast<unsigned long>(valuation(N, p))));
      }
    }
  }
  throw std::runtime_error("tilde_rep: search box exhausted");
}

// Genus class of an arbitrary invertible integral ideal: replace each
// primary part at a conductor prime by its tilde representative, then
// evaluate Psi at the resulting conductor-coprime norm.
inline std::vector<int> ideal_genus(const IdealLat& A) {
  if (!is_invertible(A)) throw std::invalid_argument("ideal_genus: ideal not invertible");
  Int coprime_norm = 1;
  for (const auto& [p, Ap] : primary_decompose(A))
    coprime_norm *= divides(p, A.D.f) ? tilde_rep(Ap, p).norm() : Ap.norm();
  return psi_vector(A.D, coprime_norm);
}

inline bool has_trivial_genus(const IdealLat& A) {
  for (int v : ideal_genus(A))
    if (v != 1) return false;
  return true;
}

// Residue classes gamma mod sqrt(d) O with N(gamma) = 1 mod d.
inline std::vector<Elt> norm_one_classes(const Disc& D) {
  IdealLat diff = different_ideal(D);
  std::vector<Elt> out;
  for (const Elt& g : residues(diff))
    if (divides(D.d, elt_norm(D, g) - 1)) out.push_back(g);
  return out;
}

// The same count after identifying gamma with -gamma.
inline long norm_one_count_mod_sign(const Disc& D) {
  IdealLat diff = different_ideal(D);
  std::set<std::pair<Int, Int>> seen;
  for (const Elt& g : norm_one_classes(D)) {
    Elt m = residue_rep(diff, Elt{-g.x, -g.y});
    Elt key = std::min(g, m, [](const Elt& a, const Elt& b) {
      return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    seen.emplace(key.x, key.y);
  }
  return static_cast<long>(seen.size());
}

// Dyadic factor of rho-tilde.
inline Int rho_tilde_2(const Disc& D, const Int& s, const Int& t) {
  Int r = 1;
  long v2d = valuation(D.d, 2);
  if ((mod_floor(D.d, 16) == 12 && mod_floor(s - t, 2) == 0) ||
      (divides(Int(8), D.d) && valuation_or_infinity(s, 2) >= v2d - 2))
    r *= 2;
  if (divides(Int(32), D.d) && divides(Int(4), s - 2 * t)) r *= 2;
  return r;
}

// rho~_d(s, t) = rho~^(2) * 2^#{p odd, p | d : v_p(s) >= v_p(d)}, with
// v_p(0) treated as infinity.
inline Int rho_tilde(const Disc& D, const Int& s, const Int& t) {
  Int r = rho_tilde_2(D, s, t);
  for (const Int& p : prime_divisors(abs(D.d)))
    if (p != 2 && valuation_or_infinity(s, p) >= valuation(D.d, p)) r *= 2;
  return r;
}

}  // namespace gzsm
