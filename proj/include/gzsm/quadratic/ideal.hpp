#pragma once
// Ideals of imaginary quadratic orders as two-dimensional Hermite normal
// form lattices (n, u, c): the sublattice Z n + Z (u + c omega) of
// O_d = Z + Z omega, with omega = (d + sqrt(d))/2 (so Tr omega = d,
// N omega = (d^2 - d)/4).  Stability under multiplication by omega forces
// c | n and c | u; with 0 <= u < n the triple is a canonical form, so
// lattice equality is triple equality.

#include <algorithm>
#include <vector>

#include <gzsm/quadratic/forms.hpp>

namespace gzsm {

// The element x + y omega of O_d (or K, with rational scaling handled by
// callers).
struct Elt {
  Int x, y;
  bool operator==(const Elt& o) const { return x == o.x && y == o.y; }
};

inline Elt elt_conj(const Disc& D, const Elt& a) { return Elt{a.x + a.y * D.d, -a.y}; }

// omega^2 = d * omega - (d^2 - d)/4.
inline Elt elt_mul(const Disc& D, const Elt& a, const Elt& b) {
  Int nw = omega_norm(D);
  return Elt{a.x * b.x - a.y * b.y * nw, a.x * b.y + a.y * b.x + a.y * b.y * D.d};
}

inline Int elt_norm(const Disc& D, const Elt& a) {
  return a.x * a.x + a.x * a.y * D.d + a.y * a.y * omega_norm(D);
}

inline Int elt_trace(const Disc& D, const Elt& a) { return 2 * a.x + a.y * D.d; }

struct IdealLat {
  Disc D;
  Int n, u, c;

  Int norm() const { return n * c; }
  bool operator==(const IdealLat& o) const {
    return D == o.D && n == o.n && u == o.u && c == o.c;
  }
  bool operator<(const IdealLat& o) const {  // for deterministic orderings
    if (n != o.n) return n < o.n;
    if (c != o.c) return c < o.c;
    return u < o.u;
  }
};

inline bool lat_contains(const IdealLat& L, const Elt& a) {
  if (!divides(L.c, a.y)) return false;
  return divides(L.n, a.x - divide_exact(a.y, L.c) * L.u);
}

// Lattice inclusion B <= L: it suffices to test the two basis vectors.
inline bool lat_contains(const IdealLat& L, const IdealLat& B) {
  return lat_contains(L, Elt{B.n, 0}) && lat_contains(L, Elt{B.u, B.c});
}

inline bool is_omega_stable(const IdealLat& L) {
  Elt w{0, 1};
  return lat_contains(L, elt_mul(L.D, w, Elt{L.n, 0})) &&
         lat_contains(L, elt_mul(L.D, w, Elt{L.u, L.c}));
}

// HNF of the lattice spanned by the given elements.  Callers only pass
// omega-stable spans (ideals); this is asserted, and it is what guarantees
// c | n and c | u.
inline IdealLat lat_from_rows(const Disc& D, const std::vector<Elt>& rows) {
  // Accumulate an element (X, c) with c = gcd of all y-coordinates.
  Int X = 0, c = 0;
  for (const Elt& r : rows) {
    if (r.y == 0) continue;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(),
               r.y.get_mpz_t());
    X = s * X + t * r.x;
    c = g;
  }
  if (c == 0) throw std::invalid_argument("lat_from_rows: span has rank < 2");
  // Subtracting the right multiple of (X, c) sends each row to y = 0; these
  // differences generate the y = 0 sublattice.
  Int n = 0;
  for (const Elt& r : rows) n = gcd(n, r.x - divide_exact(r.y, c) * X);
  if (n == 0) throw std::invalid_argument("lat_from_rows: span has rank < 2");
  n = abs(n);
  IdealLat L{D, n, mod_floor(X, n), c};
  if (!is_omega_stable(L)) throw std::logic_error("lat_from_rows: span is not an ideal");
  return L;
}

// Validating direct constructor for an already-canonical triple.
inline IdealLat make_ideal(const Disc& D, const Int& n, const Int& u, const Int& c) {
  IdealLat L{D, n, u, c};
  if (n <= 0 || c <= 0 || u < 0 || u >= n || !divides(c, n) || !divides(c, u) ||
      !is_omega_stable(L))
    throw std::invalid_argument("make_ideal: not a canonical ideal triple");
  return L;
}

inline IdealLat whole_ring(const Disc& D) { return IdealLat{D, 1, 0, 1}; }

inline IdealLat principal_ideal(const Disc& D, const Elt& a) {
  return lat_from_rows(D, {a, elt_mul(D, Elt{0, 1}, a)});
}

// The different ideal sqrt(d) O, generated by sqrt(d) = 2 omega - d.
inline IdealLat different_ideal(const Disc& D) {
  return principal_ideal(D, Elt{-D.d, 2});
}

inline IdealLat ideal_mul(const IdealLat& A, const IdealLat& B) {
  if (!(A.D == B.D)) throw std::invalid_argument("ideal_mul: mismatched orders");
  const Elt ea{A.n, 0}, eb{A.u, A.c}, fa{B.n, 0}, fb{B.u, B.c};
  // Products of Z-bases span A*B as a lattice: omega-multiples of each
  // product stay inside the span because A itself is omega-stable.
  return lat_from_rows(A.D, {elt_mul(A.D, ea, fa), elt_mul(A.D, ea, fb),
                             elt_mul(A.D, eb, fa), elt_mul(A.D, eb, fb)});
}

inline IdealLat ideal_pow(const IdealLat& A, long k) {
  if (k < 0) throw std::invalid_argument("ideal_pow: negative exponent");
  IdealLat r = whole_ring(A.D);
  for (long i = 0; i < k; ++i) r = ideal_mul(r, A);
  return r;
}

inline IdealLat ideal_conj(const IdealLat& A) {
  return lat_from_rows(A.D, {elt_conj(A.D, Elt{A.n, 0}), elt_conj(A.D, Elt{A.u, A.c})});
}

inline IdealLat ideal_sum(const IdealLat& A, const IdealLat& B) {
  if (!(A.D == B.D)) throw std::invalid_argument("ideal_sum: mismatched orders");
  return lat_from_rows(A.D, {Elt{A.n, 0}, Elt{A.u, A.c}, Elt{B.n, 0}, Elt{B.u, B.c}});
}

inline IdealLat ideal_scale(const IdealLat& A, const Int& t) {
  if (t == 0) throw std::invalid_argument("ideal_scale: zero scalar");
  Int s = abs(t);
  return IdealLat{A.D, s * A.n, s * A.u, s * A.c};
}

// All ideals of norm N (invertible or not), in a deterministic order.
// With c^2 | N, n = N/c, u = c u', the triple is an ideal iff
// (n/c) | N(u' + omega).
inline std::vector<IdealLat> ideals_of_norm(const Disc& D, const Int& N) {
  if (N <= 0) throw std::invalid_argument("ideals_of_norm: need N >= 1");
  std::vector<IdealLat> out;
  for (Int c = 1; c * c <= N; ++c) {
    if (!divides(c * c, N)) continue;
    Int n = divide_exact(N, c);
    Int a = divide_exact(n, c);
    for (Int up = 0; up < a; ++up)
      if (divides(a, elt_norm(D, Elt{up, 1}))) out.push_back(IdealLat{D, n, c * up, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Content of the quadratic form attached to the primitive part of A.  The
// multiplier ring {x in K : x A <= A} is the order of discriminant d/g^2;
// A is invertible as an O_d-ideal iff that ring is O_d itself, i.e. g = 1.
// (The tests verify the multiplier ring directly by rational stability
// checks rather than trusting this reduction.)
inline Int multiplier_content(const IdealLat& A) {
  Int a = divide_exact(A.n, A.c);
  Int up = divide_exact(A.u, A.c);
  Int C = divide_exact(elt_norm(A.D, Elt{up, 1}), a);
  return gcd(gcd(a, 2 * up + A.D.d), C);
}

inline Int multiplier_disc(const IdealLat& A) {
  Int g = multiplier_content(A);
  return divide_exact(A.D.d, g * g);
}

inline bool is_invertible(const IdealLat& A) { return multiplier_content(A) == 1; }

// Form class of an invertible ideal: strip the content c, read off the form
// (a, 2u' + d, N(u' + omega)/a) of discriminant d, and Gauss-reduce.
inline QuadForm class_of(const IdealLat& A) {
  if (!is_invertible(A)) throw std::invalid_argument("class_of: ideal is not invertible");
  Int a = divide_exact(A.n, A.c);
  Int up = divide_exact(A.u, A.c);
  return reduce(QuadForm{a, 2 * up + A.D.d, divide_exact(elt_norm(A.D, Elt{up, 1}), a)});
}

// Primitive ideal (a, u, 1) with 2u + d = b (mod 2a); inverse to class_of up
// to reduction.
inline IdealLat ideal_of_form(const Disc& D, const QuadForm& F) {
  if (form_disc(F) != D.d || F.a <= 0)
    throw std::invalid_argument("ideal_of_form: wrong discriminant");
  if (gcd(gcd(F.a, F.b), F.c) != 1)
    throw std::invalid_argument("ideal_of_form: form is imprimitive");
  Int u = mod_floor(divide_exact(F.b - D.d, Int(2)), F.a);
  return make_ideal(D, F.a, u, 1);
}

inline QuadForm principal_form(const Disc& D) {
  Int b = mod_floor(D.d, 2);
  return QuadForm{1, b, divide_exact(b * b - D.d, Int(4))};
}

// Group law on form classes via ideal multiplication.
inline QuadForm compose(const Disc& D, const QuadForm& F, const QuadForm& G) {
  return class_of(ideal_mul(ideal_of_form(D, F), ideal_of_form(D, G)));
}

// The p-primary part a + p^{v_p(N(a))} O.
inline IdealLat primary_part(const IdealLat& A, const Int& p) {
  long k = valuation(A.norm(), p);
  return ideal_sum(A, ideal_scale(whole_ring(A.D), pow_int(p, static_cast<unsigned long>(k))));
}

// One primary part per prime dividing the norm, ordered by prime.
inline std::vector<std::pair<Int, IdealLat>> primary_decompose(const IdealLat& A) {
  std::vector<std::pair<Int, IdealLat>> out;
  for (const Int& p : prime_divisors(A.norm())) out.emplace_back(p, primary_part(A, p));
  return out;
}

// The unique ideal of norm p when p is not split (e.g. p | d).  Throws if
// the count differs from one.
inline IdealLat prime_over(const Disc& D, const Int& p) {
  auto v = ideals_of_norm(D, p);
  if (v.size() != 1) throw std::invalid_argument("prime_over: prime is not unique");
  return v[0];
}

// {z in O : M z in L} -- the part of L away from M.  For L integral and
// M = p^{v_p(N(L))} this strips the p-primary part.  The result is an
// omega-stable lattice because L is.
inline IdealLat preimage_scale(const IdealLat& L, const Int& M) {
  if (M <= 0) throw std::invalid_argument("preimage_scale: need M >= 1");
  // y must satisfy c | M y; then y = s c' with c' = c / gcd(c, M).
  Int g1 = gcd(L.c, M);
  Int cp = divide_exact(L.c, g1);
  // For y = s c' the x condition is M x = s (M/g1) u (mod n); solvable iff
  // g2 = gcd(M, n) divides s (M/g1) u, so s runs over multiples of t0.
  Int g2 = gcd(M, L.n);
  Int np = divide_exact(L.n, g2);
  Int step = divide_exact(M, g1) * L.u;
  Int t0 = divide_exact(g2, gcd(g2, step));
  Int yp = t0 * cp;
  // Solve (M/g2) x = t0 step / g2 (mod n/g2).
  Int x0 = 0;
  if (np != 1) {
    Int minv;
    Int mg = divide_exact(M, g2);
    if (mpz_invert(minv.get_mpz_t(), mg.get_mpz_t(), np.get_mpz_t()) == 0)
      throw std::logic_error("preimage_scale: non-invertible reduced scalar");
    x0 = mod_floor(divide_exact(t0 * step, g2) * minv, np);
  }
  IdealLat out{L.D, np, x0, yp};
  if (!is_omega_stable(out)) throw std::logic_error("preimage_scale: result not an ideal");
  return out;
}

// Canonical representative of a + L among the residues below.
inline Elt residue_rep(const IdealLat& L, const Elt& a) {
  Int yr = mod_floor(a.y, L.c);
  Int x1 = a.x - divide_exact(a.y - yr, L.c) * L.u;
  return Elt{mod_floor(x1, L.n), yr};
}

// Coset representatives of O/L: {x + y omega : 0 <= x < n, 0 <= y < c}.
inline std::vector<Elt> residues(const IdealLat& L) {
  std::vector<Elt> out;
  out.reserve(static_cast<size_t>(L.n.get_ui() * L.c.get_ui()));
  for (Int y = 0; y < L.c; ++y)
    for (Int x = 0; x < L.n; ++x) out.push_back(Elt{x, y});
  return out;
}

}  // namespace gzsm
