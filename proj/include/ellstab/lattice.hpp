#pragma once

#include "ellstab/rational.hpp"

namespace ellstab {

// Rank-2 intersection lattice spanned by the section Theta and the fiber f,
// with Theta^2 = -e, Theta.f = 1, f^2 = 0.
struct SurfaceGeometry {
  Int e;

  explicit SurfaceGeometry(Int e_);

  Rat half_e() const { return make_rat(e, 2); }
  bool is_k3() const { return e == 2; }
};

// alpha*Theta + beta*f with rational coefficients.
struct Divisor {
  Rat alpha;
  Rat beta;

  Divisor() = default;
  Divisor(Rat a, Rat b) : alpha(std::move(a)), beta(std::move(b)) {}

  bool is_zero() const { return alpha == 0 && beta == 0; }
  bool is_integral() const { return is_integer(alpha) && is_integer(beta); }

  friend Divisor operator+(const Divisor& x, const Divisor& y) {
    return {x.alpha + y.alpha, x.beta + y.beta};
  }
  friend Divisor operator-(const Divisor& x, const Divisor& y) {
    return {x.alpha - y.alpha, x.beta - y.beta};
  }
  friend Divisor operator-(const Divisor& x) { return {-x.alpha, -x.beta}; }
  friend Divisor operator*(const Rat& t, const Divisor& x) {
    return {t * x.alpha, t * x.beta};
  }
  friend bool operator==(const Divisor& x, const Divisor& y) {
    return x.alpha == y.alpha && x.beta == y.beta;
  }
};

inline Divisor theta_div() { return {Rat(1), Rat(0)}; }
inline Divisor fiber_div() { return {Rat(0), Rat(1)}; }

// Intersection pairing: D1.D2 = -e a1 a2 + a1 b2 + a2 b1.
Rat pairing(const Divisor& d1, const Divisor& d2, const SurfaceGeometry& g);
Rat self_intersection(const Divisor& d, const SurfaceGeometry& g);

// The character table (ch0, f.ch1, Theta.ch1, ch2) of a class.  Tables of
// actual objects live in Z + Z + Z + (1/2)Z with integral Theta.ch1; the
// transform actions close up only over half-integral Theta.ch1, so the c
// slot admits (1/2)Z as well.
struct ChernTable {
  Int n; // ch0
  Int d; // f.ch1
  Rat c; // Theta.ch1, 2c integral
  Rat s; // ch2, 2s integral

  ChernTable(Int n_, Int d_, Rat c_, Rat s_);
  ChernTable(Int n_, Int d_, Int c_, Rat s_)
      : ChernTable(std::move(n_), std::move(d_), Rat(c_), std::move(s_)) {}
  ChernTable(long n_, long d_, long c_, Rat s_)
      : ChernTable(Int(n_), Int(d_), Rat(c_), std::move(s_)) {}
  ChernTable(long n_, long d_, long c_, long s_)
      : ChernTable(Int(n_), Int(d_), Rat(c_), Rat(s_)) {}

  friend bool operator==(const ChernTable& x, const ChernTable& y) {
    return x.n == y.n && x.d == y.d && x.c == y.c && x.s == y.s;
  }
  friend ChernTable operator-(const ChernTable& x) {
    return {-x.n, -x.d, -x.c, -x.s};
  }
  friend ChernTable operator+(const ChernTable& x, const ChernTable& y) {
    return {x.n + y.n, x.d + y.d, x.c + y.c, x.s + y.s};
  }
  friend ChernTable operator-(const ChernTable& x, const ChernTable& y) {
    return {x.n - y.n, x.d - y.d, x.c - y.c, x.s - y.s};
  }
};

// B-twisted character; entries are rational once a twist is applied.
struct TwistedChern {
  Rat ch0;
  Rat fch1;
  Rat thch1;
  Rat ch2;
};

// Holds for classes of actual objects under the rank-2 reconstruction:
// c is an integer and s - d*c - (e/2) d^2 is an integer.  Checkable
// predicate, not a constructor constraint; intermediate classes
// (differences, twists, transforms) need the full lattice.
bool geometric_integrality(const ChernTable& v, const SurfaceGeometry& g);

// c1 = d*Theta + (c + e*d)*f, the unique divisor with f.c1 = d, Theta.c1 = c.
Divisor c1_of(const ChernTable& v, const SurfaceGeometry& g);

TwistedChern twist(const ChernTable& v, const Divisor& B,
                   const SurfaceGeometry& g);

// Lattice actions of the relative Fourier-Mukai transforms and their friends.
ChernTable phi(const ChernTable& v, const SurfaceGeometry& g);
ChernTable phihat(const ChernTable& v, const SurfaceGeometry& g);
ChernTable shift1(const ChernTable& v);                          // [1]
ChernTable dual_d(const ChernTable& v);                          // RHom(-,O)[1]
ChernTable tensor(const ChernTable& v, const Divisor& D,
                  const SurfaceGeometry& g);                     // - (x) O(D)
ChernTable upsilon(const ChernTable& v, const Int& k,
                   const SurfaceGeometry& g);                    // - (x) O(-k Theta)

// Table of Phi(v) twisted by [1] and the derived dual, i.e. the class the
// dual-transform arguments act on.
ChernTable phi_dual(const ChernTable& v, const SurfaceGeometry& g);

// Closed form (r, d, c - m(s + e r) - (e/2) d m^2, s) with n = m d + r.
// Always cross-checked against the five-arrow composition; a mismatch is an
// implementation bug and raises internal_error.
ChernTable psi(const ChernTable& v, const Int& m, const SurfaceGeometry& g);

// The composition Phi[1], dual, (x)O(-m Theta), Phi[1], dual.  The oracle
// side of psi; exposed for tests and the CLI --verify path.
ChernTable psi_via_diagram(const ChernTable& v, const Int& m,
                           const SurfaceGeometry& g);

} // namespace ellstab
