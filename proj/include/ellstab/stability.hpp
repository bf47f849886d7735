#pragma once

#include "ellstab/lattice.hpp"

namespace ellstab {

// Parameters of the central charge -ch2^B + a ch0^B + i w ch1^B with
// B = p Theta + q f and w = Theta + b f.  Volume coordinates V = 2b - e and
// U = 2a + e are derived, never stored.
struct StabParams {
  Rat a;
  Rat p;
  Rat q;
  Rat b;
};

Rat vol_v(const StabParams& P, const SurfaceGeometry& g); // w^2 = 2b - e
Rat vol_u(const StabParams& P, const SurfaceGeometry& g); // 2a + e
bool positive_volume(const StabParams& P, const SurfaceGeometry& g);
bool is_ample(const StabParams& P, const SurfaceGeometry& g); // b > e

inline Divisor b_field(const StabParams& P) { return {P.p, P.q}; }
inline Divisor omega_div(const StabParams& P) { return {Rat(1), P.b}; }
inline Divisor omega_of(const Rat& b) { return {Rat(1), b}; }

struct ChargeValue {
  Rat re;
  Rat im;

  friend bool operator==(const ChargeValue& x, const ChargeValue& y) {
    return x.re == y.re && x.im == y.im;
  }
};

ChargeValue central_charge(const ChernTable& v, const StabParams& P,
                           const SurfaceGeometry& g);

// re1*im2 - im1*re2; positive exactly when z1 has the smaller phase.
Rat cross(const ChargeValue& z1, const ChargeValue& z2);

enum class PhaseOrder { Less, Equal, Greater };

// Compares phases in (0,1].  Both values must lie in the closed upper half
// plane minus the origin, with im = 0 forcing re < 0 (phase 1).
PhaseOrder phase_cmp(const ChargeValue& z1, const ChargeValue& z2);

// Slope w.ch1^B / ch0, with +infinity for rank zero (ordered above all
// rationals).
struct Slope {
  bool infinite = false;
  Rat value;

  static Slope inf() { return Slope{true, Rat(0)}; }
  static Slope finite(Rat v) { return Slope{false, std::move(v)}; }

  friend bool operator==(const Slope& x, const Slope& y) {
    if (x.infinite || y.infinite) return x.infinite == y.infinite;
    return x.value == y.value;
  }
  friend bool operator<(const Slope& x, const Slope& y) {
    if (x.infinite) return false;
    if (y.infinite) return true;
    return x.value < y.value;
  }
};

Slope slope_mu(const ChernTable& v, const Divisor& B, const Divisor& omega,
               const SurfaceGeometry& g);

// Discriminants: Delta = c1^2 - 2 n s, Delta_e = Delta - e n^2, and the
// (B, w)-twisted form (w ch1^B)^2 - 2 w^2 ch0 ch2^B.
Rat discriminant(const ChernTable& v, const SurfaceGeometry& g);
Rat discriminant_e(const ChernTable& v, const SurfaceGeometry& g);
Rat discriminant_bw(const ChernTable& v, const Divisor& B,
                    const Divisor& omega, const SurfaceGeometry& g);

// Sharper Bogomolov-Gieseker test on a K3 (e = 2) for positive rank:
// ch2^B <= (ch1^B)^2 / (2 ch0) - ch0 + 1/ch0.
bool strong_bg_ok(const ChernTable& v, const Divisor& B,
                  const SurfaceGeometry& g);

// Minimal positive n with n * x * (2b - e) integral for every value
// x = alpha (b - e) + beta of w.ch1 on integral classes.  Needs 2b - e > 0.
Int integrality_constant(const Rat& b, const SurfaceGeometry& g);

// Chamber bounds.  Each returns the exact rational threshold; the chamber
// statements hold strictly above it, which is the caller's inequality.

// (n/2) mu_{B,w}(v) Delta_{B,w}(v) for positive rank, w.ch1^B(v) > 0.
Rat gieseker_bound(const ChernTable& v, const Divisor& B, const Rat& b,
                   const SurfaceGeometry& g);

// max{(w c1)^2 / 2w^2, (w c1)^2 / 2w^2 - ch2^B} for rank zero, w.c1 > 0.
Rat onedim_bound(const ChernTable& v, const Divisor& B, const Rat& b,
                 const SurfaceGeometry& g);

// Fiber-degree-zero twist B = mu_f(v) Theta + lambda f; bound
// max{n x^3 / (2 ch0 w^2), same - n ch2^B x} with x = Theta.ch1^B(v).
Rat zerofiber_bound(const ChernTable& v, const Rat& lambda, const Rat& b,
                    const SurfaceGeometry& g);

// Threshold above which the transform of the vertical ray stays geometric:
// max{1/(2(2b - e)), 1/(2(2b - e)) + p}.  Needs b > e.
Rat geometricity_bound(const Rat& p_bar, const Rat& b_bar,
                       const SurfaceGeometry& g);

struct LineBundleWall {
  bool has_wall = false; // computed a > 0
  Rat wall_a;            // the a-value of the candidate wall (any sign)
  Rat sup_bound;         // max{L^2/2, L^2/2 - Lf (LTheta + e/2) + 1}
};

// Wall where L(-Theta) reaches the phase of the line bundle L, sampled at
// b_bar, together with the b-independent sup bound.  Needs L integral with
// L.f > 0 and b_bar > e.
LineBundleWall line_bundle_wall(const Divisor& L, const Rat& b_bar,
                                const SurfaceGeometry& g);

} // namespace ellstab
