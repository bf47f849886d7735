#pragma once

#include "ellstab/stability.hpp"

namespace ellstab {

struct Mat2 {
  Rat m00, m01, m10, m11; // row-major

  Rat det() const { return m00 * m11 - m01 * m10; }
  Mat2 inverse() const;

  ChargeValue apply(const ChargeValue& z) const {
    return {m00 * z.re + m01 * z.im, m10 * z.re + m11 * z.im};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.m00 == y.m00 && x.m01 == y.m01 && x.m10 == y.m10 &&
           x.m11 == y.m11;
  }
};

// Solution of Z_{a,B,w}(Phi(-)) = T Z_{abar,Bbar,wbar}(-).  T is always the
// forward intertwiner (-p, 1 + p pbar; -1, pbar); its inverse mediates the
// reverse direction.
struct TransportResult {
  StabParams barred;
  StabParams unbarred;
  Mat2 T;
  Rat u_bar, v_bar; // volume coordinates of the barred side
  Rat u, v;         // and of the unbarred side
  bool a_nonpositive = false;
};

// Closed-form solution for abar > 0, bbar >= e.  The volume identities
// V = Ubar + pbar^2 Vbar, U = Vbar - p^2 V, UV = Ubar Vbar are asserted.
// Outputs with a <= 0 are flagged, not rejected.
TransportResult forward_transport(const Rat& abar, const Rat& pbar,
                                  const Rat& qbar, const Rat& bbar,
                                  const SurfaceGeometry& g);

// Inverse direction; requires Vbar = U + p^2 V > 0.
TransportResult inverse_transport(const Rat& a, const Rat& p, const Rat& q,
                                  const Rat& b, const SurfaceGeometry& g);

struct ConstraintCheck {
  bool eq1 = false; // -bbar pbar + qbar = e/2 + (b - e) p + q
  bool eq2 = false; // abar + (bbar - e/2) pbar^2 = b - e
  bool eq3 = false; // bbar - e = a + (b - e/2) p^2
  bool eq4 = false; // (bbar - e) pbar + qbar = e/2 - b p + q

  bool all() const { return eq1 && eq2 && eq3 && eq4; }
};

ConstraintCheck check_constraints(const StabParams& barred,
                                  const StabParams& unbarred,
                                  const SurfaceGeometry& g);

// Verifies Z_{a,B,w}(Phi(v)) = T Z_{abar,Bbar,wbar}(v) on the four lattice
// basis tables; linearity extends the identity to the whole lattice.
bool intertwine_check(const TransportResult& res, const SurfaceGeometry& g);

// Boundary stability parameters built from the nef divisor Theta + 2f on an
// elliptic K3: lambda with k+1 < -2 lambda < k+2 and z > lambda^2.
struct TXParams {
  Rat lambda;
  Rat z;
  Int k;

  TXParams(Rat lambda_, Rat z_, Int k_); // validates the window and z
};

// Unique k for the window, when one exists.
std::optional<Int> tx_window_k(const Rat& lambda);

// Transport of the boundary parameters (abar, pbar, qbar, bbar) =
// (z - lambda^2, lambda, 0, 2) on e = 2; a lands in (-1 + 1/(z+1), 0).
TransportResult tx_transport(const TXParams& P);

// Parameter family with Bbar = (mu_f(v)/2) Theta + lambda f and
// Ubar = (mu_f/2)^2 Vbar, plus the thresholds under which the transported
// ray lies in the Gieseker chamber of the dual transform.
struct HalfSlopeFamily {
  Rat mu_f;
  Rat pbar, qbar;          // Bbar components
  TransportResult res;     // transport at the requested Vbar
  Rat lambda_threshold;    // positivity threshold for lambda
  bool lambda_ok = false;
  Rat twisted_fiber_degree; // f.ch1^{-B} of the dual transform; always 0
  Rat twisted_theta_degree; // Theta.ch1^{-B} of the dual transform
  Rat ch2_twisted;          // ch2^{-B} of the dual transform
  Int n_integrality;        // 8 ch0(v)^4, valid for every b in (1/4 ch0^2) Z
  Rat volume_rhs;           // right-hand side of the U - e bound
  Int vbar_min;             // least integral Vbar meeting volume + geometricity
};

HalfSlopeFamily half_slope_family(const ChernTable& v, const Rat& lambda,
                                  const Int& vbar, const SurfaceGeometry& g);

// Fiber-twist family Bbar = lambda f at fixed Ubar: the volume threshold
// 2 mu Delta + e that Vbar = U must exceed for the dual transform to be in
// its Gieseker chamber.
struct FriedmanThreshold {
  Rat mu;
  Rat delta;
  Rat vbar_threshold;
};

FriedmanThreshold friedman_threshold(const ChernTable& v, const Rat& lambda,
                                     const Int& ubar, const SurfaceGeometry& g);

// Fiber-degree-zero family Bbar = lambda f: the wall-free threshold a0, the
// volume Ubar = 2 max{a0, 1/2e} + e it induces, and the bbar threshold from
// the one-dimensional bound applied to the transform.
struct OneDimTransformBounds {
  Rat a0;
  Rat ubar;
  Rat theta_twisted;   // Theta.ch1^{Bbar}(v)
  Rat omega_ch1_image; // w.ch1 of the transform at Ubar
  Rat bbar_threshold;
};

OneDimTransformBounds one_dim_transform_bounds(const ChernTable& v,
                                               const Rat& lambda,
                                               const SurfaceGeometry& g);

} // namespace ellstab
