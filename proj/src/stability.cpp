#include "ellstab/stability.hpp"

#include "ellstab/errors.hpp"

namespace ellstab {

Rat vol_v(const StabParams& P, const SurfaceGeometry& g) {
  return Rat(2) * P.b - Rat(g.e);
}

Rat vol_u(const StabParams& P, const SurfaceGeometry& g) {
  return Rat(2) * P.a + Rat(g.e);
}

bool positive_volume(const StabParams& P, const SurfaceGeometry& g) {
  return vol_v(P, g) > 0;
}

bool is_ample(const StabParams& P, const SurfaceGeometry& g) {
  return P.b > Rat(g.e);
}

ChargeValue central_charge(const ChernTable& v, const StabParams& P,
                           const SurfaceGeometry& g) {
  TwistedChern t = twist(v, b_field(P), g);
  ChargeValue z;
  z.re = -t.ch2 + P.a * Rat(v.n);
  z.im = t.thch1 + P.b * t.fch1;
  return z;
}

Rat cross(const ChargeValue& z1, const ChargeValue& z2) {
  return z1.re * z2.im - z1.im * z2.re;
}

PhaseOrder phase_cmp(const ChargeValue& z1, const ChargeValue& z2) {
  auto in_domain = [](const ChargeValue& z) {
    return z.im > 0 || (z.im == 0 && z.re < 0);
  };
  require(in_domain(z1) && in_domain(z2),
          "phase_cmp needs values in the upper half-plane, with im = 0 "
          "forcing re < 0");
  Rat x = cross(z1, z2);
  if (x > 0) return PhaseOrder::Less;
  if (x < 0) return PhaseOrder::Greater;
  return PhaseOrder::Equal;
}

Slope slope_mu(const ChernTable& v, const Divisor& B, const Divisor& omega,
               const SurfaceGeometry& g) {
  if (v.n == 0) return Slope::inf();
  Rat num = pairing(omega, c1_of(v, g) - Rat(v.n) * B, g);
  return Slope::finite(num / Rat(v.n));
}

Rat discriminant(const ChernTable& v, const SurfaceGeometry& g) {
  // c1^2 - 2 n s = 2 d c + e d^2 - 2 n s under the rank-2 reconstruction
  return Rat(2 * v.d) * v.c + Rat(g.e * v.d * v.d) - Rat(2 * v.n) * v.s;
}

Rat discriminant_e(const ChernTable& v, const SurfaceGeometry& g) {
  return discriminant(v, g) - Rat(g.e * v.n * v.n);
}

Rat discriminant_bw(const ChernTable& v, const Divisor& B,
                    const Divisor& omega, const SurfaceGeometry& g) {
  TwistedChern t = twist(v, B, g);
  Rat im = pairing(omega, c1_of(v, g) - Rat(v.n) * B, g);
  return sq(im) - Rat(2) * self_intersection(omega, g) * t.ch0 * t.ch2;
}

bool strong_bg_ok(const ChernTable& v, const Divisor& B,
                  const SurfaceGeometry& g) {
  require(g.is_k3(), "the strong Bogomolov-Gieseker test needs e = 2");
  require(v.n > 0, "the strong Bogomolov-Gieseker test needs ch0 > 0");
  TwistedChern t = twist(v, B, g);
  Divisor c1b = c1_of(v, g) - Rat(v.n) * B;
  Rat rhs = self_intersection(c1b, g) / Rat(2 * v.n) - Rat(v.n) +
            make_rat(Int(1), v.n);
  return t.ch2 <= rhs;
}

Int integrality_constant(const Rat& b, const SurfaceGeometry& g) {
  Rat volume = Rat(2) * b - Rat(g.e);
  require(volume > 0, "integrality constant needs 2b - e > 0");
  // The values of w.ch1 on integral c1 are alpha (b - e) + beta, a group
  // (1/y) Z with y the reduced denominator of b - e.  Minimal n with
  // n (u/w) / y in Z for 2b - e = u/w is y w / gcd(u, y).
  Rat t = b - Rat(g.e);
  Int y = t.get_den();
  Int u = volume.get_num();
  Int w = volume.get_den();
  Int gg;
  mpz_gcd(gg.get_mpz_t(), u.get_mpz_t(), y.get_mpz_t());
  return y * w / gg;
}

Rat gieseker_bound(const ChernTable& v, const Divisor& B, const Rat& b,
                   const SurfaceGeometry& g) {
  require(v.n > 0, "gieseker bound needs ch0 > 0");
  Divisor omega = omega_of(b);
  Rat im = pairing(omega, c1_of(v, g) - Rat(v.n) * B, g);
  require(im > 0, "gieseker bound needs w.ch1^B > 0");
  Int n_int = integrality_constant(b, g);
  Rat mu = im / Rat(v.n);
  return Rat(n_int) / 2 * mu * discriminant_bw(v, B, omega, g);
}

Rat onedim_bound(const ChernTable& v, const Divisor& B, const Rat& b,
                 const SurfaceGeometry& g) {
  require(v.n == 0, "one-dimensional bound needs ch0 = 0");
  Divisor omega = omega_of(b);
  Rat im = pairing(omega, c1_of(v, g), g);
  require(im > 0, "one-dimensional bound needs w.c1 > 0");
  Rat volume = self_intersection(omega, g);
  require(volume > 0, "one-dimensional bound needs w^2 > 0");
  Rat first = sq(im) / (Rat(2) * volume);
  TwistedChern t = twist(v, B, g);
  return rat_max(first, first - t.ch2);
}

Rat zerofiber_bound(const ChernTable& v, const Rat& lambda, const Rat& b,
                    const SurfaceGeometry& g) {
  require(v.n > 0, "zero-fiber bound needs ch0 > 0");
  require(v.d >= 0, "zero-fiber bound needs f.ch1 >= 0");
  require(discriminant(v, g) >= 0, "zero-fiber bound needs Delta >= 0");
  Rat mu_f = make_rat(v.d, v.n);
  Divisor B{mu_f, lambda}; // kills the twisted fiber degree
  TwistedChern t = twist(v, B, g);
  ensure(t.fch1 == 0, "zero-fiber twist failed to kill the fiber degree");
  Rat x = t.thch1; // equals w.ch1^B(v) for every b
  require(x >= 0, "zero-fiber bound needs Theta.ch1^B >= 0");
  Int n_int = integrality_constant(b, g);
  Rat volume = Rat(2) * b - Rat(g.e);
  Rat first = Rat(n_int) * cube(x) / (Rat(2 * v.n) * volume);
  return rat_max(first, first - Rat(n_int) * t.ch2 * x);
}

Rat geometricity_bound(const Rat& p_bar, const Rat& b_bar,
                       const SurfaceGeometry& g) {
  require(b_bar > Rat(g.e), "geometricity bound needs bbar > e");
  Rat vbar = Rat(2) * b_bar - Rat(g.e);
  Rat base = Rat(1) / (Rat(2) * vbar);
  Rat bound = rat_max(base, base + p_bar);
  // Volume-coordinate presentation of the same threshold.
  Rat u_form = rat_max(Rat(1) / vbar + Rat(g.e),
                        Rat(1) / vbar + Rat(g.e) + Rat(2) * p_bar);
  ensure(Rat(2) * bound + Rat(g.e) == u_form,
         "geometricity bound disagrees between (a,b) and (U,V) forms");
  return bound;
}

LineBundleWall line_bundle_wall(const Divisor& L, const Rat& b_bar,
                                const SurfaceGeometry& g) {
  require(L.is_integral(), "line-bundle wall needs an integral divisor");
  Rat lf = L.alpha; // L.f
  require(lf > 0, "line-bundle wall needs L.f > 0");
  require(b_bar > Rat(g.e), "line-bundle wall needs bbar > e");
  Rat ltheta = pairing(L, theta_div(), g);
  Rat l2 = self_intersection(L, g);
  Rat half = l2 / 2;
  LineBundleWall out;
  out.wall_a =
      half - (ltheta + b_bar * lf) / (b_bar - Rat(g.e)) * (ltheta + g.half_e());
  out.has_wall = out.wall_a > 0;
  out.sup_bound = rat_max(half, half - lf * (ltheta + g.half_e()) + 1);
  return out;
}

} // namespace ellstab
