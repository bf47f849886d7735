#include "ellstab/transport.hpp"

#include "ellstab/errors.hpp"

namespace ellstab {

Mat2 Mat2::inverse() const {
  Rat dt = det();
  ensure(dt != 0, "singular 2x2 matrix");
  return {m11 / dt, -m01 / dt, -m10 / dt, m00 / dt};
}

namespace {

Mat2 intertwiner(const Rat& p, const Rat& pbar) {
  return {-p, Rat(1) + p * pbar, Rat(-1), pbar};
}

TransportResult assemble(StabParams barred, StabParams unbarred,
                         const SurfaceGeometry& g) {
  TransportResult res;
  res.barred = std::move(barred);
  res.unbarred = std::move(unbarred);
  res.T = intertwiner(res.unbarred.p, res.barred.p);
  res.u_bar = vol_u(res.barred, g);
  res.v_bar = vol_v(res.barred, g);
  res.u = vol_u(res.unbarred, g);
  res.v = vol_v(res.unbarred, g);
  res.a_nonpositive = res.unbarred.a <= 0;

  // The solution is overdetermined; every presentation must agree exactly.
  ensure(res.T.det() == 1, "transport matrix must have determinant 1");
  ensure(res.v == res.u_bar + sq(res.barred.p) * res.v_bar,
         "volume identity V = Ubar + pbar^2 Vbar failed");
  ensure(res.u == res.v_bar - sq(res.unbarred.p) * res.v,
         "volume identity U = Vbar - p^2 V failed");
  ensure(res.u * res.v == res.u_bar * res.v_bar,
         "volume product identity UV = Ubar Vbar failed");
  ensure(check_constraints(res.barred, res.unbarred, g).all(),
         "transport output violates the constraint equations");
  return res;
}

} // namespace

TransportResult forward_transport(const Rat& abar, const Rat& pbar,
                                  const Rat& qbar, const Rat& bbar,
                                  const SurfaceGeometry& g) {
  require(abar > 0, "forward transport needs abar > 0");
  require(bbar >= Rat(g.e), "forward transport needs bbar >= e");
  Rat e(g.e);
  Rat b = (abar + e) + sq(pbar) * (bbar - e / 2);
  Rat v = Rat(2) * b - e;
  Rat vbar = Rat(2) * bbar - e;
  Rat p = -pbar * vbar / v;
  Rat q = qbar + e / 2 * (p - pbar - 1);
  Rat a = (bbar - e) - sq(p) * (b - e / 2);
  ensure(b > e, "forward transport must land at b > e");
  return assemble({abar, pbar, qbar, bbar}, {a, p, q, b}, g);
}

TransportResult inverse_transport(const Rat& a, const Rat& p, const Rat& q,
                                  const Rat& b, const SurfaceGeometry& g) {
  Rat e(g.e);
  Rat u = Rat(2) * a + e;
  Rat v = Rat(2) * b - e;
  Rat vbar = u + sq(p) * v;
  require(vbar > 0, "inverse transport needs Vbar = U + p^2 V > 0");
  Rat pbar = -p * v / vbar;
  Rat qbar = q + e / 2 * (pbar - p + 1);
  Rat ubar = v - sq(pbar) * vbar;
  Rat abar = (ubar - e) / 2;
  Rat bbar = (vbar + e) / 2;
  TransportResult res = assemble({abar, pbar, qbar, bbar}, {a, p, q, b}, g);
  ensure(res.T.inverse() ==
             Mat2{res.barred.p, Rat(-1) - res.unbarred.p * res.barred.p,
                  Rat(1), -res.unbarred.p},
         "inverse transport matrix mismatch");
  return res;
}

ConstraintCheck check_constraints(const StabParams& barred,
                                  const StabParams& unbarred,
                                  const SurfaceGeometry& g) {
  Rat e(g.e);
  const Rat &abar = barred.a, &pbar = barred.p, &qbar = barred.q,
            &bbar = barred.b;
  const Rat &a = unbarred.a, &p = unbarred.p, &q = unbarred.q, &b = unbarred.b;
  ConstraintCheck chk;
  chk.eq1 = -bbar * pbar + qbar == e / 2 + (b - e) * p + q;
  chk.eq2 = abar + (bbar - e / 2) * sq(pbar) == b - e;
  chk.eq3 = bbar - e == a + (b - e / 2) * sq(p);
  chk.eq4 = (bbar - e) * pbar + qbar == e / 2 - b * p + q;
  return chk;
}

bool intertwine_check(const TransportResult& res, const SurfaceGeometry& g) {
  const ChernTable basis[4] = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (const ChernTable& v : basis) {
    ChargeValue lhs = central_charge(phi(v, g), res.unbarred, g);
    ChargeValue rhs = res.T.apply(central_charge(v, res.barred, g));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::optional<Int> tx_window_k(const Rat& lambda) {
  Rat x = Rat(-2) * lambda;
  if (is_integer(x)) return std::nullopt; // window is open on both sides
  return floor_rat(x) - 1;
}

TXParams::TXParams(Rat lambda_, Rat z_, Int k_)
    : lambda(std::move(lambda_)), z(std::move(z_)), k(std::move(k_)) {
  Rat x = Rat(-2) * lambda;
  require(Rat(k + 1) < x && x < Rat(k + 2),
          "boundary parameters need k+1 < -2*lambda < k+2 (so 2*lambda is "
          "not an integer)");
  require(z > sq(lambda), "boundary parameters need z > lambda^2");
}

TransportResult tx_transport(const TXParams& P) {
  SurfaceGeometry g{Int(2)};
  TransportResult res =
      forward_transport(P.z - sq(P.lambda), P.lambda, Rat(0), Rat(2), g);

  // Closed forms for this family; they follow algebraically from the
  // forward solution and pin the output exactly.
  Rat zp1 = P.z + 1;
  ensure(res.unbarred.b == P.z + 2, "boundary transport: b must be z + 2");
  ensure(res.unbarred.a == -sq(P.lambda) / zp1,
         "boundary transport: a must be -lambda^2/(z+1)");
  ensure(res.unbarred.p == -P.lambda / zp1,
         "boundary transport: p must be -lambda/(z+1)");
  ensure(res.unbarred.q == -P.lambda * (Rat(1) / zp1 + 1) - 1,
         "boundary transport: q mismatch");
  ensure(res.T == Mat2{P.lambda / zp1, Rat(1) - sq(P.lambda) / zp1, Rat(-1),
                       P.lambda},
         "boundary transport: matrix mismatch");
  ensure(res.unbarred.a > Rat(-1) + Rat(1) / zp1 && res.unbarred.a < 0,
         "boundary transport: a outside (-1 + 1/(z+1), 0)");
  return res;
}

namespace {

// Least integral vbar > 0 with pbar^2 vbar > 1/vbar + e + max(0, 2 pbar),
// i.e. the geometricity threshold along Ubar = pbar^2 Vbar.  The quadratic
// pbar^2 t^2 - (e + max(0, 2 pbar)) t - 1 has exactly one positive root, so
// the predicate is monotone on t >= 1.
Int min_vbar_geometric(const Rat& pbar, const SurfaceGeometry& g) {
  Rat coef = Rat(g.e) + rat_max(Rat(0), Rat(2) * pbar);
  auto ok = [&](const Int& t) {
    Rat tt(t);
    return sq(pbar) * sq(tt) - coef * tt - 1 > 0;
  };
  Int hi(1);
  while (!ok(hi)) hi *= 2;
  Int lo = hi / 2; // ok(hi), not ok(lo) unless hi == 1
  if (hi == 1) return hi;
  while (hi - lo > 1) {
    Int mid = (lo + hi) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

} // namespace

HalfSlopeFamily half_slope_family(const ChernTable& v, const Rat& lambda,
                                  const Int& vbar, const SurfaceGeometry& g) {
  require(v.n > 0, "half-slope family needs ch0 > 0");
  require(v.d > 0, "half-slope family needs f.ch1 > 0");
  require(discriminant_e(v, g) >= 0, "half-slope family needs Delta_e >= 0");
  require(vbar >= 1, "half-slope family needs a positive integral Vbar");

  HalfSlopeFamily fam;
  fam.mu_f = make_rat(v.d, v.n);
  fam.pbar = fam.mu_f / 2;
  fam.qbar = lambda;
  Rat e(g.e);

  // Positivity threshold for w.ch1^{-B} of the dual transform.
  fam.lambda_threshold =
      (v.s + e / 2 * (Rat(v.n) + Rat(v.d * v.d) / Rat(2 * v.n))) / Rat(v.d);
  fam.lambda_ok = lambda > fam.lambda_threshold;

  // B = p Theta + q f does not depend on Vbar along this family, so the
  // thresholds can be computed before the transport is run.
  Rat p_closed = Rat(-1) / fam.mu_f;
  Rat q_closed = lambda + e / 2 * (p_closed - fam.mu_f / 2 - 1);
  ChernTable w = phi_dual(v, g);
  Divisor minus_b{-p_closed, -q_closed};
  TwistedChern tw = twist(w, minus_b, g);
  fam.twisted_fiber_degree = tw.fch1;
  fam.twisted_theta_degree = tw.thch1;
  fam.ch2_twisted = tw.ch2;
  ensure(fam.twisted_fiber_degree == 0,
         "half-slope family: the dual transform must have twisted fiber "
         "degree zero");
  ensure(fam.twisted_theta_degree ==
             lambda * Rat(v.d) - v.s -
                 e / 2 * (Rat(v.n) + Rat(v.d * v.d) / Rat(2 * v.n)),
         "half-slope family: twisted degree disagrees with its closed form");

  // b lands in (1/(4 ch0^2)) Z for integral Vbar, so one integrality
  // constant covers the whole family.
  fam.n_integrality = 8 * v.n * v.n * v.n * v.n;

  Rat x3 = cube(fam.twisted_theta_degree);
  Rat first = Rat(2) * Rat(fam.n_integrality) * x3 * Rat(v.n * v.n) /
              Rat(v.d * v.d * v.d);
  fam.volume_rhs =
      rat_max(first, first - Rat(2) * Rat(fam.n_integrality) *
                                  fam.ch2_twisted * fam.twisted_theta_degree);

  // U - e > volume_rhs with U = Vbar/2, plus the geometricity threshold and
  // ampleness of the barred polarization.
  Int from_volume = floor_rat(Rat(2) * (fam.volume_rhs + e)) + 1;
  Int from_geometric = min_vbar_geometric(fam.pbar, g);
  Int from_ample = g.e + 1;
  fam.vbar_min = from_volume;
  if (from_geometric > fam.vbar_min) fam.vbar_min = from_geometric;
  if (from_ample > fam.vbar_min) fam.vbar_min = from_ample;

  Rat ubar = sq(fam.pbar) * Rat(vbar);
  Rat abar = (ubar - e) / 2;
  Rat bbar = (Rat(vbar) + e) / 2;
  require(abar > 0, "half-slope family needs pbar^2 Vbar > e; the least "
                    "admissible Vbar here is " +
                        int_str(fam.vbar_min));
  fam.res = forward_transport(abar, fam.pbar, fam.qbar, bbar, g);

  // Closed forms special to Ubar = pbar^2 Vbar; the transport must agree.
  ensure(fam.res.v == sq(fam.mu_f) / 2 * Rat(vbar),
         "half-slope family: V must be mu_f^2/2 Vbar");
  ensure(fam.res.unbarred.p == p_closed,
         "half-slope family: p must be -1/mu_f");
  ensure(fam.res.unbarred.q == q_closed, "half-slope family: q mismatch");
  ensure(fam.res.u == Rat(vbar) / 2, "half-slope family: U must be Vbar/2");
  return fam;
}

FriedmanThreshold friedman_threshold(const ChernTable& v, const Rat& lambda,
                                     const Int& ubar,
                                     const SurfaceGeometry& g) {
  require(v.n > 0, "friedman threshold needs ch0 > 0");
  require(v.d > 0, "friedman threshold needs f.ch1 > 0");
  Int gg;
  mpz_gcd(gg.get_mpz_t(), v.n.get_mpz_t(), v.d.get_mpz_t());
  require(gg == 1, "friedman threshold needs gcd(ch0, f.ch1) = 1");
  require(discriminant_e(v, g) + Rat(g.e * v.d * v.d) >= 0,
          "friedman threshold needs Delta_e + e (f.ch1)^2 >= 0");
  require(ubar >= 1, "friedman threshold needs a positive integral Ubar");

  Rat e(g.e);
  Rat core = -v.s + (Rat(ubar) - e) * Rat(v.n) / 2;
  FriedmanThreshold out;
  out.mu = core / Rat(v.d) + lambda;
  out.delta = sq(core + lambda * Rat(v.d)) +
              Rat(2) * (v.c + Rat(g.e * v.d) - lambda * Rat(v.n)) * Rat(v.d) *
                  Rat(ubar);
  out.vbar_threshold = Rat(2) * out.mu * out.delta + e;
  return out;
}

OneDimTransformBounds one_dim_transform_bounds(const ChernTable& v,
                                               const Rat& lambda,
                                               const SurfaceGeometry& g) {
  require(v.n > 0, "one-dim transform bounds need ch0 > 0");
  require(v.d == 0, "one-dim transform bounds need f.ch1 = 0");
  require(discriminant(v, g) >= 0, "one-dim transform bounds need Delta >= 0");

  Rat e(g.e);
  OneDimTransformBounds out;
  out.theta_twisted = v.c - Rat(v.n) * lambda;
  require(out.theta_twisted > 0,
          "one-dim transform bounds need Theta.ch1^B > 0");
  Rat x3_over_n = cube(out.theta_twisted) / Rat(v.n);
  Rat ch2b = v.s; // Bbar = lambda f and d = 0 leave ch2 untouched
  out.a0 = rat_max(x3_over_n, x3_over_n - ch2b * out.theta_twisted);
  out.ubar = Rat(2) * rat_max(out.a0, Rat(1) / (Rat(2) * e)) + e;
  out.omega_ch1_image = -v.s - e / 2 * Rat(v.n) + out.ubar / 2 * Rat(v.n);
  Rat first = sq(out.omega_ch1_image) / (Rat(2) * out.ubar) + e;
  out.bbar_threshold = rat_max(first, first - (v.c - lambda * Rat(v.n)));
  return out;
}

} // namespace ellstab
