#include "ellstab/errors.hpp"
#include "ellstab/transport.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace ellstab;

namespace {
const SurfaceGeometry k3{Int(2)};
Rat frac(long p, long q) { return make_rat(Int(p), Int(q)); }

TransportResult rand_forward(ts::Rng& rng, const SurfaceGeometry& g,
                             bool force_pbar_zero = false) {
  Rat abar = ts::rand_rat(rng, 1, 40, 6);
  Rat pbar = force_pbar_zero ? Rat(0) : ts::rand_rat(rng, -20, 20, 6);
  Rat qbar = ts::rand_rat(rng, -20, 20, 6);
  Rat bbar = Rat(g.e) + ts::rand_rat(rng, 0, 20, 6);
  return forward_transport(abar, pbar, qbar, bbar, g);
}
} // namespace

TEST_CASE("forward transport worked examples") {
  SUBCASE("pbar = 0 swaps the volume coordinates") {
    TransportResult r =
        forward_transport(Rat(3), Rat(0), Rat(1), Rat(5), k3);
    CHECK(r.unbarred.a == 3);
    CHECK(r.unbarred.p == 0);
    CHECK(r.unbarred.q == 0);
    CHECK(r.unbarred.b == 5);
    CHECK(r.u_bar == 8);
    CHECK(r.v == 8);
    CHECK(r.v_bar == 8);
    CHECK(r.u == 8);
  }
  SUBCASE("generic example") {
    TransportResult r =
        forward_transport(Rat(2), Rat(1), Rat(0), Rat(3), k3);
    CHECK(r.unbarred.b == 6);
    CHECK(r.unbarred.p == frac(-2, 5));
    CHECK(r.unbarred.q == frac(-12, 5));
    CHECK(r.unbarred.a == frac(1, 5));
    CHECK(r.u * r.v == 24);
    CHECK(r.u_bar * r.v_bar == 24);
    CHECK_FALSE(r.a_nonpositive);
    CHECK(r.T == Mat2{frac(2, 5), frac(3, 5), Rat(-1), Rat(1)});
  }
  SUBCASE("the a = 0 boundary is flagged, not rejected") {
    TransportResult r =
        forward_transport(Rat(1), Rat(1), Rat(0), Rat(3), k3);
    CHECK(r.unbarred.a == 0);
    CHECK(r.a_nonpositive);
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(forward_transport(Rat(0), Rat(0), Rat(0), Rat(3), k3),
                    precondition_error);
    CHECK_THROWS_AS(forward_transport(Rat(1), Rat(0), Rat(0), Rat(1), k3),
                    precondition_error);
  }
}

TEST_CASE("inverse transport") {
  SUBCASE("round trip of the generic example") {
    TransportResult fwd =
        forward_transport(Rat(2), Rat(1), Rat(0), Rat(3), k3);
    TransportResult inv =
        inverse_transport(fwd.unbarred.a, fwd.unbarred.p, fwd.unbarred.q,
                          fwd.unbarred.b, k3);
    CHECK(inv.barred.a == 2);
    CHECK(inv.barred.p == 1);
    CHECK(inv.barred.q == 0);
    CHECK(inv.barred.b == 3);
  }
  SUBCASE("p = 0 specialization") {
    TransportResult r = inverse_transport(Rat(4), Rat(0), Rat(1), Rat(6), k3);
    CHECK(r.barred.a == r.unbarred.b - Rat(k3.e));
    CHECK(r.barred.b == r.unbarred.a + Rat(k3.e));
  }
  SUBCASE("nonpositive Vbar is rejected") {
    CHECK_THROWS_AS(inverse_transport(Rat(-3), Rat(0), Rat(0), Rat(3), k3),
                    precondition_error);
  }
  SUBCASE("matrix inverse on random transports") {
    ts::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
      SurfaceGeometry g{ts::rand_int(rng, 1, 3)};
      TransportResult fwd = rand_forward(rng, g);
      TransportResult inv = inverse_transport(
          fwd.unbarred.a, fwd.unbarred.p, fwd.unbarred.q, fwd.unbarred.b, g);
      CHECK(inv.barred.a == fwd.barred.a);
      CHECK(inv.barred.p == fwd.barred.p);
      CHECK(inv.barred.q == fwd.barred.q);
      CHECK(inv.barred.b == fwd.barred.b);
      Mat2 prod = fwd.T.inverse() * fwd.T;
      CHECK(prod == Mat2{Rat(1), Rat(0), Rat(0), Rat(1)});
    }
  }
}

TEST_CASE("constraint equations") {
  SUBCASE("hand-checked instance") {
    TransportResult r =
        forward_transport(Rat(2), Rat(1), Rat(0), Rat(3), k3);
    CHECK(check_constraints(r.barred, r.unbarred, k3).all());
    // -bbar pbar + qbar = -3 and e/2 + (b-e) p + q = 1 - 8/5 - 12/5 = -3
    CHECK(-r.barred.b * r.barred.p + r.barred.q == -3);
  }
  SUBCASE("sensitivity to a unit perturbation") {
    TransportResult r =
        forward_transport(Rat(2), Rat(1), Rat(0), Rat(3), k3);
    StabParams bad = r.unbarred;
    bad.q += 1;
    ConstraintCheck chk = check_constraints(r.barred, bad, k3);
    CHECK_FALSE(chk.eq1);
    CHECK_FALSE(chk.all());
  }
}

TEST_CASE("intertwining identity") {
  ts::Rng rng(32);
  SUBCASE("holds for every forward transport") {
    for (int i = 0; i < 60; ++i) {
      SurfaceGeometry g{ts::rand_int(rng, 1, 3)};
      TransportResult r = rand_forward(rng, g);
      CHECK(intertwine_check(r, g));
    }
  }
  SUBCASE("fails under a sign flip of T") {
    TransportResult r =
        forward_transport(Rat(2), Rat(1), Rat(0), Rat(3), k3);
    TransportResult bad = r;
    bad.T = Mat2{-r.T.m00, -r.T.m01, -r.T.m10, -r.T.m11};
    CHECK_FALSE(intertwine_check(bad, k3));
  }
  SUBCASE("distinguishes the transform from its quasi-inverse") {
    TransportResult r =
        forward_transport(Rat(2), Rat(1), Rat(0), Rat(3), k3);
    const ChernTable basis[4] = {
        {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    bool all_match = true;
    for (const ChernTable& v : basis) {
      ChargeValue lhs = central_charge(phihat(v, k3), r.unbarred, k3);
      ChargeValue rhs = r.T.apply(central_charge(v, r.barred, k3));
      if (!(lhs == rhs)) all_match = false;
    }
    CHECK_FALSE(all_match);
  }
}

TEST_CASE("boundary-family transport") {
  SUBCASE("worked example lambda = -3/4, z = 1") {
    TXParams P{frac(-3, 4), Rat(1), Int(0)};
    TransportResult r = tx_transport(P);
    CHECK(r.unbarred.b == 3);
    CHECK(r.unbarred.a == frac(-9, 32));
    CHECK(r.unbarred.p == frac(3, 8));
    CHECK(r.unbarred.q == frac(1, 8));
    CHECK(b_field(r.unbarred) == Divisor{frac(3, 8), frac(1, 8)});
    CHECK(r.T == Mat2{frac(-3, 8), frac(23, 32), Rat(-1), frac(-3, 4)});
    CHECK(r.T.det() == 1);
    CHECK(r.a_nonpositive);
    CHECK(intertwine_check(r, k3));
  }
  SUBCASE("window validation") {
    CHECK_THROWS_AS(TXParams(Rat(0), Rat(1), Int(0)), precondition_error);
    CHECK_THROWS_AS(TXParams(frac(-3, 4), frac(9, 16), Int(0)),
                    precondition_error); // z = lambda^2
    CHECK_THROWS_AS(TXParams(frac(-3, 4), Rat(1), Int(5)),
                    precondition_error); // wrong window
    CHECK(tx_window_k(frac(-3, 4)) == Int(0));
    CHECK(tx_window_k(frac(5, 4)) == Int(-4)); // -2l = -5/2, window (-4+1,-4+2)
    CHECK_FALSE(tx_window_k(Rat(1)).has_value());
  }
  SUBCASE("random family members") {
    ts::Rng rng(33);
    int done = 0;
    while (done < 60) {
      Rat lambda = ts::rand_rat(rng, -20, 20, 8);
      if (is_integer(Rat(2) * lambda)) continue;
      Rat z = sq(lambda) + ts::rand_rat(rng, 1, 15, 4);
      TXParams P{lambda, z, *tx_window_k(lambda)};
      TransportResult r = tx_transport(P);
      CHECK(r.unbarred.a > Rat(-1) + Rat(1) / (z + 1));
      CHECK(r.unbarred.a < 0);
      CHECK(intertwine_check(r, k3));
      ++done;
    }
  }
}

TEST_CASE("half-slope family") {
  SUBCASE("worked example") {
    ChernTable v(1, 2, 0, 0);
    HalfSlopeFamily fam = half_slope_family(v, Rat(10), Int(40), k3);
    CHECK(fam.mu_f == 2);
    CHECK(fam.pbar == 1);
    CHECK(fam.qbar == 10);
    CHECK(fam.res.unbarred.p == frac(-1, 2));
    CHECK(fam.res.u == 20); // U = Vbar / 2
    CHECK(fam.lambda_threshold == frac(3, 2));
    CHECK(fam.lambda_ok);
    CHECK(fam.twisted_fiber_degree == 0);
    CHECK(fam.res.u * fam.res.v == fam.res.u_bar * fam.res.v_bar);
  }
  SUBCASE("twisted fiber degree vanishes over the family") {
    ts::Rng rng(34);
    for (int i = 0; i < 40; ++i) {
      SurfaceGeometry g{ts::rand_int(rng, 1, 3)};
      Int n = ts::rand_int(rng, 1, 6);
      Int d = ts::rand_int(rng, 1, 6);
      Int c = ts::rand_int(rng, -6, 6);
      // pick s at the geometric base point, then push Delta_e up if needed
      Rat s = Rat(d) * Rat(c) + g.half_e() * Rat(d * d);
      ChernTable v{n, d, Rat(c), s};
      if (discriminant_e(v, g) < 0) {
        Int drop = ceil_rat(discriminant_e(v, g) / Rat(-2 * n)) + 1;
        v = ChernTable{n, d, Rat(c), s - Rat(drop)};
      }
      REQUIRE(discriminant_e(v, g) >= 0);
      Rat lambda = ts::rand_rat(rng, -10, 10, 4);
      Int vbar = ts::rand_int(rng, 1, 60);
      if (sq(make_rat(d, 2 * n)) * Rat(vbar) <= Rat(g.e)) continue;
      HalfSlopeFamily fam = half_slope_family(v, lambda, vbar, g);
      CHECK(fam.twisted_fiber_degree == 0);
      CHECK(fam.res.u * fam.res.v == fam.res.u_bar * fam.res.v_bar);
      CHECK((lambda > fam.lambda_threshold) == fam.lambda_ok);
      CHECK(fam.vbar_min >= 1);
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(half_slope_family(ChernTable(0, 1, 0, 0), Rat(1), Int(10),
                                      k3),
                    precondition_error);
    CHECK_THROWS_AS(half_slope_family(ChernTable(1, 0, 0, 0), Rat(1), Int(10),
                                      k3),
                    precondition_error);
    // Delta_e(1,1,0,3) = 2*3... 2dc+ed^2-2ns-en^2 = 0+2-6-2 < 0
    CHECK_THROWS_AS(half_slope_family(ChernTable(1, 1, 0, 3), Rat(1), Int(10),
                                      k3),
                    precondition_error);
  }
}

TEST_CASE("fiber-twist volume threshold") {
  SUBCASE("worked example") {
    FriedmanThreshold thr =
        friedman_threshold(ChernTable(1, 1, 0, 0), Rat(0), Int(8), k3);
    CHECK(thr.mu == 3);
    CHECK(thr.delta == 41);
    CHECK(thr.vbar_threshold == 248);
  }
  SUBCASE("monotone in Ubar on a sign-stable family") {
    ChernTable v(1, 1, 0, 0);
    Rat prev(-1);
    for (long ubar = 2; ubar <= 30; ++ubar) {
      FriedmanThreshold thr = friedman_threshold(v, Rat(0), Int(ubar), k3);
      CHECK(thr.vbar_threshold >= prev);
      prev = thr.vbar_threshold;
    }
  }
  SUBCASE("lambda shifts the slope by exactly its value") {
    ChernTable v(2, 3, 1, 0);
    FriedmanThreshold t0 = friedman_threshold(v, Rat(0), Int(10), k3);
    FriedmanThreshold t1 = friedman_threshold(v, Rat(1), Int(10), k3);
    CHECK(t1.mu - t0.mu == 1);
  }
  SUBCASE("coprimality is enforced") {
    CHECK_THROWS_AS(friedman_threshold(ChernTable(2, 4, 0, 0), Rat(0), Int(8),
                                       k3),
                    precondition_error);
  }
}

TEST_CASE("fiber-degree-zero family bounds") {
  SUBCASE("worked example") {
    OneDimTransformBounds out =
        one_dim_transform_bounds(ChernTable(2, 0, 3, 0), Rat(0), k3);
    CHECK(out.theta_twisted == 3);
    CHECK(out.a0 == frac(27, 2));
    CHECK(out.ubar == 29);
    CHECK(out.omega_ch1_image == 27);
    CHECK(out.bbar_threshold == frac(729, 58) + 2);
  }
  SUBCASE("the ch2 sign moves the max branch") {
    OneDimTransformBounds neg =
        one_dim_transform_bounds(ChernTable(Int(2), Int(0), Rat(3), Rat(-2)),
                                 Rat(0), k3);
    CHECK(neg.a0 == frac(27, 2) + 6); // second branch wins: -ch2 * x = 6
    OneDimTransformBounds pos =
        one_dim_transform_bounds(ChernTable(Int(2), Int(0), Rat(3), Rat(1)),
                                 Rat(0), k3);
    CHECK(pos.a0 == frac(27, 2)); // first branch wins
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(one_dim_transform_bounds(ChernTable(2, 1, 3, 0), Rat(0),
                                             k3),
                    precondition_error);
    CHECK_THROWS_AS(one_dim_transform_bounds(ChernTable(2, 0, 3, 0), Rat(2),
                                             k3),
                    precondition_error); // twisted degree not positive
  }
}

TEST_CASE("volume identities on random transports") {
  ts::Rng rng(35);
  for (int i = 0; i < 120; ++i) {
    SurfaceGeometry g{ts::rand_int(rng, 1, 3)};
    bool zero_p = i % 5 == 0;
    TransportResult r = rand_forward(rng, g, zero_p);
    CHECK(r.T.det() == 1);
    CHECK(r.u * r.v == r.u_bar * r.v_bar);
    CHECK(check_constraints(r.barred, r.unbarred, g).all());
    CHECK((r.barred.p == 0) == (r.unbarred.p == 0));
    if (zero_p) {
      CHECK(r.v == r.u_bar);
      CHECK(r.u == r.v_bar);
      CHECK(r.unbarred.q == r.barred.q - Rat(g.e) / 2);
    }
  }
}
