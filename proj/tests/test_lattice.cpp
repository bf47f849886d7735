#include "ellstab/errors.hpp"
#include "ellstab/lattice.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace ellstab;

namespace {
const SurfaceGeometry k3{Int(2)};
Rat half(long p) { return make_rat(Int(p), Int(2)); }
} // namespace

TEST_CASE("intersection pairing") {
  CHECK(pairing(theta_div(), theta_div(), k3) == -2);
  CHECK(pairing(fiber_div(), fiber_div(), SurfaceGeometry{Int(5)}) == 0);
  // (Theta + 3f).(Theta + 5f) = -2 + 5 + 3 = 6
  CHECK(pairing(Divisor{Rat(1), Rat(3)}, Divisor{Rat(1), Rat(5)}, k3) == 6);
}

TEST_CASE("c1 reconstruction") {
  CHECK(c1_of(ChernTable(1, 1, 0, 0), k3) == Divisor{Rat(1), Rat(2)});
  CHECK(c1_of(ChernTable(0, 0, 1, 0), k3) == Divisor{Rat(0), Rat(1)});
  CHECK(c1_of(ChernTable(1, 0, 0, 0), k3) == Divisor{Rat(0), Rat(0)});
  // defining property: f.c1 = d and Theta.c1 = c
  ts::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    ChernTable v = ts::rand_table(rng);
    Divisor c1 = c1_of(v, k3);
    CHECK(pairing(fiber_div(), c1, k3) == Rat(v.d));
    CHECK(pairing(theta_div(), c1, k3) == v.c);
  }
}

TEST_CASE("twist") {
  ChernTable v(2, 3, 1, half(5));
  SUBCASE("zero twist is the identity") {
    TwistedChern t = twist(v, Divisor{Rat(0), Rat(0)}, k3);
    CHECK(t.ch0 == 2);
    CHECK(t.fch1 == 3);
    CHECK(t.thch1 == 1);
    CHECK(t.ch2 == half(5));
  }
  SUBCASE("twist by Theta") {
    // (1,1,0,0), B = Theta, e = 2: B^2 = -2
    TwistedChern t = twist(ChernTable(1, 1, 0, 0), theta_div(), k3);
    CHECK(t.ch0 == 1);
    CHECK(t.fch1 == 0);
    CHECK(t.thch1 == 2);
    CHECK(t.ch2 == 1);
  }
  SUBCASE("fiber class twisted by a Theta multiple") {
    Rat lambda = make_rat(Int(7), Int(3));
    TwistedChern t =
        twist(ChernTable(0, 0, 1, 0), Divisor{lambda, Rat(0)}, k3);
    CHECK(t.thch1 == 1);
    CHECK(t.ch2 == -lambda);
  }
}

TEST_CASE("transform actions on tables") {
  SUBCASE("phi on the point class, structure sheaf and fiber") {
    CHECK(phi(ChernTable(0, 0, 0, 1), k3) == ChernTable(0, 0, 1, 0));
    CHECK(phi(ChernTable(1, 0, 0, 0), k3) == ChernTable(0, -1, 2, 1));
    CHECK(phi(ChernTable(0, 0, 1, 0), k3) == ChernTable(0, 0, 0, -1));
  }
  SUBCASE("phihat closed forms") {
    CHECK(phihat(ChernTable(0, 0, 0, 1), k3) == ChernTable(0, 0, 1, -1));
    SurfaceGeometry g1{Int(1)};
    CHECK(phihat(ChernTable(1, 0, 0, 0), g1) ==
          ChernTable(Int(0), Int(-1), Rat(1), half(-1)));
  }
  SUBCASE("the transforms are quasi-inverse up to shift") {
    ChernTable v(Int(2), Int(3), Rat(1), half(1));
    CHECK(phihat(phi(v, k3), k3) == shift1(v));
    CHECK(phi(phihat(v, k3), k3) == shift1(v));
  }
  SUBCASE("dual and shift are involutions; the diagram arrow identity") {
    ts::Rng rng(12);
    for (int i = 0; i < 30; ++i) {
      ChernTable v = ts::rand_table(rng);
      CHECK(dual_d(dual_d(v)) == v);
      CHECK(shift1(shift1(v)) == v);
    }
    CHECK(shift1(ChernTable(1, 0, 0, 0)) == ChernTable(-1, 0, 0, 0));
    // dual sends the second diagram row to the third, for any table
    for (long e = 1; e <= 3; ++e) {
      SurfaceGeometry g{Int(e)};
      for (int i = 0; i < 20; ++i) {
        ChernTable v = ts::rand_table(rng);
        Rat he = g.half_e();
        ChernTable row2{-v.d, v.n, -v.s + he * Rat(v.d) - Rat(g.e * v.n),
                        v.c + Rat(g.e * v.d) - he * Rat(v.n)};
        ChernTable row3{v.d, v.n, -v.s + he * Rat(v.d) - Rat(g.e * v.n),
                        -v.c - Rat(g.e * v.d) + he * Rat(v.n)};
        CHECK(dual_d(row2) == row3);
        CHECK(shift1(phi(v, g)) == row2);
      }
    }
  }
}

TEST_CASE("tensor") {
  ChernTable v(Int(2), Int(5), Rat(0), Rat(3));
  SUBCASE("twist by -k Theta matches the closed table") {
    CHECK(upsilon(v, Int(2), k3) == ChernTable(2, 1, 8, -5));
  }
  SUBCASE("zero divisor is the identity") {
    CHECK(tensor(v, Divisor{Rat(0), Rat(0)}, k3) == v);
  }
  SUBCASE("tensor by m f shifts c and s") {
    CHECK(tensor(ChernTable(2, 3, 1, 0), Divisor{Rat(0), Rat(4)}, k3) ==
          ChernTable(2, 3, 9, 12));
  }
  SUBCASE("round trip and non-integral rejection") {
    ts::Rng rng(13);
    for (int i = 0; i < 40; ++i) {
      ChernTable w = ts::rand_table(rng);
      Divisor D{Rat(ts::rand_int(rng, -5, 5)), Rat(ts::rand_int(rng, -5, 5))};
      CHECK(tensor(tensor(w, D, k3), -D, k3) == w);
    }
    CHECK_THROWS_AS(tensor(v, Divisor{half(1), Rat(0)}, k3),
                    precondition_error);
  }
}

TEST_CASE("psi closed form and diagram composition") {
  SUBCASE("worked example") {
    CHECK(psi(ChernTable(5, 2, 0, 0), Int(2), k3) ==
          ChernTable(1, 2, -12, 0));
  }
  SUBCASE("precondition violations are named") {
    CHECK_THROWS_AS(psi(ChernTable(5, 2, 0, 0), Int(3), k3),
                    precondition_error); // r would be negative
    CHECK_THROWS_AS(psi(ChernTable(2, 5, 0, 0), Int(1), k3),
                    precondition_error); // needs n > d
  }
  SUBCASE("composition equality on random valid inputs") {
    ts::Rng rng(14);
    for (long e = 1; e <= 3; ++e) {
      SurfaceGeometry g{Int(e)};
      for (int i = 0; i < 100; ++i) {
        Int m = ts::rand_int(rng, 1, 5);
        Int d = ts::rand_int(rng, 1, 12);
        if (m == 1 && d == 1) m = 2; // r has nowhere to live otherwise
        Int r = ts::rand_int(rng, m == 1 ? 1 : 0, d.get_si() - 1);
        Int n = m * d + r;
        ChernTable v{n, d, Rat(ts::rand_int(rng, -9, 9)),
                     make_rat(ts::rand_int(rng, -19, 19), Int(2))};
        CHECK(psi(v, m, g) == psi_via_diagram(v, m, g));
      }
    }
  }
}

TEST_CASE("geometric integrality is preserved by the actions") {
  ts::Rng rng(15);
  for (long e = 1; e <= 3; ++e) {
    SurfaceGeometry g{Int(e)};
    for (int i = 0; i < 60; ++i) {
      ChernTable v = ts::rand_geometric_table(rng, g);
      REQUIRE(geometric_integrality(v, g));
      CHECK(geometric_integrality(phi(v, g), g));
      CHECK(geometric_integrality(phihat(v, g), g));
      CHECK(geometric_integrality(dual_d(v), g));
      CHECK(geometric_integrality(shift1(v), g));
      Divisor D{Rat(ts::rand_int(rng, -4, 4)), Rat(ts::rand_int(rng, -4, 4))};
      CHECK(geometric_integrality(tensor(v, D, g), g));
    }
  }
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(ChernTable(Int(1), Int(0), Rat(0), make_rat(Int(1), Int(3))),
                  usage_error);
  CHECK_THROWS_AS(ChernTable(Int(1), Int(0), make_rat(Int(1), Int(4)), Rat(0)),
                  usage_error);
  CHECK_THROWS_AS(SurfaceGeometry{Int(0)}, precondition_error);
}
