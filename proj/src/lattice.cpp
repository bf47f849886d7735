#include "ellstab/lattice.hpp"

#include "ellstab/errors.hpp"

namespace ellstab {

SurfaceGeometry::SurfaceGeometry(Int e_) : e(std::move(e_)) {
  require(e >= 1, "surface geometry needs e >= 1 (Theta^2 = -e < 0)");
}

Rat pairing(const Divisor& d1, const Divisor& d2, const SurfaceGeometry& g) {
  return -Rat(g.e) * d1.alpha * d2.alpha + d1.alpha * d2.beta +
         d2.alpha * d1.beta;
}

Rat self_intersection(const Divisor& d, const SurfaceGeometry& g) {
  return pairing(d, d, g);
}

ChernTable::ChernTable(Int n_, Int d_, Rat c_, Rat s_)
    : n(std::move(n_)), d(std::move(d_)), c(std::move(c_)), s(std::move(s_)) {
  if (!is_integer(Rat(2) * c))
    throw usage_error("Theta.ch1 must be half-integral (2c in Z), got " +
                      rat_str(c));
  if (!is_integer(Rat(2) * s))
    throw usage_error("ch2 must be half-integral (2s in Z), got " +
                      rat_str(s));
}

bool geometric_integrality(const ChernTable& v, const SurfaceGeometry& g) {
  if (!is_integer(v.c)) return false;
  // Equivalent to s - (e/2) d in Z; the spec's residue is kept verbatim.
  Rat residue = v.s - Rat(v.d) * v.c - g.half_e() * Rat(v.d * v.d);
  return is_integer(residue);
}

Divisor c1_of(const ChernTable& v, const SurfaceGeometry& g) {
  return {Rat(v.d), v.c + Rat(g.e * v.d)};
}

TwistedChern twist(const ChernTable& v, const Divisor& B,
                   const SurfaceGeometry& g) {
  const Rat& p = B.alpha;
  const Rat& q = B.beta;
  Rat n(v.n);
  TwistedChern t;
  t.ch0 = n;
  t.fch1 = Rat(v.d) - n * p;
  t.thch1 = v.c - n * (q - Rat(g.e) * p);
  // B.ch1 = p c + q d and B^2 = -e p^2 + 2 p q
  t.ch2 = v.s - (p * v.c + q * Rat(v.d)) +
          n * (-Rat(g.e) * p * p + Rat(2) * p * q) / 2;
  return t;
}

ChernTable phi(const ChernTable& v, const SurfaceGeometry& g) {
  Rat c2 = v.s - g.half_e() * Rat(v.d) + Rat(g.e * v.n);
  Rat s2 = -(v.c + Rat(g.e * v.d) - g.half_e() * Rat(v.n));
  return {v.d, -v.n, c2, s2};
}

ChernTable phihat(const ChernTable& v, const SurfaceGeometry& g) {
  Rat c2 = v.s + g.half_e() * Rat(v.d) + Rat(g.e * v.n);
  Rat s2 = -(v.c + Rat(g.e * v.d) + g.half_e() * Rat(v.n));
  return {v.d, -v.n, c2, s2};
}

ChernTable shift1(const ChernTable& v) { return -v; }

ChernTable dual_d(const ChernTable& v) { return {-v.n, v.d, v.c, -v.s}; }

ChernTable tensor(const ChernTable& v, const Divisor& D,
                  const SurfaceGeometry& g) {
  require(D.is_integral(), "tensor needs an integral divisor");
  Int k = to_int(D.alpha);
  Int m = to_int(D.beta);
  // ch(v (x) O(D)) = ch(v) e^D with D = k Theta + m f
  Int d2 = v.d + v.n * k;
  Rat c2 = v.c + Rat(v.n * (m - g.e * k));
  Rat s2 = v.s + (Rat(k) * v.c + Rat(m * v.d)) +
           Rat(v.n) * (-Rat(g.e * k * k) + Rat(2 * k * m)) / 2;
  return {v.n, d2, c2, s2};
}

ChernTable upsilon(const ChernTable& v, const Int& k,
                   const SurfaceGeometry& g) {
  return tensor(v, Divisor{Rat(-k), Rat(0)}, g);
}

ChernTable phi_dual(const ChernTable& v, const SurfaceGeometry& g) {
  return dual_d(shift1(phi(v, g)));
}

ChernTable psi_via_diagram(const ChernTable& v, const Int& m,
                           const SurfaceGeometry& g) {
  ChernTable x = dual_d(shift1(phi(v, g)));
  x = tensor(x, Divisor{Rat(-m), Rat(0)}, g);
  return dual_d(shift1(phi(x, g)));
}

ChernTable psi(const ChernTable& v, const Int& m, const SurfaceGeometry& g) {
  require(m >= 1, "psi needs m >= 1");
  require(v.d > 0 && v.n > v.d, "psi needs n > d > 0");
  Int r = v.n - m * v.d;
  require(r >= 0 && r < v.d, "psi needs n = m d + r with 0 <= r < d");
  Rat er(g.e * r);
  Rat c2 = v.c - Rat(m) * (v.s + er) - g.half_e() * Rat(v.d * m * m);
  ChernTable closed{r, v.d, c2, v.s};
  // The closed form is the most error-prone table in the whole lattice, so
  // it is never trusted alone.
  ensure(closed == psi_via_diagram(v, m, g),
         "psi closed form disagrees with the diagram composition");
  return closed;
}

} // namespace ellstab
