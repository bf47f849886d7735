#include "ellstab/euclid.hpp"

#include "ellstab/errors.hpp"
#include "ellstab/stability.hpp"

namespace ellstab {

ChernTable apply_move(EuclidMove::Kind kind, const Int& param,
                      const ChernTable& before, const SurfaceGeometry& g) {
  switch (kind) {
    case EuclidMove::Kind::Upsilon:
      return tensor(before, Divisor{Rat(-param), Rat(0)}, g);
    case EuclidMove::Kind::Psi:
      return psi_via_diagram(before, param, g);
    case EuclidMove::Kind::FinalPhiDual: {
      ChernTable u = tensor(before, Divisor{Rat(-param), Rat(0)}, g);
      return dual_d(shift1(phi(u, g)));
    }
  }
  throw internal_error("unknown euclid move kind");
}

std::pair<Divisor, Int> final_normalize(const ChernTable& final,
                                        const SurfaceGeometry& g) {
  require(final.n == 1, "final_normalize needs a rank-one table");
  Divisor lambda = c1_of(final, g);
  require(lambda.is_integral(),
          "final_normalize needs an integral c1 (geometrically integral "
          "table)");
  Rat k_rat = self_intersection(lambda, g) / 2 - final.s;
  require(is_integer(k_rat),
          "final_normalize needs Lambda^2/2 - s integral (geometrically "
          "integral table)");
  Int k = to_int(k_rat);
  ensure(tensor(final, -lambda, g) == ChernTable(Int(1), Int(0), Rat(0), -k_rat),
         "tensoring by -Lambda must land on (1, 0, 0, -K)");
  return {lambda, k};
}

EuclidTrace euclid_reduce(const ChernTable& v, const SurfaceGeometry& g) {
  require(v.n > 0, "euclid reduction needs ch0 > 0");
  require(v.d > 0, "euclid reduction needs f.ch1 > 0");
  Int gg;
  mpz_gcd(gg.get_mpz_t(), v.n.get_mpz_t(), v.d.get_mpz_t());
  require(gg == 1, "euclid reduction needs gcd(ch0, f.ch1) = 1");
  require(discriminant_e(v, g) >= 0, "euclid reduction needs Delta_e >= 0");
  require(geometric_integrality(v, g),
          "euclid reduction needs a geometrically integral table (else the "
          "extracted K is not an integer)");

  EuclidTrace trace{v, {}, v, Divisor{}, Int(0), !g.is_k3()};
  Rat delta_e0 = discriminant_e(v, g);

  Int larger = v.n > v.d ? v.n : v.d;
  size_t guard = 4 * mpz_sizeinbase(larger.get_mpz_t(), 2);

  ChernTable cur = v;
  while (cur.n != 1) {
    ensure(guard-- > 0, "euclid reduction exceeded its termination guard");
    EuclidMove move{EuclidMove::Kind::Upsilon, Int(0), cur, cur};
    if (cur.d == 1) {
      move.kind = EuclidMove::Kind::FinalPhiDual;
      move.param = 0;
      move.after = dual_d(shift1(phi(cur, g)));
    } else if (cur.n < cur.d) {
      move.kind = EuclidMove::Kind::Upsilon;
      move.param = cur.d / cur.n; // d = k n + r, 0 < r < n by coprimality
      move.after = upsilon(cur, move.param, g);
    } else {
      move.kind = EuclidMove::Kind::Psi;
      move.param = cur.n / cur.d; // n = m d + r, 0 < r < d by coprimality
      move.after = psi(cur, move.param, g);
    }
    cur = move.after;
    ensure(discriminant_e(cur, g) == delta_e0,
           "Delta_e must be invariant across every euclid move");
    mpz_gcd(gg.get_mpz_t(), cur.n.get_mpz_t(), cur.d.get_mpz_t());
    ensure(cur.n > 0 && gg == 1,
           "euclid moves must preserve positive coprime (rank, fiber degree)");
    trace.moves.push_back(std::move(move));
  }

  trace.final_table = cur;
  auto [lambda, k] = final_normalize(cur, g);
  trace.lambda = lambda;
  trace.big_k = k;
  ensure(trace.big_k >= 0, "K must be nonnegative when Delta_e(v) >= 0");
  ensure(discriminant(cur, g) == Rat(2) * Rat(trace.big_k),
         "Delta(final) must equal 2K");
  return trace;
}

} // namespace ellstab
