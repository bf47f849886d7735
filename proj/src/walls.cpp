#include "ellstab/walls.hpp"

#include "ellstab/errors.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <vector>

namespace ellstab {

namespace {

struct RayContext {
  Divisor B;
  Rat b;
  Rat im_v;   // w.ch1^B(v)
  Rat ch2_v;  // ch2^B(v)
  Rat volume; // w^2
};

Rat twisted_im(const ChernTable& x, const Divisor& B, const Rat& b,
               const SurfaceGeometry& g) {
  TwistedChern t = twist(x, B, g);
  return t.thch1 + b * t.fch1;
}

// One-sided rational bound; strict only for the wall-positivity halfline.
struct HalfBound {
  bool present = false;
  Rat value;
  bool strict = false;
};

void tighten_lo(HalfBound& lo, const Rat& v, bool strict) {
  if (!lo.present || v > lo.value || (v == lo.value && strict)) {
    lo.present = true;
    lo.value = v;
    lo.strict = strict;
  }
}

void tighten_hi(HalfBound& hi, const Rat& v, bool strict) {
  if (!hi.present || v < hi.value || (v == hi.value && strict)) {
    hi.present = true;
    hi.value = v;
    hi.strict = strict;
  }
}

bool table_less(const ChernTable& x, const ChernTable& y) {
  if (x.n != y.n) return x.n < y.n;
  if (x.d != y.d) return x.d < y.d;
  if (x.c != y.c) return x.c < y.c;
  return x.s < y.s;
}

struct StratumHits {
  std::vector<std::pair<Rat, ChernTable>> walls;
  std::vector<ChernTable> all_a;
};

// All wall candidates of one (n_A, d_A, c_A) column.  The s-interval comes
// from the two discriminant constraints plus wall positivity; together they
// always close the interval in the strict regime 0 < Im(A) < Im(v).
void scan_column(const ChernTable& v, const RayContext& ray, const Box& box,
                 const SurfaceGeometry& g, const Int& nA, const Int& dA,
                 const Int& cA, StratumHits& out) {
  ChernTable probe{nA, dA, Rat(cA), Rat(0)};
  TwistedChern tp = twist(probe, ray.B, g);
  Rat im_a = tp.thch1 + ray.b * tp.fch1;
  Rat off = tp.ch2; // ch2^B(A) = s + off
  Rat coeff = Rat(nA) * ray.im_v - Rat(v.n) * im_a;

  auto admissible = [&](const ChernTable& A) {
    return discriminant_bw(A, ray.B, omega_of(ray.b), g) >= 0 &&
           discriminant_bw(v - A, ray.B, omega_of(ray.b), g) >= 0;
  };

  if (coeff == 0) {
    // Phase equality independent of a: a single ch2 value can qualify.
    Rat s_star = ray.ch2_v * im_a / ray.im_v - off;
    if (is_integer(Rat(2) * s_star)) {
      ChernTable A{nA, dA, Rat(cA), s_star};
      bool in_range = !box.s_range ||
                      (box.s_range->first <= s_star &&
                       s_star <= box.s_range->second);
      if (in_range && admissible(A)) out.all_a.push_back(A);
    }
    return;
  }

  HalfBound lo, hi;
  Rat two_vol_na = Rat(2) * ray.volume * Rat(nA);
  if (nA > 0)
    tighten_hi(hi, sq(im_a) / two_vol_na - off, false);
  else if (nA < 0)
    tighten_lo(lo, sq(im_a) / two_vol_na - off, false);

  Int n_q = v.n - nA;
  Rat im_q = ray.im_v - im_a;
  if (n_q != 0) {
    Rat edge = ray.ch2_v - off - sq(im_q) / (Rat(2) * ray.volume * Rat(n_q));
    if (n_q > 0)
      tighten_lo(lo, edge, false);
    else
      tighten_hi(hi, edge, false);
  }

  Rat root = ray.ch2_v * im_a / ray.im_v - off; // where the wall sits at a = 0
  if (coeff > 0)
    tighten_lo(lo, root, true);
  else
    tighten_hi(hi, root, true);

  if (box.s_range) {
    tighten_lo(lo, box.s_range->first, false);
    tighten_hi(hi, box.s_range->second, false);
  }

  if (!lo.present || !hi.present)
    throw precondition_error(
        "unbounded ch2 stratum at (n_A=" + int_str(nA) + ", d_A=" +
        int_str(dA) + ", c_A=" + int_str(cA) +
        "): provide an explicit s range");

  Rat two_lo = Rat(2) * lo.value;
  Rat two_hi = Rat(2) * hi.value;
  Int t_lo = lo.strict && is_integer(two_lo) ? to_int(two_lo) + 1
                                             : ceil_rat(two_lo);
  Int t_hi = hi.strict && is_integer(two_hi) ? to_int(two_hi) - 1
                                             : floor_rat(two_hi);
  for (Int t = t_lo; t <= t_hi; ++t) {
    ChernTable A{nA, dA, Rat(cA), make_rat(t, 2)};
    if (!admissible(A)) continue; // interval edges are exact, but recheck
    Rat a = ((A.s + off) * ray.im_v - ray.ch2_v * im_a) / coeff;
    if (a > 0) out.walls.emplace_back(std::move(a), std::move(A));
  }
}

void scan_stratum(const ChernTable& v, const RayContext& ray, const Box& box,
                  const SurfaceGeometry& g, bool include_boundary,
                  const Int& nA, const Int& dA, StratumHits& out) {
  // Im(A) = c + base is monotone in c; the Im window fixes the c range.
  ChernTable probe{nA, dA, Rat(0), Rat(0)};
  TwistedChern tp = twist(probe, ray.B, g);
  Rat base = tp.thch1 + ray.b * tp.fch1;
  Int c_lo, c_hi;
  if (include_boundary) {
    c_lo = ceil_rat(-base);
    c_hi = floor_rat(ray.im_v - base);
  } else {
    c_lo = floor_rat(-base) + 1;
    c_hi = ceil_rat(ray.im_v - base) - 1;
  }
  if (c_lo < box.c_lo) c_lo = box.c_lo;
  if (c_hi > box.c_hi) c_hi = box.c_hi;
  for (Int cA = c_lo; cA <= c_hi; ++cA)
    scan_column(v, ray, box, g, nA, dA, cA, out);
}

} // namespace

WallSolution solve_wall(const ChernTable& v, const ChernTable& A,
                        const Divisor& B, const Rat& b,
                        const SurfaceGeometry& g) {
  TwistedChern tv = twist(v, B, g);
  TwistedChern ta = twist(A, B, g);
  Rat im_v = tv.thch1 + b * tv.fch1;
  Rat im_a = ta.thch1 + b * ta.fch1;
  require(!(im_v == 0 && im_a == 0),
          "wall equation needs Im values not both zero");
  Rat coeff = Rat(A.n) * im_v - Rat(v.n) * im_a;
  Rat rhs = ta.ch2 * im_v - tv.ch2 * im_a;
  if (coeff != 0) return WallSolution::at(rhs / coeff);
  if (rhs == 0) return WallSolution::all_a();
  return WallSolution::none();
}

WallReport enumerate_walls(const ChernTable& v, const Divisor& B, const Rat& b,
                           const Box& box, const SurfaceGeometry& g,
                           bool include_boundary, unsigned threads) {
  RayContext ray;
  ray.B = B;
  ray.b = b;
  TwistedChern tv = twist(v, B, g);
  ray.im_v = tv.thch1 + b * tv.fch1;
  ray.ch2_v = tv.ch2;
  ray.volume = Rat(2) * b - Rat(g.e);
  require(ray.im_v > 0, "wall enumeration needs w.ch1^B(v) > 0");
  require(ray.volume > 0, "wall enumeration needs w^2 > 0");

  WallReport rep{v,    B,  b,    box, include_boundary,
                 {},   {}, true};
  if (!box.empty()) {
    std::vector<std::pair<Int, Int>> strata;
    for (Int nA = box.n_lo; nA <= box.n_hi; ++nA)
      for (Int dA = box.d_lo; dA <= box.d_hi; ++dA)
        strata.emplace_back(nA, dA);

    unsigned workers = threads;
    if (workers == 0) {
      workers = std::thread::hardware_concurrency();
      if (workers == 0) workers = 1;
    }
    if (workers > strata.size()) workers = (unsigned)strata.size();

    std::vector<StratumHits> hits(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](unsigned w) {
      try {
        for (size_t i = w; i < strata.size(); i += workers)
          scan_stratum(v, ray, box, g, include_boundary, strata[i].first,
                       strata[i].second, hits[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& th : pool) th.join();
    }
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);

    // Deterministic merge: sorted by wall position, witnesses canonical.
    std::map<Rat, std::vector<ChernTable>, RatLess> merged;
    for (auto& h : hits) {
      for (auto& [a, A] : h.walls) merged[a].push_back(A);
      for (auto& A : h.all_a) rep.all_a_witnesses.push_back(A);
    }
    for (auto& [a, ws] : merged) {
      std::sort(ws.begin(), ws.end(), table_less);
      rep.walls.push_back(Wall{a, std::move(ws)});
    }
    std::sort(rep.all_a_witnesses.begin(), rep.all_a_witnesses.end(),
              table_less);
  }

  rep.generic = v.n > 0 ? is_generic_ray(v, B, b, box, g)
                        : rep.all_a_witnesses.empty();
  return rep;
}

bool is_generic_ray(const ChernTable& v, const Divisor& B, const Rat& b,
                    const Box& box, const SurfaceGeometry& g) {
  require(v.n > 0, "genericity scan needs ch0 > 0");
  TwistedChern tv = twist(v, B, g);
  Rat im_v = tv.thch1 + b * tv.fch1;
  require(im_v > 0, "genericity scan needs w.ch1^B(v) > 0");

  Int n_from = box.n_lo > 1 ? box.n_lo : Int(1);
  Int n_to = box.n_hi < v.n - 1 ? box.n_hi : v.n - 1;
  for (Int nA = n_from; nA <= n_to; ++nA) {
    Rat im_a = im_v * Rat(nA) / Rat(v.n); // equal slope fixes Im(A)
    for (Int dA = box.d_lo; dA <= box.d_hi; ++dA) {
      ChernTable probe{nA, dA, Rat(0), Rat(0)};
      TwistedChern tp = twist(probe, B, g);
      Rat base = tp.thch1 + b * tp.fch1;
      Rat c_exact = im_a - base;
      if (!is_integer(c_exact)) continue;
      Int cA = to_int(c_exact);
      if (cA < box.c_lo || cA > box.c_hi) continue;
      // ch2^B(A)/n_A = ch2^B(v)/n_v pins the last entry.
      ChernTable col{nA, dA, Rat(cA), Rat(0)};
      Rat off = twist(col, B, g).ch2;
      Rat s_star = tv.ch2 * Rat(nA) / Rat(v.n) - off;
      if (!is_integer(Rat(2) * s_star)) continue;
      if (box.s_range && (s_star < box.s_range->first ||
                          s_star > box.s_range->second))
        continue;
      return false;
    }
  }
  return true;
}

} // namespace ellstab
