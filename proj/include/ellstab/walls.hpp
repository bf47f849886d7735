#pragma once

#include "ellstab/stability.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ellstab {

struct WallSolution {
  enum class Kind { NoWall, WallAt, AllA } kind = Kind::NoWall;
  Rat a; // meaningful for WallAt only

  static WallSolution none() { return {Kind::NoWall, Rat(0)}; }
  static WallSolution at(Rat a) { return {Kind::WallAt, std::move(a)}; }
  static WallSolution all_a() { return {Kind::AllA, Rat(0)}; }
};

// Solves Re_a(A) Im(v) - Re_a(v) Im(A) = 0 for a along the vertical ray.
// Linear in a with coefficient n_A Im(v) - n_v Im(A); AllA encodes the
// equal-slope degeneracy where the equation is independent of a.
WallSolution solve_wall(const ChernTable& v, const ChernTable& A,
                        const Divisor& B, const Rat& b,
                        const SurfaceGeometry& g);

struct Box {
  Int n_lo, n_hi;
  Int d_lo, d_hi;
  Int c_lo, c_hi;
  std::optional<std::pair<Rat, Rat>> s_range; // extra clamp, rarely needed

  bool empty() const { return n_lo > n_hi || d_lo > d_hi || c_lo > c_hi; }
};

struct Wall {
  Rat a;
  std::vector<ChernTable> witnesses; // canonical order, duplicates merged
};

struct WallReport {
  ChernTable v;
  Divisor B;
  Rat b;
  Box box;
  bool include_boundary = false;
  std::vector<Wall> walls;                  // strictly sorted by a, all a > 0
  std::vector<ChernTable> all_a_witnesses;  // equal-phase-for-every-a classes
  bool generic = true;
};

// Brute-force enumeration of destabilizing candidates A in the box with
// 0 < Im(A) < Im(v), Delta_{B,w}(A) >= 0 and Delta_{B,w}(v - A) >= 0,
// keeping walls with a > 0.  The s-stratum of each (n_A, d_A, c_A) is
// derived from the two discriminant constraints and wall positivity; an
// unbounded stratum without a user s_range is an error naming the stratum.
//
// Embarrassingly parallel over (n_A, d_A); the merged report is independent
// of the worker count.
WallReport enumerate_walls(const ChernTable& v, const Divisor& B, const Rat& b,
                           const Box& box, const SurfaceGeometry& g,
                           bool include_boundary = false, unsigned threads = 1);

// False exactly when the box contains a witness 0 < n_A < n_v with
// mu_{B,w}(A) = mu_{B,w}(v) and ch2^B(A)/n_A = ch2^B(v)/n_v, i.e. when the
// whole vertical ray sits on a wall.
bool is_generic_ray(const ChernTable& v, const Divisor& B, const Rat& b,
                    const Box& box, const SurfaceGeometry& g);

} // namespace ellstab
