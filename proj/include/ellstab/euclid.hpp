#pragma once

#include "ellstab/lattice.hpp"

#include <utility>
#include <vector>

namespace ellstab {

struct EuclidMove {
  enum class Kind { Upsilon, Psi, FinalPhiDual } kind;
  Int param; // k for Upsilon and FinalPhiDual, m for Psi
  ChernTable before;
  ChernTable after;
};

// Applies a move through the lattice primitives only (no closed forms);
// the replay oracle for traces.
ChernTable apply_move(EuclidMove::Kind kind, const Int& param,
                      const ChernTable& before, const SurfaceGeometry& g);

struct EuclidTrace {
  ChernTable input;
  std::vector<EuclidMove> moves;
  ChernTable final_table;
  Divisor lambda; // integral; c1 of the final rank-one table
  Int big_k;      // Lambda^2/2 - s_final, nonnegative
  bool numerics_only = false; // e != 2: table dynamics without the geometry
};

// Drives (rank, fiber degree) to (1, .) by alternating tensor and conjugated
// transforms.  Requires n > 0, d > 0, gcd(n, d) = 1, Delta_e(v) >= 0 and
// geometric integrality of ch2 (so the extracted K is an integer).
EuclidTrace euclid_reduce(const ChernTable& v, const SurfaceGeometry& g);

// For a rank-one table: Lambda = c1, K = Lambda^2/2 - s; tensoring by
// -Lambda lands exactly on (1, 0, 0, -K).
std::pair<Divisor, Int> final_normalize(const ChernTable& final,
                                        const SurfaceGeometry& g);

} // namespace ellstab
