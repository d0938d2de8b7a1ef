#pragma once

#include <map>
#include <utility>

#include "qkdv/exact/matrix.h"
#include "qkdv/fock/density.h"

namespace qkdv {

// Operator blocks keyed by (mode p, source weight d).
using ModeBlocks = std::map<std::pair<int, int>, ExactMatrix>;

struct FitWindow {
  int max_mode = 1;           // modes 1..max_mode
  int max_target_weight = 4;  // blocks d -> d+p with d+p <= this
};

// Mode-p blocks of h_{m+1} for the modes and weights of `window`, from the
// commutator with the mode-0 part of h_1:
//   (D - 1) X_p = -[A_p, H_1] / (hbar p),
// A_p the mode-p part of h_m. D - 1 is m+2+a on the eps2^a part.
ModeBlocks br_step(const Density& h_m, int m, const Density& h_1, const FitWindow& window);

// Recovers the density of h_{target_m} (without its constant) from mode
// blocks by an exact ansatz fit. Throws InconsistentSystem if no density
// reproduces the blocks and RankDeficient if the window is too small.
Density density_reconstruct(const ModeBlocks& blocks, int target_m);

struct BrResult {
  Density density;  // constant term is zero
  FitWindow window;
};

// br_step + density_reconstruct, enlarging the window until the fit is
// determined.
BrResult br_next(const Density& h_m, int m, const Density& h_1);

}  // namespace qkdv
