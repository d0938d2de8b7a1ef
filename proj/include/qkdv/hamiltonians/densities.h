#pragma once

#include "qkdv/fock/density.h"

namespace qkdv {

// h_{-1}, h_0, h_1 in closed form, vacuum constants included. h_0 carries the
// total derivative eps2/24 u_xx so that d h_1/du = h_0 holds on the nose; it
// is invisible in the mode-0 operator.
Density explicit_density(int m);

// Dispersionless density h_m^{[0]} (eps = 0): the z^{m+2} coefficient of
// (1/S(h z)) exp(z S(i h z d/dx) u), S(z) = sinh(z/2)/(z/2), h = sqrt(hbar).
// Throws VerificationError if the z^0, z^1 coefficients are not 1 and u.
Density eliashberg_density(int m);

// Classical KdV densities from (2m+3) d_x h_m = (2u d_x + u_x + eps2/4 d_x^3) h_{m-1},
// normalized to vanish at u = 0. Throws if the right-hand side is not a total
// derivative.
Density lenard_magri(int m);

}  // namespace qkdv
