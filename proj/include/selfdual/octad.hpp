// Completion of seven general points in P^3 to a self-dual eight-point
// configuration: the seven quartic binomials x_1..x_7, the completion map on
// Plucker coordinates, and matrix reconstruction from a Plucker vector
// (which doubles as the Grassmannian membership test).
#pragma once

#include <array>
#include <map>

#include "selfdual/config.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/matrix.hpp"

namespace sd {

// Plucker coordinates of a 4-plane in 7-space: 35 entries keyed by the
// ascending 4-subsets of {1..7}.
using Plucker47 = std::map<Subset, Rat>;

// The seven quartic binomials in the 35 coordinates. x_i = 0 means the
// projection centered at point i puts the other six points on a conic.
std::array<Rat, 7> octad_x(const Plucker47& p);

// Index support of the binomials: x_i multiplies the coordinates in the
// first quadruple list and subtracts the product over the second.
struct OctadBinomialSupport {
  std::array<Subset, 4> plus;
  std::array<Subset, 4> minus;
};
const std::array<OctadBinomialSupport, 7>& octad_x_supports();

// Completion map: extends the minors of X7 to a 70-entry self-dual Plucker
// vector on {1..8} via p_{I^c} = sign(I^c, I) * p_I / prod_{i in I} x_i.
// Throws DegenerateSevenPoints (vanishing maximal minor of X7) and
// OnTwistedCubicOrConicProjection (some x_i = 0). The output is verified by
// matrix reconstruction before returning.
PluckerVector gamma(const RatMatrix& X7);

// Rebuilds an n x m matrix from an alleged Plucker vector: columns I0 become
// the identity and entry (r, j) = +-p_{I0 \ {i_r} + {j}} / p_{I0}.  The
// vector lies on the Grassmannian iff the rebuilt matrix reproduces it up to
// one global scalar; otherwise NotOnGrassmannian is thrown.  Keys of p must
// be the ascending |I0|-subsets of {1..m}.
RatMatrix reconstruct_matrix(const std::map<Subset, Rat>& p, int m, const Subset& I0);

}  // namespace sd
