#pragma once

#include <string>
#include <vector>

#include "adem/simplex.hpp"

namespace adem {

// Minimal 6-vertex triangulation of the real projective plane.
SimplicialSet rp2_6();

// The 7-vertex Csaszar torus (all 21 edges of K_7).
SimplicialSet torus_7();

// Staircase triangulation of |K| x |L|: for maximal simplices sigma, tau the
// product cell is cut along monotone lattice paths; vertex (a,b) gets the id
// a * stride + b under the global lexicographic order.
SimplicialSet product_complex(const SimplicialSet& K, const SimplicialSet& L,
                              const std::string& name);

// Product torus (two hollow triangles) on 9 vertices.
SimplicialSet torus_9();

// S^2 x S^2 as the staircase product of two copies of the boundary of
// Delta^3 (16 vertices).
SimplicialSet s2_x_s2();

// Named fixture lookup ("delta5", "boundary_delta3", "rp2", "torus",
// "torus9", "s2xs2"); throws std::out_of_range for unknown names.
SimplicialSet fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace adem
