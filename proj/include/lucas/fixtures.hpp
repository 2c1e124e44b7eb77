#pragma once

#include <random>

#include "lucas/karoubi.hpp"
#include "lucas/planar_map.hpp"

namespace lucas::fixtures {

// Single vertex, no edges.
PlanarMap isolated_vertex();
PlanarMap triangle();
// Hub joined to a 4-cycle rim (five vertices, eight edges).
PlanarMap wheel4();
// K4 drawn as a triangle around a centre.
PlanarMap k4();
// Triangle with edge {0,1} doubled.
PlanarMap doubled_triangle();

// L_k and P_k as abstract graphs (P_2 is a double edge).
Graph path_graph(int k);
Graph cycle_graph(int k);

// The standard (2,k) torus projection: k crossings on a circle, consecutive
// ones joined by two parallel edges. k = 2 is the Hopf projection.
Projection torus_projection(int k);

// Medial projection: one crossing per edge of m, one edge per corner. Needs
// minimum degree 2 so no loops appear.
Projection medial(const PlanarMap& m);

// Random loopless connected map whose vertices all have degree >= 2. Edges
// are added beyond extra_edges when rejection keeps failing.
PlanarMap random_min_degree2_map(std::mt19937_64& rng, int vertices, int extra_edges);

}  // namespace lucas::fixtures
