#pragma once

#include <cstdint>

#include "cotree/planar_graph.hpp"

namespace cotree {

// Deterministic RNG used by all generators (splitmix64), so a (kind, n, seed)
// triple fully determines the output graph.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t operator()() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// All generators root the embedding the same way: the outer face is the face
// left of dart 0, v1 = 0, v2 = the outer-orbit predecessor of v1, vn = its
// successor.
PlanarGraph gen_tetrahedron();
PlanarGraph gen_cube();
PlanarGraph gen_dodecahedron();
// Wheel W_n: hub plus an (n-1)-cycle rim; n >= 4 (W_4 is the tetrahedron).
PlanarGraph gen_wheel(int n);
// Prism over a k-gon (n = 2k vertices), k >= 3.
PlanarGraph gen_prism(int k);
// Random planar triangulation grown by inserting each new vertex into a
// uniformly chosen face of the current triangulation; n >= 4.
PlanarGraph gen_triangulation(int n, uint64_t seed);

}  // namespace cotree
