#pragma once

#include "epr/complex.hpp"
#include "epr/perm_group.hpp"

namespace epr {

// Automorphism groups act on positions 0..m-1 into e.objects (ascending
// object order), so the permutation degree equals the object count and the
// group is independent of which global ObjectIds the complex happens to use.

// Equitable-partition refinement with backtracking. Pruning: node invariants
// compared against the first root-to-leaf path, orbit pruning under the
// already-discovered group at nodes on that path, and a jump back to the
// deepest first-path ancestor whenever an automorphism is found. Every
// reported generator is verified edge-preserving before it is recorded.
PermGroup automorphisms(const EprComplex& e);

// Exhaustive position-by-position backtracking; oracle for small complexes.
PermGroup brute_force_automorphisms(const EprComplex& e, int max_objects = 10);

struct SymmetryScore {
  int orbit_count = 0;
  double transitivity_fraction = 0.0;  // 1 iff vertex-transitive
};

SymmetryScore symmetry_score(const EprComplex& e);

}  // namespace epr
