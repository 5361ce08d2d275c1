#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace epr {

using ObjectId = int;
using BigInt = boost::multiprecision::cpp_int;

using Edge = std::pair<ObjectId, ObjectId>;

// A finite simple graph over a subset of the global object set
// Phi = {0, ..., n_phi - 1}. Storage is canonical: objects ascending,
// edges with a < b in lexicographic order. Equality is therefore
// structural. Instances are immutable after construction.
struct EprComplex {
  int n_phi = 0;
  std::vector<ObjectId> objects;
  std::vector<Edge> edges;

  bool operator==(const EprComplex&) const = default;

  int object_count() const { return static_cast<int>(objects.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  bool has_object(ObjectId o) const;
  // Position of o in `objects`, or -1.
  int position_of(ObjectId o) const;
  bool has_edge(ObjectId a, ObjectId b) const;

  // Adjacency lists over positions in `objects`, each neighbor list ascending.
  std::vector<std::vector<int>> adjacency() const;
};

// All complexes live in the same universe; used by binary operations.
void require_same_phi(const EprComplex& e, const EprComplex& f);

// Validates and canonicalizes. Duplicate object mentions are merged.
EprComplex make_complex(int n_phi, std::vector<ObjectId> objects,
                        std::vector<Edge> edges);

// Induced subcomplex of e on `objects` (each must belong to e).
EprComplex induced(const EprComplex& e, std::vector<ObjectId> objects);

// The partial order: e <= f iff e equals the subgraph of f induced on obj(e).
bool leq(const EprComplex& e, const EprComplex& f);

// Maximal elements of the order are exactly the complexes on all of Phi.
bool is_aspect(const EprComplex& e);

struct AspectExtension {
  BigInt count;                     // 2^(C(N,2) - C(m,2))
  std::vector<EprComplex> aspects;  // empty unless enumerated
  bool enumerated = false;
  int free_pairs = 0;
};

// Aspects extending e. The count is always computed; the enumeration is
// produced only when the number of free object pairs is within
// max_free_pairs. With throw_when_too_large the blown limit raises
// EnumerationTooLarge instead of degrading to count-only.
AspectExtension aspects_extending(const EprComplex& e, int max_free_pairs = 20,
                                  bool enumerate = true,
                                  bool throw_when_too_large = false);

// Smallest complex below `ambient` that is above every part: the subgraph
// of `ambient` induced on the union of the parts' objects.
EprComplex join_in_aspect(const EprComplex& ambient,
                          const std::vector<EprComplex>& parts);

struct LowerBoundSet {
  std::vector<EprComplex> bounds;  // maximal common lower bounds
  bool unique = false;
  std::size_t selected = 0;  // index of the deterministic representative
};

// All maximal common lower bounds of e and a, ordered by object count
// descending then object set ascending; `selected` points at the first.
// The infimum is not unique in general, hence the full set plus a flag.
LowerBoundSet meet(const EprComplex& e, const EprComplex& a,
                   std::size_t max_bounds = 10000);

// Shortest-path edge count inside e; nullopt when unreachable.
std::optional<int> graph_distance(const EprComplex& e, ObjectId o1,
                                  ObjectId o2);

// BFS distances from origin to every object of e, aligned with e.objects.
std::vector<std::optional<int>> distances_from(const EprComplex& e,
                                               ObjectId origin);

bool is_connected(const EprComplex& e);

// Named builders; the object set covers all of Phi (n_phi = n).
EprComplex cycle_complex(int n);     // n >= 3
EprComplex complete_complex(int n);  // n >= 1
EprComplex path_complex(int n);      // n >= 1
EprComplex star_complex(int n);      // n >= 2, center is object 0
EprComplex edgeless_complex(int n);  // n >= 0
EprComplex gnp_complex(int n, double p, std::uint64_t seed);

// Every complex over a universe of size n_phi, in a fixed deterministic
// order. Intended for exhaustive oracles; limited to small universes.
std::vector<EprComplex> enumerate_universe(int n_phi, int max_n_phi = 6);

}  // namespace epr
