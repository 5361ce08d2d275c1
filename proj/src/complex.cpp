#include "epr/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "epr/error.hpp"
#include "epr/rng.hpp"

namespace epr {

bool EprComplex::has_object(ObjectId o) const {
  return std::binary_search(objects.begin(), objects.end(), o);
}

int EprComplex::position_of(ObjectId o) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), o);
  if (it == objects.end() || *it != o) return -1;
  return static_cast<int>(it - objects.begin());
}

bool EprComplex::has_edge(ObjectId a, ObjectId b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), Edge{a, b});
}

std::vector<std::vector<int>> EprComplex::adjacency() const {
  std::vector<std::vector<int>> adj(objects.size());
  for (const auto& [a, b] : edges) {
    int pa = position_of(a);
    int pb = position_of(b);
    adj[pa].push_back(pb);
    adj[pb].push_back(pa);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

void require_same_phi(const EprComplex& e, const EprComplex& f) {
  if (e.n_phi != f.n_phi) {
    fail(ErrorCode::PhiMismatch,
         "complexes live in different universes: n_phi " +
             std::to_string(e.n_phi) + " vs " + std::to_string(f.n_phi));
  }
}

EprComplex make_complex(int n_phi, std::vector<ObjectId> objects,
                        std::vector<Edge> edges) {
  if (n_phi < 0) {
    fail(ErrorCode::InvalidArgument,
         "n_phi must be non-negative, got " + std::to_string(n_phi));
  }
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  for (ObjectId o : objects) {
    if (o < 0 || o >= n_phi) {
      fail(ErrorCode::ObjectOutsidePhi,
           "object " + std::to_string(o) + " outside Phi of size " +
               std::to_string(n_phi));
    }
  }

  EprComplex result;
  result.n_phi = n_phi;
  result.objects = std::move(objects);

  for (auto& [a, b] : edges) {
    if (a == b) {
      fail(ErrorCode::SelfLoop, "self-loop at object " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
    if (!result.has_object(a) || !result.has_object(b)) {
      fail(ErrorCode::EndpointOutsideObjects,
           "edge (" + std::to_string(a) + "," + std::to_string(b) +
               ") has an endpoint outside the object set");
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    fail(ErrorCode::DuplicateEdge,
         "duplicate edge (" + std::to_string(dup->first) + "," +
             std::to_string(dup->second) + ")");
  }
  result.edges = std::move(edges);
  return result;
}

EprComplex induced(const EprComplex& e, std::vector<ObjectId> objects) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  for (ObjectId o : objects) {
    if (!e.has_object(o)) {
      fail(ErrorCode::ObjectNotInComplex,
           "object " + std::to_string(o) + " not in the complex");
    }
  }
  std::vector<Edge> kept;
  for (const auto& edge : e.edges) {
    if (std::binary_search(objects.begin(), objects.end(), edge.first) &&
        std::binary_search(objects.begin(), objects.end(), edge.second)) {
      kept.push_back(edge);
    }
  }
  EprComplex result;
  result.n_phi = e.n_phi;
  result.objects = std::move(objects);
  result.edges = std::move(kept);
  return result;
}

bool leq(const EprComplex& e, const EprComplex& f) {
  require_same_phi(e, f);
  if (!std::includes(f.objects.begin(), f.objects.end(), e.objects.begin(),
                     e.objects.end())) {
    return false;
  }
  // e must equal the subgraph of f induced on obj(e): every f-edge with both
  // endpoints in obj(e) is an e-edge and vice versa. Both lists are sorted.
  std::vector<Edge> restricted;
  for (const auto& edge : f.edges) {
    if (e.has_object(edge.first) && e.has_object(edge.second)) {
      restricted.push_back(edge);
    }
  }
  return restricted == e.edges;
}

bool is_aspect(const EprComplex& e) {
  return e.object_count() == e.n_phi;
}

AspectExtension aspects_extending(const EprComplex& e, int max_free_pairs,
                                  bool enumerate, bool throw_when_too_large) {
  // Free pairs: unordered object pairs of Phi not internal to obj(e). Each
  // may be an edge or not, independently, so the count is exactly
  // 2^free_pairs.
  const long long n = e.n_phi;
  const long long m = e.object_count();
  const long long free_pairs = n * (n - 1) / 2 - m * (m - 1) / 2;

  AspectExtension out;
  out.free_pairs = static_cast<int>(free_pairs);
  out.count = BigInt(1) << static_cast<unsigned>(free_pairs);
  if (!enumerate) return out;
  if (free_pairs > max_free_pairs) {
    if (throw_when_too_large) {
      fail(ErrorCode::EnumerationTooLarge,
           "enumeration over " + std::to_string(free_pairs) +
               " free pairs exceeds the limit of " +
               std::to_string(max_free_pairs));
    }
    return out;
  }

  std::vector<Edge> pairs;
  for (ObjectId a = 0; a < e.n_phi; ++a) {
    for (ObjectId b = a + 1; b < e.n_phi; ++b) {
      if (e.has_object(a) && e.has_object(b)) continue;
      pairs.emplace_back(a, b);
    }
  }

  std::vector<ObjectId> all(e.n_phi);
  for (int i = 0; i < e.n_phi; ++i) all[i] = i;

  const std::uint64_t total = 1ULL << pairs.size();
  out.aspects.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges = e.edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1ULL << i)) edges.push_back(pairs[i]);
    }
    std::sort(edges.begin(), edges.end());
    EprComplex aspect;
    aspect.n_phi = e.n_phi;
    aspect.objects = all;
    aspect.edges = std::move(edges);
    out.aspects.push_back(std::move(aspect));
  }
  out.enumerated = true;
  return out;
}

EprComplex join_in_aspect(const EprComplex& ambient,
                          const std::vector<EprComplex>& parts) {
  if (!is_aspect(ambient)) {
    fail(ErrorCode::NotAnAspect, "ambient complex does not cover Phi");
  }
  std::vector<ObjectId> carrier;
  for (const auto& part : parts) {
    require_same_phi(part, ambient);
    if (!leq(part, ambient)) {
      fail(ErrorCode::PartNotBelowAspect,
           "a part is not below the ambient aspect");
    }
    carrier.insert(carrier.end(), part.objects.begin(), part.objects.end());
  }
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  return induced(ambient, std::move(carrier));
}

namespace {

// Objects on which e and a disagree cannot coexist in a common lower bound.
// Disagreement is per unordered pair: present in one restriction, absent in
// the other. Common lower bounds of e and a correspond exactly to
// conflict-free subsets of the shared objects, so the maximal ones are the
// maximal independent sets of the conflict graph.
struct ConflictGraph {
  std::vector<ObjectId> shared;
  std::vector<std::vector<int>> adj;  // positions into shared
};

ConflictGraph conflict_graph(const EprComplex& e, const EprComplex& a) {
  ConflictGraph g;
  std::set_intersection(e.objects.begin(), e.objects.end(), a.objects.begin(),
                        a.objects.end(), std::back_inserter(g.shared));
  const int k = static_cast<int>(g.shared.size());
  g.adj.assign(k, {});
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      bool in_e = e.has_edge(g.shared[i], g.shared[j]);
      bool in_a = a.has_edge(g.shared[i], g.shared[j]);
      if (in_e != in_a) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
    }
  }
  return g;
}

// Bron-Kerbosch with pivoting on the complement adjacency, enumerating
// maximal independent sets directly.
void maximal_independent_sets(const ConflictGraph& g, std::size_t max_bounds,
                              std::vector<std::vector<int>>& out) {
  const int k = static_cast<int>(g.shared.size());
  std::vector<std::uint64_t> nonadj;  // complement rows incl. self, k <= 64
  nonadj.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    std::uint64_t row = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
    for (int j : g.adj[i]) row &= ~(1ULL << j);
    nonadj[i] = row;
  }

  struct Frame {
    std::uint64_t r, p, x;
  };
  std::vector<Frame> stack;
  std::uint64_t full = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
  if (k == 0) {
    out.push_back({});
    return;
  }
  stack.push_back({0, full, 0});
  while (!stack.empty()) {
    auto [r, p, x] = stack.back();
    stack.pop_back();
    if (p == 0 && x == 0) {
      std::vector<int> members;
      for (int i = 0; i < k; ++i) {
        if (r & (1ULL << i)) members.push_back(i);
      }
      out.push_back(std::move(members));
      if (out.size() > max_bounds) {
        fail(ErrorCode::MeetTooLarge,
             "meet has more than " + std::to_string(max_bounds) +
                 " maximal lower bounds");
      }
      continue;
    }
    // Pivot: vertex of P|X covering the most of P in the complement graph.
    std::uint64_t px = p | x;
    int pivot = -1;
    int best = -1;
    for (int i = 0; i < k; ++i) {
      if (!(px & (1ULL << i))) continue;
      int cover = static_cast<int>(__builtin_popcountll(p & nonadj[i]));
      if (cover > best) {
        best = cover;
        pivot = i;
      }
    }
    std::uint64_t candidates = p & ~nonadj[pivot];
    candidates |= p & (1ULL << pivot);
    for (int v = 0; v < k; ++v) {
      if (!(candidates & (1ULL << v))) continue;
      std::uint64_t bit = 1ULL << v;
      stack.push_back({r | bit, p & nonadj[v] & ~bit, x & nonadj[v] & ~bit});
      p &= ~bit;
      x |= bit;
    }
  }
}

}  // namespace

LowerBoundSet meet(const EprComplex& e, const EprComplex& a,
                   std::size_t max_bounds) {
  require_same_phi(e, a);
  ConflictGraph g = conflict_graph(e, a);
  if (g.shared.size() > 64) {
    fail(ErrorCode::MeetTooLarge,
         "meet over " + std::to_string(g.shared.size()) +
             " shared objects exceeds the 64-object enumeration bound");
  }
  std::vector<std::vector<int>> sets;
  maximal_independent_sets(g, max_bounds, sets);

  LowerBoundSet out;
  out.bounds.reserve(sets.size());
  for (const auto& members : sets) {
    std::vector<ObjectId> objs;
    objs.reserve(members.size());
    for (int i : members) objs.push_back(g.shared[i]);
    out.bounds.push_back(induced(e, std::move(objs)));
  }
  // Largest first, ties by object set ascending; the head is the canonical
  // representative.
  std::sort(out.bounds.begin(), out.bounds.end(),
            [](const EprComplex& lhs, const EprComplex& rhs) {
              if (lhs.object_count() != rhs.object_count()) {
                return lhs.object_count() > rhs.object_count();
              }
              return lhs.objects < rhs.objects;
            });
  out.unique = out.bounds.size() == 1;
  out.selected = 0;
  return out;
}

std::vector<std::optional<int>> distances_from(const EprComplex& e,
                                               ObjectId origin) {
  int start = e.position_of(origin);
  if (start < 0) {
    fail(ErrorCode::ObjectNotInComplex,
         "object " + std::to_string(origin) + " not in the complex");
  }
  auto adj = e.adjacency();
  std::vector<std::optional<int>> dist(e.objects.size());
  std::deque<int> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (!dist[v]) {
        dist[v] = *dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<int> graph_distance(const EprComplex& e, ObjectId o1,
                                  ObjectId o2) {
  int p2 = e.position_of(o2);
  if (p2 < 0) {
    fail(ErrorCode::ObjectNotInComplex,
         "object " + std::to_string(o2) + " not in the complex");
  }
  return distances_from(e, o1)[p2];
}

bool is_connected(const EprComplex& e) {
  if (e.object_count() <= 1) return true;
  auto dist = distances_from(e, e.objects.front());
  return std::all_of(dist.begin(), dist.end(),
                     [](const auto& d) { return d.has_value(); });
}

namespace {

std::vector<ObjectId> iota_objects(int n) {
  std::vector<ObjectId> objects(n);
  for (int i = 0; i < n; ++i) objects[i] = i;
  return objects;
}

}  // namespace

EprComplex cycle_complex(int n) {
  if (n < 3) {
    fail(ErrorCode::InvalidArgument,
         "cycle needs at least 3 objects, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return make_complex(n, iota_objects(n), std::move(edges));
}

EprComplex complete_complex(int n) {
  if (n < 1) {
    fail(ErrorCode::InvalidArgument,
         "complete complex needs at least 1 object, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return make_complex(n, iota_objects(n), std::move(edges));
}

EprComplex path_complex(int n) {
  if (n < 1) {
    fail(ErrorCode::InvalidArgument,
         "path needs at least 1 object, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_complex(n, iota_objects(n), std::move(edges));
}

EprComplex star_complex(int n) {
  if (n < 2) {
    fail(ErrorCode::InvalidArgument,
         "star needs at least 2 objects, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return make_complex(n, iota_objects(n), std::move(edges));
}

EprComplex edgeless_complex(int n) {
  if (n < 0) {
    fail(ErrorCode::InvalidArgument,
         "edgeless complex needs a non-negative size, got " +
             std::to_string(n));
  }
  return make_complex(n, iota_objects(n), {});
}

EprComplex gnp_complex(int n, double p, std::uint64_t seed) {
  if (n < 0) {
    fail(ErrorCode::InvalidArgument,
         "gnp complex needs a non-negative size, got " + std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "gnp probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  // One draw per pair in lexicographic pair order keeps output a pure
  // function of (n, p, seed).
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.next_double() < p) edges.emplace_back(a, b);
    }
  }
  return make_complex(n, iota_objects(n), std::move(edges));
}

std::vector<EprComplex> enumerate_universe(int n_phi, int max_n_phi) {
  if (n_phi < 0) {
    fail(ErrorCode::InvalidArgument,
         "n_phi must be non-negative, got " + std::to_string(n_phi));
  }
  if (n_phi > max_n_phi) {
    fail(ErrorCode::UniverseTooLarge,
         "universe of size " + std::to_string(n_phi) +
             " exceeds the enumeration limit of " + std::to_string(max_n_phi));
  }
  std::vector<EprComplex> out;
  for (std::uint32_t obj_mask = 0; obj_mask < (1U << n_phi); ++obj_mask) {
    std::vector<ObjectId> objects;
    for (int o = 0; o < n_phi; ++o) {
      if (obj_mask & (1U << o)) objects.push_back(o);
    }
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      for (std::size_t j = i + 1; j < objects.size(); ++j) {
        pairs.emplace_back(objects[i], objects[j]);
      }
    }
    for (std::uint64_t edge_mask = 0; edge_mask < (1ULL << pairs.size());
         ++edge_mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (edge_mask & (1ULL << i)) edges.push_back(pairs[i]);
      }
      EprComplex c;
      c.n_phi = n_phi;
      c.objects = objects;
      c.edges = std::move(edges);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace epr
