#include "epr/automorphisms.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "epr/error.hpp"

namespace epr {

namespace {

constexpr int kNoJump = std::numeric_limits<int>::max();

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Backtracking search over ordered partitions of the position set.
class AutSearch {
 public:
  explicit AutSearch(const EprComplex& e) : n_(e.object_count()) {
    words_ = (n_ + 63) / 64;
    adj_.assign(n_, std::vector<std::uint64_t>(words_, 0));
    auto lists = e.adjacency();
    for (int u = 0; u < n_; ++u) {
      for (int v : lists[u]) adj_[u][v / 64] |= 1ULL << (v % 64);
    }
  }

  PermGroup run() {
    if (n_ == 0) return make_group(0, {});
    Dsu dsu(n_);
    dsu_ = &dsu;
    std::vector<std::vector<int>> root{std::vector<int>(n_)};
    std::iota(root[0].begin(), root[0].end(), 0);
    std::uint64_t inv = refine(root);
    descend(root, inv, 0, true);
    return make_group(n_, generators_);
  }

 private:
  bool edge(int u, int v) const { return adj_[u][v / 64] & (1ULL << (v % 64)); }

  // Count of neighbors of u inside the cell marked by mask.
  int degree_in(int u, const std::vector<std::uint64_t>& mask) const {
    int count = 0;
    for (int w = 0; w < words_; ++w) {
      count += __builtin_popcountll(adj_[u][w] & mask[w]);
    }
    return count;
  }

  std::vector<std::uint64_t> cell_mask(const std::vector<int>& cell) const {
    std::vector<std::uint64_t> mask(words_, 0);
    for (int v : cell) mask[v / 64] |= 1ULL << (v % 64);
    return mask;
  }

  // Splits cells against cells until equitable; returns an
  // isomorphism-invariant hash of the result (ordered cell sizes plus the
  // quotient degree matrix, both preserved by any relabeling that maps
  // corresponding cells to each other).
  std::uint64_t refine(std::vector<std::vector<int>>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        auto mask = cell_mask(cells[s]);
        for (std::size_t d = 0; d < cells.size() && !changed; ++d) {
          if (cells[d].size() <= 1) continue;
          std::map<int, std::vector<int>> groups;
          for (int v : cells[d]) groups[degree_in(v, mask)].push_back(v);
          if (groups.size() <= 1) continue;
          std::vector<std::vector<int>> split;
          for (auto& [count, members] : groups) split.push_back(members);
          cells.erase(cells.begin() + static_cast<long>(d));
          cells.insert(cells.begin() + static_cast<long>(d),
                       std::make_move_iterator(split.begin()),
                       std::make_move_iterator(split.end()));
          changed = true;
        }
      }
    }
    std::uint64_t h = 0xDEADBEEFCAFEF00DULL;
    std::vector<std::vector<std::uint64_t>> masks;
    masks.reserve(cells.size());
    for (const auto& cell : cells) masks.push_back(cell_mask(cell));
    for (const auto& cell : cells) {
      h = mix(h, cell.size());
      for (const auto& mask : masks) {
        h = mix(h, static_cast<std::uint64_t>(degree_in(cell[0], mask)));
      }
    }
    return h;
  }

  // First smallest non-singleton cell, or -1 when discrete.
  static int target_cell(const std::vector<std::vector<int>>& cells) {
    int best = -1;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() <= 1) continue;
      if (best < 0 || cells[i].size() < best_size) {
        best = static_cast<int>(i);
        best_size = cells[i].size();
      }
    }
    return best;
  }

  // Returns the depth to unwind to (kNoJump to keep exploring here).
  int descend(const std::vector<std::vector<int>>& cells, std::uint64_t inv,
              int depth, bool on_base) {
    if (base_established_) {
      if (static_cast<std::size_t>(depth) >= base_inv_.size() ||
          inv != base_inv_[depth]) {
        return kNoJump;  // no leaf below can match the base leaf
      }
    } else {
      base_inv_.push_back(inv);
    }

    int t = target_cell(cells);
    if (t < 0) {
      return handle_leaf(cells);
    }

    if (!base_established_) base_cand_.push_back(cells[t].front());

    std::vector<int> tried;
    for (int v : cells[t]) {
      bool base_child = on_base && !base_established_;
      if (base_established_ && on_base) {
        bool covered = false;
        for (int w : tried) {
          if (dsu_->find(v) == dsu_->find(w)) {
            covered = true;
            break;
          }
        }
        tried.push_back(v);
        if (covered) continue;
        base_child = v == base_cand_[depth];
      } else if (on_base && !base_established_) {
        tried.push_back(v);
      }

      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == t) {
          child.push_back({v});
          std::vector<int> rest;
          for (int u : cells[i]) {
            if (u != v) rest.push_back(u);
          }
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      std::uint64_t child_inv = refine(child);
      path_cand_.push_back(v);
      int jump = descend(child, child_inv, depth + 1, base_child);
      path_cand_.pop_back();
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int handle_leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> lab(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) lab[i] = cells[i][0];

    if (!base_established_) {
      base_established_ = true;
      base_lab_ = lab;
      return kNoJump;
    }

    // Candidate maps the base leaf onto this leaf position by position.
    std::vector<int> images(n_);
    for (int i = 0; i < n_; ++i) images[base_lab_[i]] = lab[i];
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (edge(u, v) != edge(images[u], images[v])) return kNoJump;
      }
    }
    generators_.emplace_back(images);
    for (int x = 0; x < n_; ++x) dsu_->unite(x, images[x]);
    // The current path left the base path at exactly one depth; everything
    // between there and this leaf is now covered by the new automorphism,
    // so unwind to that depth and resume its candidate loop.
    return divergence_depth();
  }

  int divergence_depth() const {
    for (std::size_t d = 0; d < path_cand_.size(); ++d) {
      if (d >= base_cand_.size() || path_cand_[d] != base_cand_[d]) {
        return static_cast<int>(d);
      }
    }
    return static_cast<int>(path_cand_.size());
  }

  int n_;
  int words_ = 0;
  std::vector<std::vector<std::uint64_t>> adj_;
  Dsu* dsu_ = nullptr;
  bool base_established_ = false;
  std::vector<std::uint64_t> base_inv_;
  std::vector<int> base_cand_;
  std::vector<int> path_cand_;
  std::vector<int> base_lab_;
  std::vector<Permutation> generators_;
};

}  // namespace

PermGroup automorphisms(const EprComplex& e) {
  return AutSearch(e).run();
}

namespace {

void brute_force_extend(const std::vector<std::vector<bool>>& adj,
                        std::vector<int>& images, std::vector<bool>& used,
                        std::vector<Permutation>& out) {
  const int n = static_cast<int>(adj.size());
  const int u = static_cast<int>(images.size());
  if (u == n) {
    out.emplace_back(images);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    bool consistent = true;
    for (int w = 0; w < u; ++w) {
      if (adj[u][w] != adj[v][images[w]]) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    used[v] = true;
    images.push_back(v);
    brute_force_extend(adj, images, used, out);
    images.pop_back();
    used[v] = false;
  }
}

}  // namespace

PermGroup brute_force_automorphisms(const EprComplex& e, int max_objects) {
  const int n = e.object_count();
  if (n > max_objects) {
    fail(ErrorCode::TooLargeForBruteForce,
         "brute force over " + std::to_string(n) +
             " objects exceeds the limit of " + std::to_string(max_objects));
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  auto lists = e.adjacency();
  for (int u = 0; u < n; ++u) {
    for (int v : lists[u]) adj[u][v] = true;
  }
  std::vector<int> images;
  std::vector<bool> used(n, false);
  std::vector<Permutation> all;
  brute_force_extend(adj, images, used, all);
  return make_group(n, std::move(all));
}

SymmetryScore symmetry_score(const EprComplex& e) {
  if (e.object_count() < 1) {
    fail(ErrorCode::InvalidArgument,
         "symmetry score needs at least one object");
  }
  SymmetryScore score;
  auto parts = orbits(automorphisms(e));
  score.orbit_count = static_cast<int>(parts.size());
  const int m = e.object_count();
  score.transitivity_fraction =
      m == 1 ? 1.0
             : 1.0 - static_cast<double>(score.orbit_count - 1) / (m - 1);
  return score;
}

}  // namespace epr
