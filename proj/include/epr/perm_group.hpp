#pragma once

#include <cstdint>
#include <vector>

#include "epr/complex.hpp"

namespace epr {

// Permutation of {0, ..., degree-1} in one-line notation. Composition is
// left-to-right: a.then(b) maps x to b[a[x]].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  // Lexicographic on images; gives generating sets a canonical order.
  bool operator<(const Permutation& other) const {
    return images_ < other.images_;
  }

 private:
  std::vector<int> images_;
};

struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;  // deduplicated, identity omitted
};

PermGroup make_group(int degree, std::vector<Permutation> generators);

// Orbits of the natural action, each ascending, ordered by least element.
std::vector<std::vector<int>> orbits(const PermGroup& g);

// Stabilizer chain built by the Schreier-Sims procedure with sifting.
// Points are chosen deterministically (least moved point), so the chain,
// and everything derived from it, is a pure function of the generators.
class StabilizerChain {
 public:
  explicit StabilizerChain(const PermGroup& g);

  BigInt order() const;
  bool contains(const Permutation& p) const;
  const std::vector<int>& base() const { return base_; }
  // Orbit of base_[level] under the level's stabilizer generators.
  std::vector<int> basic_orbit(std::size_t level) const;
  std::size_t depth() const { return base_.size(); }

  // Every group element, BFS order from the identity; throws GroupTooLarge
  // when the order exceeds max_size.
  std::vector<Permutation> elements(std::uint64_t max_size) const;

 private:
  struct Level {
    int point = 0;
    // Strong generators first placed at this level. They fix every shallower
    // base point; the level's action uses these plus all deeper levels' gens.
    std::vector<Permutation> gens;
    // transversal[delta] maps point -> delta; empty degree marks absence.
    std::vector<Permutation> transversal;
    std::vector<int> orbit;  // insertion order, starts at point
  };

  void extend_orbit(std::size_t level);
  // Strips p through the chain; returns the residue and the level reached.
  std::pair<Permutation, std::size_t> sift(const Permutation& p) const;
  void add_generator(const Permutation& p, std::size_t level);
  // Sifts Schreier generators until every one reduces to the identity.
  void close();

  int degree_ = 0;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

BigInt group_order(const PermGroup& g);

}  // namespace epr
