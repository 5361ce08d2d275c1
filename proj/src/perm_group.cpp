#include "epr/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "epr/error.hpp"

namespace epr {

Permutation::Permutation(int degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x]) {
      fail(ErrorCode::InvalidPermutation,
           "image list is not a permutation of 0.." +
               std::to_string(images_.size() - 1));
    }
    seen[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& other) const {
  if (degree() != other.degree()) {
    fail(ErrorCode::InvalidPermutation,
         "cannot compose permutations of degrees " + std::to_string(degree()) +
             " and " + std::to_string(other.degree()));
  }
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x) images[x] = other.images_[images_[x]];
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x) images[images_[x]] = x;
  Permutation result;
  result.images_ = std::move(images);
  return result;
}

PermGroup make_group(int degree, std::vector<Permutation> generators) {
  if (degree < 0) {
    fail(ErrorCode::InvalidArgument,
         "degree must be non-negative, got " + std::to_string(degree));
  }
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      fail(ErrorCode::InvalidPermutation,
           "generator degree " + std::to_string(g.degree()) +
               " does not match group degree " + std::to_string(degree));
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::erase_if(generators,
                [](const Permutation& g) { return g.is_identity(); });
  return PermGroup{degree, std::move(generators)};
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree, false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < g.degree; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& gen : g.generators) {
        int y = gen(orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

StabilizerChain::StabilizerChain(const PermGroup& g) : degree_(g.degree) {
  for (const auto& gen : g.generators) {
    auto [residue, level] = sift(gen);
    if (!residue.is_identity()) add_generator(residue, level);
  }
  close();
}

void StabilizerChain::extend_orbit(std::size_t level) {
  Level& lv = levels_[level];
  // The level acts with every strong generator fixing base_[0..level-1],
  // which is exactly the gens stored at this level and deeper. BFS from the
  // base point, transversals rebuilt from scratch whenever that set grows so
  // the result depends only on the final set.
  lv.transversal.assign(degree_, Permutation());
  lv.orbit.clear();
  lv.orbit.push_back(lv.point);
  lv.transversal[lv.point] = Permutation(degree_);
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    int delta = lv.orbit[i];
    for (std::size_t l = level; l < levels_.size(); ++l) {
      for (const auto& s : levels_[l].gens) {
        int image = s(delta);
        if (lv.transversal[image].degree() == 0) {
          lv.transversal[image] = lv.transversal[delta].then(s);
          lv.orbit.push_back(image);
        }
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(
    const Permutation& p) const {
  Permutation residue = p;
  std::size_t level = 0;
  for (; level < levels_.size(); ++level) {
    const Level& lv = levels_[level];
    int image = residue(lv.point);
    if (lv.transversal[image].degree() == 0) break;
    residue = residue.then(lv.transversal[image].inverse());
  }
  return {residue, level};
}

void StabilizerChain::add_generator(const Permutation& p, std::size_t level) {
  if (level == levels_.size()) {
    // New deepest level; its base point is the least point the residue moves.
    int point = 0;
    while (p(point) == point) ++point;
    levels_.push_back(Level{point, {}, {}, {}});
    base_.push_back(point);
  }
  levels_[level].gens.push_back(p);
  // The new generator acts at its own level and every shallower one, so all
  // of those orbits can grow. Rebuilding eagerly keeps sift exact.
  for (std::size_t l = 0; l <= level; ++l) extend_orbit(l);
}

void StabilizerChain::close() {
  // Schreier's lemma: the chain is complete once u_delta s u_{s(delta)}^{-1}
  // sifts to the identity for every level, orbit point delta, and generator s
  // acting there. Each placed residue strictly enlarges a stabilizer, so the
  // rescan terminates.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t level = 0; level < levels_.size() && !grew; ++level) {
      for (std::size_t i = 0; !grew && i < levels_[level].orbit.size(); ++i) {
        int delta = levels_[level].orbit[i];
        for (std::size_t l = level; !grew && l < levels_.size(); ++l) {
          for (std::size_t si = 0; si < levels_[l].gens.size(); ++si) {
            const Permutation& s = levels_[l].gens[si];
            Permutation schreier =
                levels_[level].transversal[delta].then(s).then(
                    levels_[level].transversal[s(delta)].inverse());
            auto [residue, at] = sift(schreier);
            if (!residue.is_identity()) {
              add_generator(residue, at);
              grew = true;
              break;
            }
          }
        }
      }
    }
  }
}

BigInt StabilizerChain::order() const {
  BigInt order = 1;
  for (const auto& lv : levels_) order *= static_cast<int>(lv.orbit.size());
  return order;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift(p);
  (void)level;
  return residue.is_identity();
}

std::vector<int> StabilizerChain::basic_orbit(std::size_t level) const {
  if (level >= levels_.size()) {
    fail(ErrorCode::IndexOutOfRange,
         "chain has " + std::to_string(levels_.size()) + " levels");
  }
  std::vector<int> orbit = levels_[level].orbit;
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<Permutation> StabilizerChain::elements(
    std::uint64_t max_size) const {
  if (order() > max_size) {
    fail(ErrorCode::GroupTooLarge,
         "group of order " + order().str() + " exceeds the limit of " +
             std::to_string(max_size));
  }
  std::vector<Permutation> gens;
  for (const auto& lv : levels_) {
    gens.insert(gens.end(), lv.gens.begin(), lv.gens.end());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::set<Permutation> seen;
  std::vector<Permutation> out;
  std::deque<Permutation> queue;
  Permutation identity(degree_);
  seen.insert(identity);
  queue.push_back(identity);
  while (!queue.empty()) {
    Permutation current = queue.front();
    queue.pop_front();
    out.push_back(current);
    for (const auto& g : gens) {
      Permutation next = current.then(g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return out;
}

BigInt group_order(const PermGroup& g) {
  return StabilizerChain(g).order();
}

}  // namespace epr
