#include "epr/frucht.hpp"

#include <map>

#include "epr/error.hpp"

namespace epr {

EprComplex frucht_realize(const PermGroup& g, std::uint64_t max_order) {
  StabilizerChain chain(g);
  std::vector<Permutation> elements = chain.elements(max_order);
  const int order = static_cast<int>(elements.size());

  if (g.generators.empty()) {
    return make_complex(1, {0}, {});
  }

  std::map<Permutation, int> index;
  for (int i = 0; i < order; ++i) index[elements[i]] = i;

  // Objects 0..order-1 are the group elements in enumeration order; gadget
  // objects are appended as they are created.
  std::vector<Edge> edges;
  int next_object = order;
  auto fresh = [&next_object] { return next_object++; };
  auto tail = [&](int at, int length) {
    int prev = at;
    for (int step = 0; step < length; ++step) {
      int node = fresh();
      edges.emplace_back(prev, node);
      prev = node;
    }
  };

  for (int x = 0; x < order; ++x) {
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      int y = index.at(elements[x].then(g.generators[i]));
      int a = fresh();
      int b = fresh();
      edges.emplace_back(x, a);
      edges.emplace_back(a, b);
      edges.emplace_back(b, y);
      tail(a, 2 * static_cast<int>(i) + 2);
      tail(b, 2 * static_cast<int>(i) + 3);
    }
  }

  std::vector<ObjectId> objects(next_object);
  for (int o = 0; o < next_object; ++o) objects[o] = o;
  return make_complex(next_object, std::move(objects), std::move(edges));
}

}  // namespace epr
