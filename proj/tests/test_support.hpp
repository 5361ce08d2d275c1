#pragma once

#include <functional>

#include "epr/complex.hpp"
#include "epr/error.hpp"

namespace epr::testing {

inline bool fails_with(ErrorCode code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// Outer 5-cycle, spokes, inner pentagram.
inline EprComplex petersen_complex() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  std::vector<ObjectId> objects(10);
  for (int i = 0; i < 10; ++i) objects[i] = i;
  return make_complex(10, std::move(objects), std::move(edges));
}

}  // namespace epr::testing
