#pragma once

#include "epr/complex.hpp"
#include "epr/perm_group.hpp"

namespace epr {

// Realizes a finite group as the full automorphism group of a complex.
// Construction: right-multiplication Cayley graph on the group's generator
// list, with each arc x -> x*g_i replaced by a tagged gadget
//
//   x -- a -- b -- y,   tail of length 2i+2 at a, tail of length 2i+3 at b
//
// so generator identity and arc direction are both encoded in tail lengths.
// The trivial group yields a single-vertex complex. Elements are enumerated
// breadth-first; orders above max_order raise GroupTooLarge.
EprComplex frucht_realize(const PermGroup& g, std::uint64_t max_order = 720);

}  // namespace epr
