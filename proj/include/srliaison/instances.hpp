#pragma once

#include "srliaison/graph.hpp"
#include "srliaison/simplicial.hpp"

namespace srl {
namespace instances {

/// Triangulation of the real projective plane on six vertices (the ideal with
/// ten degree-3 generators; height 3, Cohen-Macaulay over Q only).
MonomialIdeal rp2_ideal();

/// The second six-vertex example: shellable, Cohen-Macaulay, not weakly
/// vertex decomposable. Ten degree-3 generators, height 3.
MonomialIdeal six_vertex_ideal();

/// C_16(1,4,8).
Graph circulant16();

/// The matching graph on four vertices whose edge ideal is (x1*x3, x2*x4);
/// its independence complex is the 4-cycle.
Graph matching4();

}  // namespace instances
}  // namespace srl
