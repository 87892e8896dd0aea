#pragma once

#include "ckforest/lincomb.hpp"

namespace ckforest {

/// Attach every root of g as a new child of the vertex v of f.
/// Throws std::invalid_argument on an invalid vertex.
Forest graft_at(const Forest& f, const VertexId& v, const Forest& g);

/// PreLie grafting product: f * g summed over all vertices of f
/// (vertex_count(f) summands before collection), extended bilinearly.
LinComb prelie(const Forest& f, const Forest& g);
LinComb prelie(const LinComb& a, const LinComb& b);

/// Growth operator N(x) = x grafted with a single vertex: on a forest,
/// the sum over all ways to add one new leaf.
LinComb growth_N(const LinComb& x);

}  // namespace ckforest
