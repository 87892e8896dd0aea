#pragma once

#include "ckforest/lincomb.hpp"

namespace ckforest {

/// Cut coproduct. Multiplicative on forests, Delta(1) = 1 (x) 1, and on a
/// tree B(F): Delta(B(F)) = 1 (x) B(F) + (B (x) Id) Delta(F), i.e. the
/// trunk stays in the left slot and the pruned forest in the right one.
/// The forest form returns a reference into the write-once cache.
const Tensor& coproduct(const Forest& f);
Tensor coproduct(const LinComb& x);

/// Coefficient of the empty forest.
BigInt counit(const LinComb& x);

/// Delta(x) - x (x) 1 - 1 (x) x on the augmentation ideal; rejects
/// arguments with nonzero counit.
Tensor reduced_coproduct(const LinComb& x);

/// Antipode via S(a) = -a - S(a')a'' over the reduced coproduct.
const LinComb& antipode_recursive(const Forest& f);
LinComb antipode_recursive(const LinComb& x);

/// Antipode via the alternating Takeuchi sum
/// S(a) = sum_{k>=1} (-1)^k m_k(Delta~^{(k-1)}(a)) on the augmentation
/// ideal, extended by S(1) = 1. Kept independent of the recursive route.
LinComb antipode_takeuchi(const LinComb& x);

/// Grafting operator: a forest becomes the tree with its trees as root
/// subtrees (B(1) is the single vertex).
Forest graft_B(const Forest& f);
LinComb graft_B(const LinComb& x);

}  // namespace ckforest
