#pragma once

#include <map>
#include <string>
#include <vector>

#include "ckforest/hopf.hpp"
#include "ckforest/prelie.hpp"

namespace ckforest {

/// Exponent tuple (i1,...,in) of a delta-monomial, stored at full length n
/// with explicit trailing zeros; valid when sum k*i_k = n.
using IndexSeq = std::vector<int>;

bool valid_index_seq(const IndexSeq& idx);
/// All valid sequences of order n in lexicographic order (one per
/// partition of n, part k appearing i_k times).
std::vector<IndexSeq> index_seqs(int n);

/// Generators: delta_1 is the single vertex, delta_n = N(delta_{n-1}).
/// Homogeneous of degree n with positive coefficients; the returned
/// reference stays valid for the life of the process.
const LinComb& delta(int n);
Tensor delta_coproduct(int n);

/// delta_1^{i1} ... delta_n^{in} expanded in the forest basis.
LinComb monomial_forest_expansion(const IndexSeq& idx);

enum class CoeffMethod { extraction, recursion, closed_form };
std::string to_string(CoeffMethod m);

struct CoeffTable {
    int n = 0;
    CoeffMethod method = CoeffMethod::extraction;
    std::map<IndexSeq, BigInt> entries;

    bool same_entries(const CoeffTable& o) const { return entries == o.entries; }
};

/// Antipode coefficients of the order-n generator, solved from the exact
/// linear system S(delta_n) = sum a_idx * monomial(idx) over the forest
/// basis. Throws if the system is rank deficient, inconsistent, or the
/// solution is not integral.
CoeffTable extract_coefficients(int n);

/// The inductive rule: -1 when i_n = 1, otherwise
///   a = sum_{j>=2, i_j>=1} (i_{j-1}+1) a(..., i_{j-1}+1, i_j-1, ...)
///       - (n-1)[i_1>=1] a(i_1-1, i_2, ...),
/// with the right-hand sequences re-normalized to length n-1. Memoized.
BigInt coeff_recursion(const IndexSeq& idx);
CoeffTable coeff_recursion_table(int n);

/// b = (-1)^{i1+...+in} a / (n-1)!
BigRat b_normalize(const IndexSeq& idx, const BigInt& a);

}  // namespace ckforest
