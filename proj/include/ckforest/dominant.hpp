#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckforest/cm_coeffs.hpp"
#include "ckforest/multipoly.hpp"

namespace ckforest {

/// Tail (i2,...,in) of an index sequence; entries[j] holds i_{j+2}.
using TailSeq = std::vector<int>;
/// Tail truncated at its last nonzero entry; empty for the all-zero tail.
using DominantSeq = std::vector<int>;

/// omega = 1*i2 + 2*i3 + ... + (n-1)*i_n - 1, with the two conventions
/// omega(()) = 0 and omega((1)) = 1.
int weight(const TailSeq& tail);

DominantSeq dominant(const TailSeq& tail);
bool is_dominant(const TailSeq& tail);

/// All dominant sequences of the given weight (one per partition of
/// weight+1, part p contributing to entry i_{p+1}).
std::vector<DominantSeq> dominant_seqs_of_weight(int w);

/// The polynomial family attached to dominant sequences:
///   P_() = 1, P_(1) = X1, P_(2) = (X1-2)(X1-1), P_(0,1) = X1-1,
/// and for weight >= 2 otherwise
///   P_t = sum_{j>=3, i_j>=1} (i_{j-1}+1) P_{dominant(bump j-1, drop j)}
///       + [i_2>=1] (X_omega - 2 i_2 - ... - n i_n + 2) P_{dominant(i_2-1,...)}.
/// Memoized.
MultiPoly poly_P(const DominantSeq& d);

/// True iff P_d vanishes at every strictly increasing integer tuple
/// 1 <= p_1 < ... < p_N <= bound with N = weight(d). The one-argument
/// form uses the vanishing bound 2 i_2 + ... + n i_n - 2.
bool lemma26_check(const DominantSeq& d, int bound);
bool lemma26_check(const DominantSeq& d);

/// Closed form
///   a = (-1)^{i1+...+in} (n-1)! sum_{1<=p_1<...<p_N<=n-1} P(p)/(p_1...p_N),
/// N the tail weight; evaluated in exact rational arithmetic and required
/// to come out integral.
BigInt coeff_closed_form(const IndexSeq& idx);
CoeffTable coeff_closed_form_table(int n);

/// Iterated harmonic sum over 1 <= p_1 < ... < p_k <= n; k = 0 gives 1
/// (empty product), k > n gives 0.
BigRat harmonic(int n, int k);

/// Closed form of a coefficient family as polynomial + harmonic terms:
///   b(n) = sum_j poly[j] n^j + sum_l (sum_j hcoef[l-1][j] n^j) H_{n-1}^{(l)}.
struct HarmonicForm {
    DominantSeq tail;
    int degree = 0;  // j ranges over 0..degree
    int depth = 0;   // l ranges over 1..depth
    std::vector<BigRat> poly;
    std::vector<std::vector<BigRat>> hcoef;

    BigRat evaluate(int n) const;
    bool operator==(const HarmonicForm& o) const = default;
};

struct FitResult {
    bool ok = false;
    HarmonicForm form;
    std::string message;
};

/// Smallest order carrying the family: n with i_1 = 0.
int family_min_order(const DominantSeq& tail);
/// b value of the family member of order n (i_1 = n - min order >= 0),
/// computed through the coefficient recursion.
BigRat family_b(const DominantSeq& tail, int n);

/// Fit b(n) for n in [n_min, n_max] against the ansatz with polynomial
/// degree sum(tail)+1 and harmonic depth weight(tail), then verify the
/// candidate on 5 held-out orders beyond n_max. Sample count must exceed
/// the ansatz dimension.
FitResult fit_harmonic_form(const DominantSeq& tail, int n_min, int n_max);

/// Checks b_{(n-k,0,...,0,1,0,...)} (the 1 in position k) against
/// n - 1 - sum_{i=1}^{k-2} H_{n-1}^{(i)} for k <= n <= n_max.
bool ladder_identity_check(int k, int n_max, std::string* witness = nullptr);

}  // namespace ckforest
