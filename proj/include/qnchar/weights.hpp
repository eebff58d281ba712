#pragma once

/** @file weights.hpp
 *  Integer weights for q(n), the type-b_infinity weight lattice, and the
 *  partial orders that organize blocks.
 *
 *  A weight is a tuple (l_1,...,l_n) in Z^n.  Dominant weights are weakly
 *  decreasing with repeated entries allowed only at 0; they index the
 *  irreducible representations and the wedge basis.  Every weight maps to
 *  the lattice P = (+) Z eps_i via wt(l) = eps_{l_1} + ... + eps_{l_n},
 *  with eps_0 = 0 and eps_{-i} = -eps_i; equal images mean equal blocks.
 *  The simple roots are a_0 = -eps_1 and a_i = eps_i - eps_{i+1} (i >= 1).
 */

#include <map>
#include <string>
#include <vector>

namespace qnchar {

using Weight = std::vector<int>;

/** A finitely supported element of P, stored as index i >= 1 -> coefficient
 *  of eps_i; zero coefficients are omitted.
 */
using LatticeElt = std::map<int, int>;

/** Weakly decreasing with repeats only at zero. */
bool is_dominant(const Weight& lam);

/** Throws std::invalid_argument unless is_dominant(lam). */
void require_dominant(const Weight& lam);

/** wt(l) = sum_r eps_{l_r} in P. */
LatticeElt wt(const Weight& lam);

/** The partial image sum_{s >= r} eps_{l_s} (r is 1-based; r = 1 gives wt). */
LatticeElt wt_tail(const Weight& lam, int r);

/** Dominance order on P: beta <= gamma iff gamma - beta is a nonnegative
 *  integer combination of the simple roots a_0, a_1, ...  Equivalently
 *  (solving the triangular system from the top index down), with
 *  d = gamma - beta:  for every j >= 0, sum_{i > j} d_i <= 0.
 */
bool dominance_leq_P(const LatticeElt& beta, const LatticeElt& gamma);

/** wt(a) == wt(b): same central character, hence same block. */
bool same_block(const Weight& a, const Weight& b);

/** Bruhat order on weights of equal length: lam <= mu iff wt(lam) = wt(mu)
 *  and wt_tail(lam, r) <= wt_tail(mu, r) in P-dominance for every r.
 */
bool bruhat_leq(const Weight& lam, const Weight& mu);

/** GL-type dominance on Z^n: lam <= mu iff both sum to the same total and
 *  every prefix sum of mu - lam is >= 0.  On a fixed block, bruhat_leq
 *  refines this order.
 */
bool gl_dominance_leq(const Weight& lam, const Weight& mu);

enum class Reach { Reachable, Unreachable, FuelExhausted };

/** Breadth-first search for `to` starting from `from` using the two
 *  down-moves: (i) swap entries l_r > l_s with r < s; (ii) for r < s with
 *  l_r + l_s = 0, replace them by (l_r - 1, l_s + 1).  Intermediate tuples
 *  need not be dominant.  `fuel` bounds the number of node expansions; a
 *  diagnostic probe only (descent chains can be infinite), never used as a
 *  dependency by the order predicates.
 */
Reach downarrow_reachable(const Weight& from, const Weight& to, long long fuel);

/** All dominant mu with wt(mu) = wt(lam) and mu <= lam in the Bruhat order,
 *  sorted descending-lexicographically (so lam itself comes first).  The
 *  candidate space is finite: gl-dominance confines entries to
 *  [lam_n, lam_1] with fixed sum; enumeration is a DFS over weakly
 *  decreasing tuples with prefix-sum pruning.
 */
std::vector<Weight> lower_block_set(const Weight& lam);

/** Number of zero entries z(lam). */
int count_zeros(const Weight& lam);

/** Number of nonzero entries h(lam). */
int count_nonzeros(const Weight& lam);

/** Degree of atypicality: twice the number of cancelling pairs {v, -v}
 *  (v > 0) plus the number of zeros; equals n minus the l1-size of wt(lam).
 *  Typical weights (atypicality <= 1) are exactly those whose wedge basis
 *  vector is already bar-invariant.
 */
int atypicality(const Weight& lam);

/** True iff atypicality(lam) <= 1. */
bool is_typical(const Weight& lam);

/** Reversal (l_n, ..., l_1): the longest-element action on tuples. */
Weight w0(const Weight& lam);

/** Entrywise negation. */
Weight negate(const Weight& lam);

/** (-l_n, ..., -l_1): dominant whenever lam is. */
Weight neg_w0(const Weight& lam);

Weight sorted_descending(Weight lam);

/** Descending lexicographic comparator: a linear extension of gl-dominance
 *  (hence of Bruhat) on equal-sum dominant sets; used to index triangular
 *  matrices so that the diagonal is 1 with zeros below.
 */
bool dlex_greater(const Weight& a, const Weight& b);

/** All dominant weights of length n with entries in [lo, hi]. */
std::vector<Weight> dominant_weights(int n, int lo, int hi);

}  // namespace qnchar
