#pragma once

/** @file canonical.hpp
 *  The canonical basis U_lam of the completed exterior power, computed by
 *  the typicalization recursion: a typical weight (no zero-sum entry pair)
 *  satisfies U_lam = F_lam, and otherwise a single crystal-compatible
 *  generator X_i and weight mu with U_lam = X_i U_mu are produced by a
 *  deterministic walk over the entry pairs of lam.  Also the closed-form
 *  q = 1 evaluation of the expansion coefficients, the dual-side bases
 *  E_lam / L_lam as finite matrices over a block, the explicit generator
 *  action on the E-basis, and the truncated expansion of E_lam in the
 *  rescaled word basis M_mu.
 */

#include "qnchar/laurent.hpp"
#include "qnchar/wedge.hpp"
#include "qnchar/weights.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qnchar {

/** One typicalization move: applying the operator (kind, node) to U_target
 *  yields U_source; target has atypicality <= that of source. */
struct TypicalizationStep {
  Weight source;
  Weight target;
  Gen kind;
  int node;
  bool operator==(const TypicalizationStep&) const = default;
};

/** Compute the step for an atypical dominant weight (#lam >= 2).
 *  Throws std::invalid_argument when lam is typical. */
TypicalizationStep typicalization_step(const Weight& lam);

/** The full finite F-expansion of U_lam; memoized across calls. */
WedgeVector ucb(const Weight& lam, const StraightenOptions& opts = {});

/** u_{mu,lam}(1) for all mu, by the closed pairing rule: pair the zero-sum
 *  entries of lam outermost-first (zeros innermost), walk the pairs
 *  assigning each its jump k from the unused positive integers, and sum a
 *  power of two over the 2^p subsets of jumped pairs. */
std::map<Weight, BigInt> ucb_q1_closed(const Weight& lam);

/** A finite matrix of Laurent coefficients between two ordered weight
 *  lists; entry(r, c) defaults to zero. */
struct BasisMatrix {
  std::vector<Weight> rows;
  std::vector<Weight> cols;
  std::map<std::pair<Weight, Weight>, Laurent> entries;

  Laurent entry(const Weight& r, const Weight& c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? Laurent::zero() : it->second;
  }
};

/** Columns are the F-expansions of U_lam for lam in the given list; rows
 *  are the columns plus every support weight encountered, ordered
 *  descending-lexicographically so the matrix is upper unitriangular. */
BasisMatrix u_matrix(const std::vector<Weight>& cols,
                     const StraightenOptions& opts = {});

/** The dual pair over the block below lam0 (ascending-lexicographic order,
 *  both upper unitriangular): e_in_l expands the E-basis in the L-basis,
 *  with entry(mu, lam) the bar of u_{-w0 lam, -w0 mu}; l_in_e is its
 *  inverse, whose off-diagonal entries lie in q^{-1}Z[q^{-1}]. */
struct ELMatrices {
  BasisMatrix e_in_l;
  BasisMatrix l_in_e;
};
ELMatrices e_l_matrices(const Weight& lam0, const StraightenOptions& opts = {});

/** E_i or F_i applied to E_lam, as a finite E-basis combination: one term
 *  per signature-admissible slot r with a dominant target, scaled by a
 *  power-of-q twist from the entries beyond r and, at doubled tokens, by
 *  (q+q^{-1}) sum_{s=0}^{z(lam)} (-q^{-2})^s. */
std::map<Weight, Laurent> act_on_E(Gen g, int i, const Weight& lam);

/** Coefficients of E_lam on the rescaled word vectors M_mu, for every mu
 *  with all |mu_r| <= bound: the coefficient at mu is the bar of the
 *  F_{-w0 lam}-coefficient of the straightened word -mu. */
std::map<Weight, Laurent> e_in_m_truncated(const Weight& lam, int bound,
                                           const StraightenOptions& opts = {});

}  // namespace qnchar
