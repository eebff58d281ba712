#pragma once

/** @file crystal.hpp
 *  Combinatorial crystal operators on integer tuples.
 *
 *  Three interlocking structures on the index sets of the bases downstream:
 *
 *   - the word crystal on Z^n (basis N_lambda of the n-fold tensor power):
 *     operators read an i-signature, cancel +- pairs, and move the surviving
 *     extremal letter;
 *   - the dual crystal on Z^n (basis L_lambda): same signatures, dual
 *     cancellation -+, opposite extremal letters; related to the word
 *     crystal by E*_i(l) = -F'_i(-l) etc.;
 *   - the crystal on dominant tuples (bases F_lambda / U_lambda of the wedge
 *     space): conjugation of the word crystal by the reversal w0, which on
 *     dominant tuples agrees with the restriction of the dual crystal.
 *
 *  All i-strings on dominant tuples have length <= 2.
 */

#include "qnchar/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qnchar {

/** One slot of an i-signature.  For i != 0 a slot holds at most one letter;
 *  for i = 0 a slot holds two (read left to right).
 */
enum class SigToken { None, Plus, Minus, PlusPlus, MinusPlus, MinusMinus };

/** The i-signature (sigma_1,...,sigma_n) of a tuple:
 *  for i != 0: '+' if l_r = i or -i-1, '-' if l_r = i+1 or -i,
 *  for i == 0: '++' if l_r = -1, '-+' if l_r = 0, '--' if l_r = 1.
 */
std::vector<SigToken> signature(const Weight& lam, int i);

std::string token_string(SigToken t);

/** The surviving letters of a reduced signature: 1-based slot indices of the
 *  uncancelled minus and plus letters, each in word order.
 */
struct ReducedSig {
  std::vector<int> minus_slots;
  std::vector<int> plus_slots;
};

/** Cancel "+ then -" pairs (a minus cancels the nearest pending plus to its
 *  left) until no minus remains to the right of a plus.
 */
ReducedSig reduce_signature(const Weight& lam, int i);

/** Dual reduction: first rewrite every '-+' slot as '+-', then cancel
 *  "- then +" pairs until no plus remains to the right of a minus.
 */
ReducedSig reduce_signature_dual(const Weight& lam, int i);

/* ----------------------------------------------------------- word crystal */

/** Lower the tuple at the slot of the rightmost surviving '-', or nothing. */
std::optional<Weight> crystal_word_E(const Weight& lam, int i);
/** Raise the tuple at the slot of the leftmost surviving '+', or nothing. */
std::optional<Weight> crystal_word_F(const Weight& lam, int i);
/** Number of surviving minus letters. */
int crystal_word_eps(const Weight& lam, int i);
/** Number of surviving plus letters. */
int crystal_word_phi(const Weight& lam, int i);

/* ----------------------------------------------------------- dual crystal */

/** Lower at the slot of the leftmost surviving '-' (dual reduction). */
std::optional<Weight> crystal_dual_E(const Weight& lam, int i);
/** Raise at the slot of the rightmost surviving '+' (dual reduction). */
std::optional<Weight> crystal_dual_F(const Weight& lam, int i);
int crystal_dual_eps(const Weight& lam, int i);
int crystal_dual_phi(const Weight& lam, int i);

/* ----------------------------------------- crystal on dominant tuples Z^n_+ */

/** w0-conjugated word operator: E(l) = w0 E_word(w0 l).  Pre: dominant. */
std::optional<Weight> crystal_dom_E(const Weight& lam, int i);
std::optional<Weight> crystal_dom_F(const Weight& lam, int i);
int crystal_dom_eps(const Weight& lam, int i);
int crystal_dom_phi(const Weight& lam, int i);

/** The simple root alpha_i in P: alpha_0 = -eps_1, alpha_i = eps_i-eps_{i+1}. */
LatticeElt simple_root(int i);

}  // namespace qnchar
