#pragma once

/** @file tensor.hpp
 *  The n-fold tensor power of the natural representation, its word basis
 *  N_mu = v_{mu_1} x ... x v_{mu_n}, the quantum-group action through the
 *  coproduct D(E_i) = 1 x E_i + E_i x K_i^{-1}, D(F_i) = K_i x F_i + F_i x 1,
 *  and the bar involution on the completed tensor square (n = 2) with its
 *  canonical and dual canonical bases.
 *
 *  Completion bookkeeping: infinite sums are truncated by the word key
 *  key(mu) = sum_r r*mu_r.  Every correction term the n = 2 bar involution
 *  produces has key strictly larger than its source, so truncation at
 *  key < cutoff commutes with bar below the cutoff and bar remains an exact
 *  involution there.
 */

#include "qnchar/laurent.hpp"
#include "qnchar/weights.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qnchar {

/** A finite Z[q,q^{-1}]-combination of word vectors N_mu (fixed n). */
class TensorVector {
 public:
  TensorVector() = default;

  static TensorVector basis(const Weight& mu) {
    TensorVector v;
    v.terms_[mu] = Laurent::one();
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Weight, Laurent>& terms() const { return terms_; }

  Laurent coeff(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? Laurent::zero() : it->second;
  }

  void add(const Weight& mu, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
      terms_[mu] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorVector& operator+=(const TensorVector& o) {
    for (const auto& [mu, c] : o.terms_) add(mu, c);
    return *this;
  }
  friend TensorVector operator+(TensorVector a, const TensorVector& b) {
    return a += b;
  }
  TensorVector operator-() const {
    TensorVector r;
    for (const auto& [mu, c] : terms_) r.terms_[mu] = -c;
    return r;
  }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) {
    return a += -b;
  }
  TensorVector scaled(const Laurent& f) const {
    TensorVector r;
    if (!f.is_zero())
      for (const auto& [mu, c] : terms_) r.terms_[mu] = c * f;
    return r;
  }

  bool operator==(const TensorVector&) const = default;

  /** Drop all terms with key(mu) >= cutoff. */
  TensorVector truncated(long long cutoff) const;

  /** Apply the coefficient bar q -> q^{-1} termwise (the antilinear part of
   *  module bar involutions; basis-vector corrections are separate). */
  TensorVector coeff_bar() const {
    TensorVector r;
    for (const auto& [mu, c] : terms_) r.terms_[mu] = c.bar();
    return r;
  }

 private:
  std::map<Weight, Laurent> terms_;
};

/** key(mu) = sum_r r*mu_r with r = 1..n: the grading used to truncate
 *  completed sums.  Bruhat-smaller words have strictly larger keys.
 */
long long word_key(const Weight& mu);

/* ------------------------------------------------------- rank-one action
 * E_0 v_a = d_{a,0}(q+q^{-1}) v_{-1} + d_{a,1} v_0
 * E_i v_a = d_{a,i+1} v_i + d_{a,-i} v_{-i-1}          (i > 0)
 * F_0 v_a = d_{a,0}(q+q^{-1}) v_1 + d_{a,-1} v_0
 * F_i v_a = d_{a,i} v_{i+1} + d_{a,-i-1} v_{-i}        (i > 0)
 * K_i v_a = q^{(alpha_i, eps_a)} v_a
 */
std::vector<std::pair<int, Laurent>> act_E_letter(int i, int a);
std::vector<std::pair<int, Laurent>> act_F_letter(int i, int a);

/** Exponent e with K_i v_a = q^e v_a. */
int k_exponent_letter(int i, int a);

/** Exponent e with K_i N_mu = q^e N_mu, i.e. (alpha_i, wt(mu)). */
int k_exponent(int i, const Weight& mu);

/** E_i, F_i and K_i^{sign} acting on word vectors through the coproduct. */
TensorVector act_E(int i, const TensorVector& v);
TensorVector act_F(int i, const TensorVector& v);
TensorVector act_K(int i, int sign, const TensorVector& v);

/** omega(N_mu) = N_{-w0 mu}: intertwines E_i with F_i and inverts K_i. */
TensorVector omega_tensor(const TensorVector& v);

/* --------------------------------------------- completed tensor square */

/** Bar involution on the completed tensor square, exact below the cutoff.
 *  Pre: every term has n = 2 and key < cutoff.
 */
TensorVector bar_n2(const TensorVector& v, long long cutoff);

/** The canonical basis vector of the completed tensor square indexed by mu:
 *  the unique bar-invariant element equal to N_mu plus a qZ[q]-combination
 *  of Bruhat-smaller words.  Closed form; always a finite sum for n = 2.
 */
TensorVector t2_closed(const Weight& mu);

/** Expansion of the rescaled word vector M_lam = (q+q^{-1})^{-z} N_lam in
 *  the dual canonical basis: coefficient of the dual basis vector at mu is
 *  the bar of the coefficient of N_{-lam} in t2_closed(-mu).  All nonzero
 *  entries have |mu_r| <= max(|lam_1|,|lam_2|) + 2, which the scan covers.
 */
std::map<Weight, Laurent> m2_in_L(const Weight& lam);

}  // namespace qnchar
