#pragma once

/** @file wedge.hpp
 *  The quantum exterior power: the quotient of the n-fold tensor power by
 *  the two-sided ideal generated by
 *      v_a x v_a                                              (a != 0)
 *      v_a x v_b + q^2 v_b x v_a                              (a > b, a+b != 0)
 *      v_a x v_{-a} + q^2(v_{a-1} x v_{1-a} + v_{1-a} x v_{a-1})
 *                   + q^4 v_{-a} x v_a                        (a >= 2)
 *      v_1 x v_{-1} + q v_0 x v_0 + q^4 v_{-1} x v_1.
 *
 *  A word is a normal form iff it is weakly increasing with repeats only at
 *  the letter 0; reading it right-to-left gives a dominant weight lam, and
 *  the corresponding basis vector is F_lam = v_{lam_n} ^ ... ^ v_{lam_1}.
 *  straighten() rewrites an arbitrary word into this basis by orienting each
 *  relation at its leading (lexicographically largest) word; the rewriting
 *  system is confluent, so the chosen pair order does not matter.
 */

#include "qnchar/laurent.hpp"
#include "qnchar/tensor.hpp"
#include "qnchar/weights.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace qnchar {

/** Thrown when a rewriting step budget runs out; callers treat this as a
 *  resource error (CLI exit code 3), never as a wrong answer. */
class FuelExhaustedError : public std::runtime_error {
 public:
  explicit FuelExhaustedError(const std::string& what)
      : std::runtime_error(what) {}
};

/** Which violating adjacent pair to rewrite first.  All strategies produce
 *  the same normal form; having several is what lets tests check that. */
enum class RewriteStrategy { LeftmostFirst, RightmostFirst, RandomOrder };

struct StraightenOptions {
  RewriteStrategy strategy = RewriteStrategy::LeftmostFirst;
  long long fuel = 1000000;     /**< rewrite-step budget for one call */
  unsigned long long seed = 0;  /**< RNG seed, RandomOrder only */
  bool use_memo = true;         /**< cache normal forms of whole words */
};

/** A finite Z[q,q^{-1}]-combination of wedge basis vectors F_lam, keyed by
 *  dominant weights. */
class WedgeVector {
 public:
  WedgeVector() = default;

  static WedgeVector basis(const Weight& lam) {
    WedgeVector v;
    v.terms_[lam] = Laurent::one();
    return v;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Weight, Laurent>& terms() const { return terms_; }

  Laurent coeff(const Weight& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Laurent::zero() : it->second;
  }

  void add(const Weight& lam, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
      terms_[lam] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WedgeVector& operator+=(const WedgeVector& o) {
    for (const auto& [lam, c] : o.terms_) add(lam, c);
    return *this;
  }
  friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) {
    return a += b;
  }
  WedgeVector operator-() const {
    WedgeVector r;
    for (const auto& [lam, c] : terms_) r.terms_[lam] = -c;
    return r;
  }
  friend WedgeVector operator-(WedgeVector a, const WedgeVector& b) {
    return a += -b;
  }
  WedgeVector scaled(const Laurent& f) const {
    WedgeVector r;
    if (!f.is_zero())
      for (const auto& [lam, c] : terms_) r.terms_[lam] = c * f;
    return r;
  }

  bool operator==(const WedgeVector&) const = default;

 private:
  std::map<Weight, Laurent> terms_;
};

/** The tensor word whose image is F_lam, namely lam reversed. */
Weight wedge_word(const Weight& lam);

/** Right-to-left reading of a word; inverse of wedge_word. */
Weight word_reading(const Weight& word);

/** Expand the image of an arbitrary tensor word in the F-basis.
 *  For a word reading lam: the result is F_lam itself when lam is dominant,
 *  and otherwise a qZ[q]-combination of F_mu with mu Bruhat-above lam.
 *  Throws FuelExhaustedError if opts.fuel rewrite steps do not suffice.
 */
WedgeVector straighten(const Weight& word, const StraightenOptions& opts = {});

/** The quotient map applied to a finite tensor vector. */
WedgeVector project_wedge(const TensorVector& v,
                          const StraightenOptions& opts = {});

enum class Gen { E, F };

/** E_i or F_i acting on the exterior power: act on each representative
 *  tensor word through the coproduct, then straighten. */
WedgeVector act_wedge(Gen g, int i, const WedgeVector& v,
                      const StraightenOptions& opts = {});

/** Divided power g^{(r)} = g^r / [r]_i!.  Inexact coefficient division
 *  signals an integrality bug and throws std::domain_error. */
WedgeVector act_divided(Gen g, int i, int r, const WedgeVector& v,
                        const StraightenOptions& opts = {});

/** omega(F_lam) = F_{-w0 lam}; intertwines E_i with F_i. */
WedgeVector omega_map(const WedgeVector& v);

}  // namespace qnchar
