#pragma once

/** @file laurent.hpp
 *  Sparse Laurent polynomials in one variable q over arbitrary-precision
 *  integers: the ring Z[q,q^{-1}].
 *
 *  This is the coefficient ring for everything downstream: straightening
 *  coefficients, canonical-basis expansions and bar-involution computations
 *  all live here.  Arithmetic is exact; coefficients are
 *  boost::multiprecision::cpp_int so no overflow is possible.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace qnchar {

using BigInt = boost::multiprecision::cpp_int;

/** A sparse element of Z[q,q^{-1}], stored as exponent -> coefficient.
 *  Invariant: no zero coefficient is ever stored, so is_zero() is just
 *  emptiness and operator== is structural equality.
 */
class Laurent {
 public:
  Laurent() = default;
  /** Constant polynomial c·q^0. */
  explicit Laurent(long long c) {
    if (c != 0) terms_[0] = c;
  }
  explicit Laurent(const BigInt& c) {
    if (c != 0) terms_[0] = c;
  }

  /** The monomial c·q^e. */
  static Laurent monomial(int e, BigInt c = 1) {
    Laurent p;
    if (c != 0) p.terms_[e] = std::move(c);
    return p;
  }
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(1); }

  bool is_zero() const { return terms_.empty(); }

  /** Smallest exponent with nonzero coefficient.  Pre: not zero. */
  int min_exp() const { return terms_.begin()->first; }
  /** Largest exponent with nonzero coefficient.  Pre: not zero. */
  int max_exp() const { return terms_.rbegin()->first; }

  BigInt coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const std::map<int, BigInt>& terms() const { return terms_; }

  /** Add c·q^e in place, erasing the entry if it cancels to zero. */
  void add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  Laurent operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent operator*(const BigInt& c) const {
    Laurent r;
    if (c != 0)
      for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
  }

  bool operator==(const Laurent&) const = default;

  /** The bar involution q |-> q^{-1}: an involutive ring automorphism. */
  Laurent bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  /** Evaluation at q = 1 (a ring homomorphism onto Z): the coefficient sum. */
  BigInt eval_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool is_bar_invariant() const { return *this == bar(); }

  /** True when the support lies in Z_{>=0}, i.e. the element is in Z[q]. */
  bool is_polynomial() const { return terms_.empty() || min_exp() >= 0; }

 private:
  std::map<int, BigInt> terms_;
};

/** The quantum integer [m]_i = (q_i^m - q_i^{-m})/(q_i - q_i^{-1}), where
 *  q_0 = q and q_i = q^2 for i > 0.  [m]_i evaluates to m at q = 1.
 */
Laurent quantum_int(long long m, int node);

/** [m]_i! = [m]_i [m-1]_i ... [1]_i, for m >= 0. */
Laurent quantum_factorial(long long m, int node);

/** Exact quotient a/b in Z[q,q^{-1}], or std::nullopt when b does not divide
 *  a (including non-divisible integer leading coefficients).  Pre: b != 0.
 */
std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b);

/** Divide by [m]_i!, throwing std::domain_error if the division is inexact.
 *  Convenience wrapper used by divided-power operator actions.
 */
Laurent divide_by_quantum_factorial(const Laurent& a, long long m, int node);

/** The unique bar-invariant g with support contained in [-d, d] (d = deg p)
 *  that agrees with p on all exponents >= 0:
 *      g = p_0 + sum_{e>0} p_e (q^e + q^{-e}).
 *  Pre: p lies in Z[q] (no negative exponents); throws std::domain_error
 *  otherwise.
 */
Laurent bar_invariant_lift(const Laurent& p);

}  // namespace qnchar
