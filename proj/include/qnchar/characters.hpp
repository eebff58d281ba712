#pragma once

/** @file characters.hpp
 *  Symmetric-function layer: Hall-Littlewood polynomials and Schur P-
 *  functions by exact symmetrization over minimal coset representatives,
 *  Euler characteristic characters, decomposition-number columns at q = 1,
 *  irreducible characters by unitriangular inversion over a block, and
 *  truncated Verma characters.
 */

#include "qnchar/canonical.hpp"
#include "qnchar/laurent.hpp"
#include "qnchar/weights.hpp"

#include <map>
#include <vector>

namespace qnchar {

/** A finitely supported element of Z[x_1^{+-1},...,x_n^{+-1}], keyed by
 *  exponent tuple.  Outputs of the character operations are S_n-symmetric;
 *  the container itself does not force that. */
struct SymFunc {
  std::map<Weight, BigInt> terms;

  BigInt coeff(const Weight& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? BigInt(0) : it->second;
  }
  void add(const Weight& e, const BigInt& c) {
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh && (it->second += c) == 0) terms.erase(it);
  }
  bool operator==(const SymFunc&) const = default;

  SymFunc& operator+=(const SymFunc& o) {
    for (const auto& [e, c] : o.terms) add(e, c);
    return *this;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) {
    for (const auto& [e, c] : b.terms) a.add(e, -c);
    return a;
  }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc r;
    for (const auto& [e, c] : a.terms)
      for (const auto& [f, d] : b.terms) {
        Weight g = e;
        for (size_t i = 0; i < g.size(); ++i) g[i] += f[i];
        r.add(g, c * d);
      }
    return r;
  }
  SymFunc scaled(const BigInt& c) const {
    SymFunc r;
    if (c == 0) return r;
    for (const auto& [e, d] : terms) r.terms.emplace(e, c * d);
    return r;
  }
};

/** The monomial x^e, and the first elementary symmetric sum x_1+...+x_n. */
SymFunc sym_monomial(const Weight& e);
SymFunc sym_e1(int n);

/** True when every transposition of adjacent variables fixes f. */
bool is_symmetric(const SymFunc& f);

/** Hall-Littlewood polynomial p_lam(t): symmetrize
 *  x^lam prod_{i<j, lam_i>lam_j} (x_i - t x_j)/(x_i - x_j) over the minimal
 *  length coset representatives of the stabilizer of lam, clearing the
 *  denominators exactly.  Requires lam weakly decreasing; throws
 *  std::logic_error if a denominator fails to divide (a bug, not an input
 *  error). */
SymFunc hall_littlewood(const Weight& lam, long long t);

/** Schur's P-function, the t = -1 member of the family. */
SymFunc schur_p(const Weight& lam);

/** Character of the Euler characteristic family:
 *  2^{floor((h+1)/2)} p_lam with h the number of nonzero entries. */
SymFunc ch_euler(const Weight& lam);

enum class DecompMethod { Closed, Canonical };

/** Column lam of the decomposition matrix at q = 1: row mu carries the
 *  multiplicity of the irreducible at lam inside the Euler family member
 *  at mu.  Both methods agree; Closed uses the pairing rule, Canonical
 *  evaluates the canonical-basis expansion at q = 1. */
std::map<Weight, BigInt> decomposition_column(
    const Weight& lam, DecompMethod method = DecompMethod::Closed);

/** Character of the irreducible supermodule of highest weight lam:
 *  invert the decomposition matrix over the block below lam and combine
 *  Euler characters. */
SymFunc ch_irreducible(const Weight& lam);

/** A symmetric-series prefix: terms reachable from the leading monomial by
 *  at most `degree` positive-root subtractions x_i^{-1}x_j. */
struct TruncatedSeries {
  int degree = 0;
  std::map<Weight, BigInt> terms;
  bool operator==(const TruncatedSeries&) const = default;
};

/** Verma character 2^{floor((h+1)/2)} x^lam prod_{i<j}
 *  (1+x_i^{-1}x_j)/(1-x_i^{-1}x_j), expanded to total degree D in the
 *  variables x_i^{-1}x_j. */
TruncatedSeries ch_verma_truncated(const Weight& lam, int degree);

/** Both sides of the multiplication rule
 *  (x_1+...+x_n) p_lam = sum_r p_{lam+delta_r}, the sum running over the
 *  slots whose count of entries equal to lam_r + 1 is even (for dominant
 *  lam: lam+delta_r dominant, and lam_r != -1 when z(lam) is odd).
 *  Computing both sides independently makes the equality a test. */
struct PieriSides {
  SymFunc lhs;
  SymFunc rhs;
};
PieriSides pieri_check(const Weight& lam);

}  // namespace qnchar
