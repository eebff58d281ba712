#include "qnchar/laurent.hpp"

namespace qnchar {

Laurent quantum_int(long long m, int node) {
  /* [m]_i = q_i^{m-1} + q_i^{m-3} + ... + q_i^{1-m} for m >= 0, and
   * [-m]_i = -[m]_i.  Here q_i = q^d with d = 1 at node 0, d = 2 otherwise. */
  const int d = (node == 0) ? 1 : 2;
  const bool neg = m < 0;
  if (neg) m = -m;
  Laurent r;
  for (long long t = 0; t < m; ++t)
    r.add_term(static_cast<int>(d * (m - 1 - 2 * t)), neg ? -1 : 1);
  return r;
}

Laurent quantum_factorial(long long m, int node) {
  if (m < 0) throw std::domain_error("quantum_factorial: negative argument");
  Laurent r = Laurent::one();
  for (long long k = 2; k <= m; ++k) r *= quantum_int(k, node);
  return r;
}

std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return Laurent::zero();

  /* Shift both arguments into Z[q] and run ordinary long division from the
   * top degree; the quotient picks the shift difference back up.  Exactness
   * requires every intermediate leading coefficient to be divisible and the
   * final remainder to vanish. */
  const int shift_a = a.min_exp(), shift_b = b.min_exp();
  Laurent rem;
  for (const auto& [e, c] : a.terms()) rem.add_term(e - shift_a, c);
  Laurent div;
  for (const auto& [e, c] : b.terms()) div.add_term(e - shift_b, c);

  const int deg_b = div.max_exp();
  const BigInt lead_b = div.coeff(deg_b);
  Laurent quot;
  while (!rem.is_zero()) {
    const int deg_r = rem.max_exp();
    if (deg_r < deg_b) return std::nullopt;
    const BigInt lead_r = rem.coeff(deg_r);
    if (lead_r % lead_b != 0) return std::nullopt;
    const BigInt c = lead_r / lead_b;
    const int e = deg_r - deg_b;
    quot.add_term(e + shift_a - shift_b, c);
    rem -= div * Laurent::monomial(e, c);
  }
  return quot;
}

Laurent divide_by_quantum_factorial(const Laurent& a, long long m, int node) {
  auto q = divide_exact(a, quantum_factorial(m, node));
  if (!q) throw std::domain_error("divide_by_quantum_factorial: inexact");
  return *q;
}

Laurent bar_invariant_lift(const Laurent& p) {
  if (!p.is_polynomial())
    throw std::domain_error("bar_invariant_lift: argument not in Z[q]");
  Laurent g = p;
  for (const auto& [e, c] : p.terms())
    if (e > 0) g.add_term(-e, c);
  return g;
}

}  // namespace qnchar
