#include "qnchar/tensor.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qnchar {

long long word_key(const Weight& mu) {
  long long k = 0;
  for (size_t r = 0; r < mu.size(); ++r)
    k += static_cast<long long>(r + 1) * mu[r];
  return k;
}

TensorVector TensorVector::truncated(long long cutoff) const {
  TensorVector r;
  for (const auto& [mu, c] : terms_)
    if (word_key(mu) < cutoff) r.terms_[mu] = c;
  return r;
}

std::vector<std::pair<int, Laurent>> act_E_letter(int i, int a) {
  std::vector<std::pair<int, Laurent>> out;
  if (i == 0) {
    if (a == 0) out.emplace_back(-1, quantum_int(2, 0)); /* (q+q^{-1}) v_{-1} */
    if (a == 1) out.emplace_back(0, Laurent::one());
  } else {
    if (a == i + 1) out.emplace_back(i, Laurent::one());
    if (a == -i) out.emplace_back(-i - 1, Laurent::one());
  }
  return out;
}

std::vector<std::pair<int, Laurent>> act_F_letter(int i, int a) {
  std::vector<std::pair<int, Laurent>> out;
  if (i == 0) {
    if (a == 0) out.emplace_back(1, quantum_int(2, 0));
    if (a == -1) out.emplace_back(0, Laurent::one());
  } else {
    if (a == i) out.emplace_back(i + 1, Laurent::one());
    if (a == -i - 1) out.emplace_back(-i, Laurent::one());
  }
  return out;
}

int k_exponent_letter(int i, int a) {
  /* (alpha_i, eps_a) with (eps_i, eps_j) = 2 delta_{ij} */
  if (i == 0) return a == -1 ? 2 : a == 1 ? -2 : 0;
  if (a == i || a == -i - 1) return 2;
  if (a == i + 1 || a == -i) return -2;
  return 0;
}

int k_exponent(int i, const Weight& mu) {
  int e = 0;
  for (int a : mu) e += k_exponent_letter(i, a);
  return e;
}

TensorVector act_E(int i, const TensorVector& v) {
  /* iterated D(E_i) = sum_r 1^{r-1} x E_i x (K_i^{-1})^{n-r} */
  TensorVector out;
  for (const auto& [mu, c] : v.terms()) {
    const int n = static_cast<int>(mu.size());
    for (int r = 0; r < n; ++r) {
      int tail = 0;
      for (int s = r + 1; s < n; ++s) tail += k_exponent_letter(i, mu[s]);
      for (const auto& [b, f] : act_E_letter(i, mu[r])) {
        Weight nu = mu;
        nu[r] = b;
        out.add(nu, c * f * Laurent::monomial(-tail));
      }
    }
  }
  return out;
}

TensorVector act_F(int i, const TensorVector& v) {
  TensorVector out;
  for (const auto& [mu, c] : v.terms()) {
    const int n = static_cast<int>(mu.size());
    for (int r = 0; r < n; ++r) {
      int head = 0;
      for (int s = 0; s < r; ++s) head += k_exponent_letter(i, mu[s]);
      for (const auto& [b, f] : act_F_letter(i, mu[r])) {
        Weight nu = mu;
        nu[r] = b;
        out.add(nu, c * f * Laurent::monomial(head));
      }
    }
  }
  return out;
}

TensorVector act_K(int i, int sign, const TensorVector& v) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("act_K: sign must be +1 or -1");
  TensorVector out;
  for (const auto& [mu, c] : v.terms())
    out.add(mu, c * Laurent::monomial(sign * k_exponent(i, mu)));
  return out;
}

TensorVector omega_tensor(const TensorVector& v) {
  TensorVector out;
  for (const auto& [mu, c] : v.terms()) out.add(negate(w0(mu)), c);
  return out;
}

namespace {

/* (-q^2)^k as a Laurent monomial, any integer k */
Laurent neg_q2_pow(int k) {
  return Laurent::monomial(2 * k, (k % 2 == 0) ? 1 : -1);
}

void require_n2(const Weight& mu) {
  if (mu.size() != 2)
    throw std::invalid_argument("bar_n2/t2_closed: defined for n = 2 only");
}

/* bar(N_mu) as a truncated vector; every correction term has key strictly
 * greater than key(mu). */
TensorVector bar_word_n2(const Weight& mu, long long cutoff) {
  require_n2(mu);
  const int a = mu[0], b = mu[1];
  TensorVector out = TensorVector::basis(mu);
  const Laurent c22 = Laurent::monomial(2) - Laurent::monomial(-2);

  if (a + b != 0) {
    if (a > b) out.add({b, a}, c22);
    return out.truncated(cutoff);
  }
  if (a == 0) {
    /* key((c,-c)) = -c, so c ranges over [-cutoff+1, -1] */
    for (int c = -1; -c < cutoff; --c)
      out.add({c, -c}, quantum_int(2, 0) * c22 * neg_q2_pow(c + 1));
  } else if (a < 0) {
    /* source (-|a|, |a|); corrections at (-c, c), c > |a| with key c */
    for (int c = -a + 1; c < cutoff; ++c)
      out.add({-c, c}, c22 * neg_q2_pow(-a + 1 - c));
  } else {
    /* source (a, -a), a >= 1 */
    out.add({-a, a}, Laurent::monomial(2) * c22);
    for (int c = 1; c < a; ++c) out.add({c, -c}, c22 * neg_q2_pow(c + 1 - a));
    out.add({0, 0}, (Laurent::monomial(1) - Laurent::monomial(-1)) *
                        neg_q2_pow(1 - a)); /* (q - q^{-1})(-q^2)^{1-a} */
    for (int c = -1; -c < cutoff; --c)
      out.add({c, -c}, Laurent::monomial(2) * c22 * neg_q2_pow(c + 1 - a));
  }
  return out.truncated(cutoff);
}

}  // namespace

TensorVector bar_n2(const TensorVector& v, long long cutoff) {
  TensorVector out;
  for (const auto& [mu, c] : v.terms()) {
    if (word_key(mu) >= cutoff)
      throw std::invalid_argument("bar_n2: input term at or above cutoff");
    out += bar_word_n2(mu, cutoff).scaled(c.bar());
  }
  return out;
}

TensorVector t2_closed(const Weight& mu) {
  require_n2(mu);
  const int a = mu[0], b = mu[1];
  TensorVector out = TensorVector::basis(mu);
  if (a + b != 0) {
    if (a > b) out.add({b, a}, Laurent::monomial(2));
    return out;
  }
  if (a == 0) {
    out.add({-1, 1}, Laurent::monomial(1) + Laurent::monomial(3));
  } else if (a == 1) {
    out.add({0, 0}, Laurent::monomial(1));
    out.add({-1, 1}, Laurent::monomial(4));
  } else if (a < 0) {
    out.add({a - 1, -a + 1}, Laurent::monomial(2));
  } else {
    /* a >= 2 */
    out.add({a - 1, 1 - a}, Laurent::monomial(2));
    out.add({1 - a, a - 1}, Laurent::monomial(2));
    out.add({-a, a}, Laurent::monomial(4));
  }
  return out;
}

std::map<Weight, Laurent> m2_in_L(const Weight& lam) {
  require_n2(lam);
  const int bound = std::max(std::abs(lam[0]), std::abs(lam[1])) + 2;
  const Weight neg_lam = negate(lam);
  std::map<Weight, Laurent> out;
  for (int m1 = -bound; m1 <= bound; ++m1)
    for (int m2 = -bound; m2 <= bound; ++m2) {
      const Weight mu{m1, m2};
      Laurent c = t2_closed(negate(mu)).coeff(neg_lam);
      if (!c.is_zero()) out[mu] = c.bar();
    }
  return out;
}

}  // namespace qnchar
