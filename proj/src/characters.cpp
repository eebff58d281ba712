#include "qnchar/characters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qnchar {

namespace {

void require_weakly_decreasing(const Weight& lam) {
  for (size_t i = 1; i < lam.size(); ++i)
    if (lam[i] > lam[i - 1])
      throw std::invalid_argument("weight is not weakly decreasing");
}

/// Exact division of f by (x_i - x_j), synthetic in the variable x_i.
/// Throws std::logic_error when the division leaves a remainder.
std::map<Weight, BigInt> divide_linear(const std::map<Weight, BigInt>& f,
                                       size_t i, size_t j) {
  if (f.empty()) return {};
  int lo = f.begin()->first[i], hi = lo;
  for (const auto& [e, c] : f) {
    lo = std::min(lo, e[i]);
    hi = std::max(hi, e[i]);
  }
  // Coefficients of x_i^k, with the i-th slot of each key zeroed out.
  std::vector<std::map<Weight, BigInt>> coeff(hi - lo + 1);
  for (const auto& [e, c] : f) {
    Weight r = e;
    int k = r[i];
    r[i] = 0;
    coeff[k - lo][r] = c;
  }
  // f = (x_i - x_j) g  forces  g_k = c_{k+1} + x_j g_{k+1}  downwards,
  // with the k = lo equation left over as the exactness check.
  std::vector<std::map<Weight, BigInt>> g(std::max(hi - lo, 0));
  std::map<Weight, BigInt> carry;  // x_j * g_k while descending
  for (int k = hi; k > lo; --k) {
    std::map<Weight, BigInt> gk = std::move(carry);
    for (const auto& [e, c] : coeff[k - lo]) {
      auto [it, fresh] = gk.emplace(e, c);
      if (!fresh && (it->second += c) == 0) gk.erase(it);
    }
    carry.clear();
    for (const auto& [e, c] : gk) {
      Weight shifted = e;
      ++shifted[j];
      carry.emplace(shifted, c);
    }
    g[k - 1 - lo] = std::move(gk);
  }
  for (const auto& [e, c] : coeff[0]) {
    auto [it, fresh] = carry.emplace(e, c);
    if (!fresh && (it->second += c) == 0) carry.erase(it);
  }
  if (!carry.empty())
    throw std::logic_error("symmetrized numerator not divisible by x_i - x_j");
  std::map<Weight, BigInt> out;
  for (int k = lo; k < hi; ++k)
    for (const auto& [e, c] : g[k - lo]) {
      Weight r = e;
      r[i] = k;
      out.emplace(r, c);
    }
  return out;
}

bool even_inversions(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0;
}

}  // namespace

SymFunc sym_monomial(const Weight& e) {
  SymFunc f;
  f.terms.emplace(e, 1);
  return f;
}

SymFunc sym_e1(int n) {
  SymFunc f;
  for (int i = 0; i < n; ++i) {
    Weight e(n, 0);
    e[i] = 1;
    f.terms.emplace(e, 1);
  }
  return f;
}

bool is_symmetric(const SymFunc& f) {
  if (f.terms.empty()) return true;
  const size_t n = f.terms.begin()->first.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (const auto& [e, c] : f.terms) {
      Weight s = e;
      std::swap(s[i], s[i + 1]);
      if (f.coeff(s) != c) return false;
    }
  return true;
}

SymFunc hall_littlewood(const Weight& lam, long long t) {
  require_weakly_decreasing(lam);
  const size_t n = lam.size();

  // x^lam (x_i - t x_j) over the strict pairs times (x_i - x_j) over the
  // tied pairs: each coset summand over the full Vandermonde denominator.
  std::map<Weight, BigInt> base;
  base.emplace(lam, 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const BigInt second = lam[i] > lam[j] ? BigInt(-t) : BigInt(-1);
      std::map<Weight, BigInt> next;
      for (const auto& [e, c] : base) {
        Weight a = e, b = e;
        ++a[i];
        ++b[j];
        auto bump = [&next](const Weight& key, const BigInt& val) {
          auto [it, fresh] = next.emplace(key, val);
          if (!fresh && (it->second += val) == 0) next.erase(it);
        };
        bump(a, c);
        if (second != 0) bump(b, c * second);
      }
      base = std::move(next);
    }

  // Signed sum over the minimal coset representatives: permutations that
  // increase along every run of equal entries of lam.
  std::map<Weight, BigInt> num;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool minimal = true;
    for (size_t i = 1; i < n && minimal; ++i)
      if (lam[i] == lam[i - 1] && perm[i] < perm[i - 1]) minimal = false;
    if (!minimal) continue;
    const BigInt sign = even_inversions(perm) ? 1 : -1;
    for (const auto& [e, c] : base) {
      Weight moved(n);
      for (size_t i = 0; i < n; ++i) moved[perm[i]] = e[i];
      auto [it, fresh] = num.emplace(moved, c * sign);
      if (!fresh && (it->second += c * sign) == 0) num.erase(it);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) num = divide_linear(num, i, j);

  SymFunc out;
  out.terms = std::move(num);
  return out;
}

SymFunc schur_p(const Weight& lam) { return hall_littlewood(lam, -1); }

SymFunc ch_euler(const Weight& lam) {
  const int h = count_nonzeros(lam);
  return schur_p(lam).scaled(BigInt(1) << ((h + 1) / 2));
}

std::map<Weight, BigInt> decomposition_column(const Weight& lam,
                                              DecompMethod method) {
  if (method == DecompMethod::Closed) return ucb_q1_closed(lam);
  const WedgeVector u = ucb(lam);
  std::map<Weight, BigInt> out;
  for (const auto& [mu, c] : u.terms())
    if (BigInt v = c.eval_one(); v != 0) out.emplace(mu, std::move(v));
  return out;
}

SymFunc ch_irreducible(const Weight& lam) {
  require_dominant(lam);
  thread_local std::map<Weight, SymFunc> memo;
  if (auto it = memo.find(lam); it != memo.end()) return it->second;

  // Solve [E(mu)] = sum_kappa d_{mu,kappa} [L(kappa)] bottom-up over the
  // block below lam; ascending listing order refines the Bruhat order, so
  // every subtracted character is already known.
  std::vector<Weight> block = lower_block_set(lam);
  std::reverse(block.begin(), block.end());
  for (const Weight& mu : block) {
    if (memo.count(mu)) continue;
    SymFunc ch = ch_euler(mu);
    for (const Weight& kappa : lower_block_set(mu)) {
      if (kappa == mu) continue;
      const auto column = decomposition_column(kappa);
      if (auto it = column.find(mu); it != column.end())
        ch = ch - memo.at(kappa).scaled(it->second);
    }
    memo.emplace(mu, std::move(ch));
  }
  return memo.at(lam);
}

TruncatedSeries ch_verma_truncated(const Weight& lam, int degree) {
  if (degree < 0) throw std::invalid_argument("truncation degree is negative");
  const size_t n = lam.size();
  const int h = count_nonzeros(lam);
  // Track the total degree in the variables x_i^{-1} x_j alongside each
  // exponent so the cutoff applies per series term, not per monomial.
  std::map<std::pair<Weight, int>, BigInt> cur;
  cur.emplace(std::make_pair(lam, 0), BigInt(1) << ((h + 1) / 2));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      // (1 + x_i^{-1}x_j)/(1 - x_i^{-1}x_j) = 1 + 2 u + 2 u^2 + ...
      std::map<std::pair<Weight, int>, BigInt> next;
      for (const auto& [key, c] : cur) {
        const auto& [e, d] = key;
        for (int k = 0; d + k <= degree; ++k) {
          Weight shifted = e;
          shifted[i] -= k;
          shifted[j] += k;
          const BigInt val = k == 0 ? c : c * 2;
          auto [it, fresh] = next.emplace(std::make_pair(shifted, d + k), val);
          if (!fresh) it->second += val;
        }
      }
      cur = std::move(next);
    }
  TruncatedSeries out;
  out.degree = degree;
  for (const auto& [key, c] : cur) {
    auto [it, fresh] = out.terms.emplace(key.first, c);
    if (!fresh) it->second += c;
  }
  return out;
}

PieriSides pieri_check(const Weight& lam) {
  require_weakly_decreasing(lam);
  const size_t n = lam.size();
  PieriSides sides;
  sides.lhs = sym_e1(static_cast<int>(n)) * schur_p(lam);
  for (size_t r = 0; r < n; ++r) {
    if (r > 0 && lam[r] == lam[r - 1]) continue;
    // The raised entry collides with an existing run of lam_r + 1 entries;
    // the run contributes 1 + t + ... + t^{n_r}, which survives t = -1
    // exactly when n_r is even.
    const long n_r = std::count(lam.begin(), lam.end(), lam[r] + 1);
    if (n_r % 2 != 0) continue;
    Weight raised = lam;
    ++raised[r];
    sides.rhs += schur_p(raised);
  }
  return sides;
}

}  // namespace qnchar
