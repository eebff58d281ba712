#include "qnchar/canonical.hpp"

#include "qnchar/crystal.hpp"
#include "qnchar/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qnchar {

namespace {

/* Index (0-based) of the unique entry equal to v, or -1. */
int find_entry(const Weight& lam, int v) {
  for (int r = 0; r < static_cast<int>(lam.size()); ++r) {
    if (lam[r] == v) return r;
  }
  return -1;
}

}  // namespace

TypicalizationStep typicalization_step(const Weight& lam) {
  require_dominant(lam);
  if (is_typical(lam)) {
    throw std::invalid_argument("typicalization_step: weight is typical");
  }
  const int n = static_cast<int>(lam.size());

  // Minimal r whose entry is cancelled by a later one.  Zero-sum pairs use
  // distinct positions, so for a repeated entry (only 0) r is the first slot.
  int r = -1;
  for (int a = 0; a < n && r < 0; ++a) {
    for (int s = a + 1; s < n; ++s) {
      if (lam[a] + lam[s] == 0) {
        r = a;
        break;
      }
    }
  }

  // Entry magnitudes are bounded, and each full E/F round strictly raises
  // lam[r], so the walk ends well within this many iterations.
  int fuel = 4 * n + 2 * (lam.front() - lam.back()) + 16;
  bool raising = true;  // true: sliding r leftward; false: sliding s rightward
  int s = -1;
  while (fuel-- > 0) {
    if (raising) {
      while (r > 0 && lam[r] == lam[r - 1] - 1) --r;
      s = find_entry(lam, -lam[r] - 1);
      if (s < 0) {
        Weight mu = lam;
        mu[r] += 1;
        return {lam, mu, Gen::E, lam[r]};
      }
      raising = false;
    } else {
      while (s + 1 < n && lam[s] == lam[s + 1] + 1) ++s;
      r = find_entry(lam, -lam[s] + 1);
      if (r < 0) {
        Weight mu = lam;
        mu[s] -= 1;
        return {lam, mu, Gen::F, -lam[s]};
      }
      raising = true;
    }
  }
  throw std::logic_error("typicalization_step: walk failed to terminate");
}

WedgeVector ucb(const Weight& lam, const StraightenOptions& opts) {
  require_dominant(lam);
  if (is_typical(lam)) return WedgeVector::basis(lam);

  thread_local std::map<Weight, WedgeVector> memo;
  if (auto it = memo.find(lam); it != memo.end()) return it->second;

  const TypicalizationStep step = typicalization_step(lam);
  WedgeVector u = act_wedge(step.kind, step.node, ucb(step.target, opts), opts);
  if (u.coeff(lam) != Laurent::one()) {
    throw std::logic_error("ucb: leading coefficient is not 1");
  }
  memo.emplace(lam, u);
  return u;
}

std::map<Weight, BigInt> ucb_q1_closed(const Weight& lam) {
  require_dominant(lam);
  const int n = static_cast<int>(lam.size());
  const int z = count_zeros(lam);

  // Pairs (r_q, s_q), outermost first: zero-sum entry pairs by descending
  // positive value, then the zeros matched first-with-last.
  std::vector<std::pair<int, int>> pairs;
  for (int r = 0; r < n; ++r) {
    if (lam[r] <= 0) continue;
    int s = find_entry(lam, -lam[r]);
    if (s >= 0) pairs.emplace_back(r, s);
  }
  std::vector<int> zpos;
  for (int r = 0; r < n; ++r) {
    if (lam[r] == 0) zpos.push_back(r);
  }
  for (int t = 0; t < z / 2; ++t) {
    pairs.emplace_back(zpos[t], zpos[z - 1 - t]);
  }
  const int p = static_cast<int>(pairs.size());

  // Jump sizes: each pair claims the least unused magnitude above its own;
  // a zero pair claims the two least unused magnitudes and jumps by the
  // smaller one when z is even, the larger when z is odd.
  std::set<int> used;
  for (int v : lam) used.insert(std::abs(v));
  std::vector<int> jump(p);
  for (int q = 0; q < p; ++q) {
    const int base = lam[pairs[q].first];
    if (base > 0) {
      int k = 1;
      while (used.count(base + k)) ++k;
      used.insert(base + k);
      jump[q] = base + k;
    } else {
      int a = 1;
      while (used.count(a)) ++a;
      int b = a + 1;
      while (used.count(b)) ++b;
      used.insert(a);
      used.insert(b);
      jump[q] = (z % 2 == 0) ? a : b;
    }
  }

  std::map<Weight, BigInt> out;
  for (int mask = 0; mask < (1 << p); ++mask) {
    Weight mu = lam;
    for (int q = 0; q < p; ++q) {
      if (!(mask >> q & 1)) continue;
      const int k = jump[q] - lam[pairs[q].first];
      mu[pairs[q].first] += k;
      mu[pairs[q].second] -= k;
    }
    mu = sorted_descending(mu);
    require_dominant(mu);
    const int drop = (z - count_zeros(mu)) / 2;
    out[mu] += BigInt(1) << drop;
  }
  return out;
}

BasisMatrix u_matrix(const std::vector<Weight>& cols,
                     const StraightenOptions& opts) {
  BasisMatrix m;
  std::set<Weight, bool (*)(const Weight&, const Weight&)> rows(dlex_greater);
  for (const Weight& lam : cols) {
    const WedgeVector u = ucb(lam, opts);
    for (const auto& [mu, c] : u.terms()) {
      rows.insert(mu);
      m.entries[{mu, lam}] = c;
    }
  }
  m.cols = cols;
  std::sort(m.cols.begin(), m.cols.end(), dlex_greater);
  m.rows.assign(rows.begin(), rows.end());
  return m;
}

ELMatrices e_l_matrices(const Weight& lam0, const StraightenOptions& opts) {
  std::vector<Weight> index = lower_block_set(lam0);
  std::reverse(index.begin(), index.end());  // ascending lexicographic

  ELMatrices m;
  m.e_in_l.rows = m.e_in_l.cols = index;
  m.l_in_e.rows = m.l_in_e.cols = index;

  // Coefficient of L_mu in E_lam: the F_{-w0 lam} coefficient of U_{-w0 mu},
  // with q inverted.
  for (const Weight& mu : index) {
    const WedgeVector u = ucb(neg_w0(mu), opts);
    for (const Weight& lam : index) {
      const Laurent c = u.coeff(neg_w0(lam)).bar();
      if (!c.is_zero()) m.e_in_l.entries[{mu, lam}] = c;
    }
  }

  // Invert the unitriangular matrix column by column, bottom row upward.
  const int sz = static_cast<int>(index.size());
  for (int j = 0; j < sz; ++j) {
    m.l_in_e.entries[{index[j], index[j]}] = Laurent::one();
    for (int i = j - 1; i >= 0; --i) {
      Laurent acc;
      for (int k = i + 1; k <= j; ++k) {
        acc += m.e_in_l.entry(index[i], index[k]) *
               m.l_in_e.entry(index[k], index[j]);
      }
      if (!acc.is_zero()) m.l_in_e.entries[{index[i], index[j]}] = -acc;
    }
  }
  return m;
}

std::map<Weight, Laurent> act_on_E(Gen g, int i, const Weight& lam) {
  require_dominant(lam);
  const int n = static_cast<int>(lam.size());
  const std::vector<SigToken> sig = signature(lam, i);

  // (q + q^{-1}) sum_{s=0}^{z} (-q^{-2})^s, the slot factor at doubled tokens.
  Laurent doubled;
  for (int s = 0; s <= count_zeros(lam); ++s) {
    doubled += Laurent::monomial(-2 * s, (s % 2 == 0) ? 1 : -1);
  }
  doubled = doubled * (Laurent::monomial(1) + Laurent::monomial(-1));

  std::map<Weight, Laurent> out;
  for (int r = 0; r < n; ++r) {
    Weight mu = lam;
    bool admissible = false;
    int twist = 0;
    if (g == Gen::E) {
      admissible = sig[r] == SigToken::Minus || sig[r] == SigToken::MinusPlus ||
                   sig[r] == SigToken::MinusMinus;
      mu[r] -= 1;
      for (int t = r + 1; t < n; ++t) twist -= k_exponent_letter(i, lam[t]);
    } else {
      admissible = sig[r] == SigToken::Plus || sig[r] == SigToken::MinusPlus ||
                   sig[r] == SigToken::PlusPlus;
      mu[r] += 1;
      for (int t = 0; t < r; ++t) twist += k_exponent_letter(i, lam[t]);
    }
    if (!admissible || !is_dominant(mu)) continue;
    const bool two = sig[r] == SigToken::MinusMinus || sig[r] == SigToken::PlusPlus;
    const Laurent c = Laurent::monomial(twist) * (two ? doubled : Laurent::one());
    out[mu] += c;
    if (out[mu].is_zero()) out.erase(mu);
  }
  return out;
}

std::map<Weight, Laurent> e_in_m_truncated(const Weight& lam, int bound,
                                           const StraightenOptions& opts) {
  require_dominant(lam);
  const int n = static_cast<int>(lam.size());
  const Weight target = neg_w0(lam);
  const LatticeElt weight = wt(lam);

  std::map<Weight, Laurent> out;
  Weight mu(n, -bound);
  while (true) {
    if (wt(mu) == weight) {
      const Laurent c = straighten(negate(mu), opts).coeff(target).bar();
      if (!c.is_zero()) out[mu] = c;
    }
    int r = n - 1;
    while (r >= 0 && mu[r] == bound) mu[r--] = -bound;
    if (r < 0) break;
    ++mu[r];
  }
  return out;
}

}  // namespace qnchar
