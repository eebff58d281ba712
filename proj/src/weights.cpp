#include "qnchar/weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qnchar {

bool is_dominant(const Weight& lam) {
  for (size_t r = 1; r < lam.size(); ++r) {
    if (lam[r - 1] < lam[r]) return false;
    if (lam[r - 1] == lam[r] && lam[r] != 0) return false;
  }
  return true;
}

void require_dominant(const Weight& lam) {
  if (!is_dominant(lam))
    throw std::invalid_argument(
        "weight is not dominant (weakly decreasing, repeats only at 0)");
}

static void add_eps(LatticeElt& v, int entry) {
  if (entry == 0) return;
  const int i = std::abs(entry), s = entry > 0 ? 1 : -1;
  auto it = v.find(i);
  if (it == v.end()) {
    v[i] = s;
  } else {
    it->second += s;
    if (it->second == 0) v.erase(it);
  }
}

LatticeElt wt(const Weight& lam) { return wt_tail(lam, 1); }

LatticeElt wt_tail(const Weight& lam, int r) {
  LatticeElt v;
  for (size_t s = static_cast<size_t>(r) - 1; s < lam.size(); ++s)
    add_eps(v, lam[s]);
  return v;
}

bool dominance_leq_P(const LatticeElt& beta, const LatticeElt& gamma) {
  /* d = gamma - beta; walk the support from the top index down keeping the
   * running tail sum_{i >= current} d_i, which must stay <= 0.  The tail at
   * any j between support points equals the tail at the next support point
   * above, so checking at support points covers all j >= 0. */
  LatticeElt d = gamma;
  for (const auto& [i, c] : beta) {
    d[i] -= c;
    if (d[i] == 0) d.erase(i);
  }
  long long tail = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    tail += it->second;
    if (tail > 0) return false;
  }
  return true;
}

bool same_block(const Weight& a, const Weight& b) {
  return a.size() == b.size() && wt(a) == wt(b);
}

bool bruhat_leq(const Weight& lam, const Weight& mu) {
  if (lam.size() != mu.size()) return false;
  if (wt(lam) != wt(mu)) return false;
  for (int r = 2; r <= static_cast<int>(lam.size()); ++r)
    if (!dominance_leq_P(wt_tail(lam, r), wt_tail(mu, r))) return false;
  return true;
}

bool gl_dominance_leq(const Weight& lam, const Weight& mu) {
  if (lam.size() != mu.size()) return false;
  long long prefix = 0;
  for (size_t r = 0; r < lam.size(); ++r) {
    prefix += mu[r] - lam[r];
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

Reach downarrow_reachable(const Weight& from, const Weight& to,
                          long long fuel) {
  if (from.size() != to.size()) return Reach::Unreachable;
  if (from == to) return Reach::Reachable;
  const int n = static_cast<int>(from.size());
  std::set<Weight> seen{from};
  std::deque<Weight> queue{from};
  while (!queue.empty()) {
    if (fuel-- <= 0) return Reach::FuelExhausted;
    Weight cur = queue.front();
    queue.pop_front();
    for (int r = 0; r < n; ++r)
      for (int s = r + 1; s < n; ++s) {
        Weight next = cur;
        if (cur[r] > cur[s]) {
          std::swap(next[r], next[s]);
          if (next == to) return Reach::Reachable;
          if (seen.insert(next).second) queue.push_back(next);
        }
        if (cur[r] + cur[s] == 0) {
          next = cur;
          next[r] -= 1;
          next[s] += 1;
          if (next == to) return Reach::Reachable;
          if (seen.insert(next).second) queue.push_back(next);
        }
      }
  }
  return Reach::Unreachable;
}

bool dlex_greater(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Weight> lower_block_set(const Weight& lam) {
  require_dominant(lam);
  const int n = static_cast<int>(lam.size());
  if (n == 0) return {lam};
  const int lo = lam.back(), hi = lam.front();
  std::vector<long long> prefix(n + 1, 0);
  for (int r = 0; r < n; ++r) prefix[r + 1] = prefix[r] + lam[r];
  const LatticeElt target = wt(lam);

  std::vector<Weight> out;
  Weight cur(n);
  std::function<void(int, long long, int)> dfs = [&](int r, long long sum,
                                                     int cap) {
    if (r == n) {
      if (sum == prefix[n] && wt(cur) == target && bruhat_leq(cur, lam))
        out.push_back(cur);
      return;
    }
    for (int v = cap; v >= lo; --v) {
      /* dominance: strictly decreasing except repeats at zero */
      if (r > 0 && v == cur[r - 1] && v != 0) continue;
      const long long s = sum + v;
      if (s > prefix[r + 1]) continue; /* gl-dominance prefix bound */
      /* remaining entries are at most v each and at least lo each */
      const long long rest = prefix[n] - s;
      const int left = n - r - 1;
      if (rest > static_cast<long long>(v) * left ||
          rest < static_cast<long long>(lo) * left)
        continue;
      cur[r] = v;
      dfs(r + 1, s, v);
    }
  };
  dfs(0, 0, hi);
  std::sort(out.begin(), out.end(), dlex_greater);
  return out;
}

int count_zeros(const Weight& lam) {
  return static_cast<int>(std::count(lam.begin(), lam.end(), 0));
}

int count_nonzeros(const Weight& lam) {
  return static_cast<int>(lam.size()) - count_zeros(lam);
}

int atypicality(const Weight& lam) {
  int l1 = 0;
  for (const auto& [i, c] : wt(lam)) l1 += std::abs(c);
  return static_cast<int>(lam.size()) - l1;
}

bool is_typical(const Weight& lam) { return atypicality(lam) <= 1; }

Weight w0(const Weight& lam) { return {lam.rbegin(), lam.rend()}; }

Weight negate(const Weight& lam) {
  Weight r = lam;
  for (int& v : r) v = -v;
  return r;
}

Weight neg_w0(const Weight& lam) { return negate(w0(lam)); }

Weight sorted_descending(Weight lam) {
  std::sort(lam.begin(), lam.end(), std::greater<int>());
  return lam;
}

std::vector<Weight> dominant_weights(int n, int lo, int hi) {
  std::vector<Weight> out;
  Weight cur(n);
  std::function<void(int, int)> dfs = [&](int r, int cap) {
    if (r == n) {
      out.push_back(cur);
      return;
    }
    for (int v = cap; v >= lo; --v) {
      if (r > 0 && v == cur[r - 1] && v != 0) continue;
      cur[r] = v;
      dfs(r + 1, v);
    }
  };
  if (n >= 0) dfs(0, hi);
  return out;
}

}  // namespace qnchar
