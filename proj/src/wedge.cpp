#include "qnchar/wedge.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <utility>
#include <vector>

namespace qnchar {

Weight wedge_word(const Weight& lam) { return Weight(lam.rbegin(), lam.rend()); }

Weight word_reading(const Weight& word) {
  return Weight(word.rbegin(), word.rend());
}

namespace {

bool pair_violates(int a, int b) { return a > b || (a == b && a != 0); }

/* Replacements for a violating adjacent pair (a, b); empty means the word
 * is killed.  Each relation is oriented at its lexicographically largest
 * word, so every replacement pair is lexicographically smaller than (a, b),
 * which (together with the cascade shrinking |a|) makes rewriting
 * terminate. */
std::vector<std::pair<std::array<int, 2>, Laurent>> rewrite_pair(int a, int b) {
  std::vector<std::pair<std::array<int, 2>, Laurent>> out;
  if (a == b) return out; /* v_a x v_a = 0, a != 0 */
  if (a + b != 0) {
    out.push_back({{b, a}, Laurent::monomial(2, -1)});
  } else if (a >= 2) {
    out.push_back({{a - 1, 1 - a}, Laurent::monomial(2, -1)});
    out.push_back({{1 - a, a - 1}, Laurent::monomial(2, -1)});
    out.push_back({{-a, a}, Laurent::monomial(4, -1)});
  } else { /* a = 1, b = -1 */
    out.push_back({{0, 0}, Laurent::monomial(1, -1)});
    out.push_back({{-1, 1}, Laurent::monomial(4, -1)});
  }
  return out;
}

std::vector<size_t> violations(const Weight& w) {
  std::vector<size_t> pos;
  for (size_t r = 0; r + 1 < w.size(); ++r)
    if (pair_violates(w[r], w[r + 1])) pos.push_back(r);
  return pos;
}

struct StraightenContext {
  const StraightenOptions& opts;
  long long fuel;
  std::mt19937_64 rng;
  std::map<Weight, WedgeVector>* memo;
};

thread_local std::map<Weight, WedgeVector> g_normal_forms;

WedgeVector straighten_word(const Weight& w, StraightenContext& ctx) {
  if (ctx.memo) {
    auto it = ctx.memo->find(w);
    if (it != ctx.memo->end()) return it->second;
  }
  const std::vector<size_t> pos = violations(w);
  WedgeVector result;
  if (pos.empty()) {
    result = WedgeVector::basis(word_reading(w));
  } else {
    if (ctx.fuel-- <= 0)
      throw FuelExhaustedError("straighten: rewrite budget exhausted");
    size_t pick;
    switch (ctx.opts.strategy) {
      case RewriteStrategy::LeftmostFirst:
        pick = pos.front();
        break;
      case RewriteStrategy::RightmostFirst:
        pick = pos.back();
        break;
      default:
        pick = pos[std::uniform_int_distribution<size_t>(
            0, pos.size() - 1)(ctx.rng)];
    }
    for (const auto& [pair, c] : rewrite_pair(w[pick], w[pick + 1])) {
      Weight nw = w;
      nw[pick] = pair[0];
      nw[pick + 1] = pair[1];
      result += straighten_word(nw, ctx).scaled(c);
    }
  }
  if (ctx.memo) (*ctx.memo)[w] = result;
  return result;
}

}  // namespace

WedgeVector straighten(const Weight& word, const StraightenOptions& opts) {
  StraightenContext ctx{opts, opts.fuel, std::mt19937_64(opts.seed),
                        opts.use_memo ? &g_normal_forms : nullptr};
  return straighten_word(word, ctx);
}

WedgeVector project_wedge(const TensorVector& v,
                          const StraightenOptions& opts) {
  WedgeVector out;
  for (const auto& [w, c] : v.terms()) out += straighten(w, opts).scaled(c);
  return out;
}

WedgeVector act_wedge(Gen g, int i, const WedgeVector& v,
                      const StraightenOptions& opts) {
  WedgeVector out;
  for (const auto& [lam, c] : v.terms()) {
    const TensorVector image =
        (g == Gen::E ? act_E : act_F)(i, TensorVector::basis(wedge_word(lam)));
    for (const auto& [w, f] : image.terms())
      out += straighten(w, opts).scaled(c * f);
  }
  return out;
}

WedgeVector act_divided(Gen g, int i, int r, const WedgeVector& v,
                        const StraightenOptions& opts) {
  WedgeVector power = v;
  for (int t = 0; t < r; ++t) power = act_wedge(g, i, power, opts);
  WedgeVector out;
  for (const auto& [lam, c] : power.terms())
    out.add(lam, divide_by_quantum_factorial(c, r, i));
  return out;
}

WedgeVector omega_map(const WedgeVector& v) {
  WedgeVector out;
  for (const auto& [lam, c] : v.terms()) out.add(neg_w0(lam), c);
  return out;
}

}  // namespace qnchar
