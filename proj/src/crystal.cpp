#include "qnchar/crystal.hpp"

#include <stdexcept>

namespace qnchar {

std::vector<SigToken> signature(const Weight& lam, int i) {
  if (i < 0) throw std::invalid_argument("signature: node index must be >= 0");
  std::vector<SigToken> sig(lam.size(), SigToken::None);
  for (size_t r = 0; r < lam.size(); ++r) {
    const int v = lam[r];
    if (i != 0) {
      if (v == i || v == -i - 1) sig[r] = SigToken::Plus;
      else if (v == i + 1 || v == -i) sig[r] = SigToken::Minus;
    } else {
      if (v == -1) sig[r] = SigToken::PlusPlus;
      else if (v == 0) sig[r] = SigToken::MinusPlus;
      else if (v == 1) sig[r] = SigToken::MinusMinus;
    }
  }
  return sig;
}

std::string token_string(SigToken t) {
  switch (t) {
    case SigToken::None: return "0";
    case SigToken::Plus: return "+";
    case SigToken::Minus: return "-";
    case SigToken::PlusPlus: return "++";
    case SigToken::MinusPlus: return "-+";
    case SigToken::MinusMinus: return "--";
  }
  return "?";
}

namespace {

struct Letter {
  int slot;  /* 1-based */
  bool plus;
};

/* Flatten the token sequence into a word of single letters; '-+' slots may
 * optionally be rewritten '+-' first (the dual convention). */
std::vector<Letter> flatten(const std::vector<SigToken>& sig, bool dual) {
  std::vector<Letter> w;
  for (size_t r = 0; r < sig.size(); ++r) {
    const int slot = static_cast<int>(r) + 1;
    switch (sig[r]) {
      case SigToken::None: break;
      case SigToken::Plus: w.push_back({slot, true}); break;
      case SigToken::Minus: w.push_back({slot, false}); break;
      case SigToken::PlusPlus:
        w.push_back({slot, true});
        w.push_back({slot, true});
        break;
      case SigToken::MinusPlus:
        if (dual) {
          w.push_back({slot, true});
          w.push_back({slot, false});
        } else {
          w.push_back({slot, false});
          w.push_back({slot, true});
        }
        break;
      case SigToken::MinusMinus:
        w.push_back({slot, false});
        w.push_back({slot, false});
        break;
    }
  }
  return w;
}

/* Cancel pairs "open then close" with a stack: every `close` letter kills
 * the nearest pending `open` to its left.  Survivors keep word order. */
ReducedSig cancel(const std::vector<Letter>& word, bool open_is_plus) {
  std::vector<int> stack; /* indices into word of pending opens */
  std::vector<bool> dead(word.size(), false);
  for (size_t k = 0; k < word.size(); ++k) {
    if (word[k].plus == open_is_plus) {
      stack.push_back(static_cast<int>(k));
    } else if (!stack.empty()) {
      dead[stack.back()] = true;
      dead[k] = true;
      stack.pop_back();
    }
  }
  ReducedSig out;
  for (size_t k = 0; k < word.size(); ++k) {
    if (dead[k]) continue;
    (word[k].plus ? out.plus_slots : out.minus_slots).push_back(word[k].slot);
  }
  return out;
}

}  // namespace

ReducedSig reduce_signature(const Weight& lam, int i) {
  return cancel(flatten(signature(lam, i), /*dual=*/false), /*open=*/true);
}

ReducedSig reduce_signature_dual(const Weight& lam, int i) {
  return cancel(flatten(signature(lam, i), /*dual=*/true), /*open=*/false);
}

static Weight bump(const Weight& lam, int slot, int dir) {
  Weight r = lam;
  r[slot - 1] += dir;
  return r;
}

std::optional<Weight> crystal_word_E(const Weight& lam, int i) {
  ReducedSig rs = reduce_signature(lam, i);
  if (rs.minus_slots.empty()) return std::nullopt;
  return bump(lam, rs.minus_slots.back(), -1);
}

std::optional<Weight> crystal_word_F(const Weight& lam, int i) {
  ReducedSig rs = reduce_signature(lam, i);
  if (rs.plus_slots.empty()) return std::nullopt;
  return bump(lam, rs.plus_slots.front(), +1);
}

int crystal_word_eps(const Weight& lam, int i) {
  return static_cast<int>(reduce_signature(lam, i).minus_slots.size());
}

int crystal_word_phi(const Weight& lam, int i) {
  return static_cast<int>(reduce_signature(lam, i).plus_slots.size());
}

std::optional<Weight> crystal_dual_E(const Weight& lam, int i) {
  ReducedSig rs = reduce_signature_dual(lam, i);
  if (rs.minus_slots.empty()) return std::nullopt;
  return bump(lam, rs.minus_slots.front(), -1);
}

std::optional<Weight> crystal_dual_F(const Weight& lam, int i) {
  ReducedSig rs = reduce_signature_dual(lam, i);
  if (rs.plus_slots.empty()) return std::nullopt;
  return bump(lam, rs.plus_slots.back(), +1);
}

int crystal_dual_eps(const Weight& lam, int i) {
  return static_cast<int>(reduce_signature_dual(lam, i).minus_slots.size());
}

int crystal_dual_phi(const Weight& lam, int i) {
  return static_cast<int>(reduce_signature_dual(lam, i).plus_slots.size());
}

std::optional<Weight> crystal_dom_E(const Weight& lam, int i) {
  require_dominant(lam);
  auto r = crystal_word_E(w0(lam), i);
  if (!r) return std::nullopt;
  return w0(*r);
}

std::optional<Weight> crystal_dom_F(const Weight& lam, int i) {
  require_dominant(lam);
  auto r = crystal_word_F(w0(lam), i);
  if (!r) return std::nullopt;
  return w0(*r);
}

int crystal_dom_eps(const Weight& lam, int i) {
  require_dominant(lam);
  return crystal_word_eps(w0(lam), i);
}

int crystal_dom_phi(const Weight& lam, int i) {
  require_dominant(lam);
  return crystal_word_phi(w0(lam), i);
}

LatticeElt simple_root(int i) {
  if (i < 0) throw std::invalid_argument("simple_root: index must be >= 0");
  if (i == 0) return LatticeElt{{1, -1}};
  return LatticeElt{{i, 1}, {i + 1, -1}};
}

}  // namespace qnchar
