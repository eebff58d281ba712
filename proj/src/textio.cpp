#include "qnchar/textio.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qnchar {

namespace {

/** One Laurent term as sign + magnitude, so callers can join with " + " /
 *  " - ".  abs(c)=1 keeps a bare power of q; exponent 0 keeps a bare
 *  integer. */
std::pair<bool, std::string> laurent_term(int e, const BigInt& c) {
  const bool negative = c < 0;
  const BigInt mag = negative ? BigInt(-c) : c;
  std::string s;
  if (mag != 1 || e == 0) s = mag.str();
  if (e == 1)
    s += "q";
  else if (e != 0)
    s += "q^" + std::to_string(e);
  return {negative, s};
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& ts) {
  std::string out;
  for (size_t k = 0; k < ts.size(); ++k) {
    if (k == 0)
      out += ts[k].first ? "-" : "";
    else
      out += ts[k].first ? " - " : " + ";
    out += ts[k].second;
  }
  return out;
}

/** True when the coefficient prints without internal structure, i.e. it can
 *  prefix a basis symbol without parentheses. */
bool single_positive_term(const Laurent& p) {
  return p.terms().size() == 1 && p.terms().begin()->second > 0;
}

std::string monomial_body(const Weight& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "·";
    s += "x" + std::to_string(i + 1);
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

/** Leading monomial first: higher total degree, then lexicographically
 *  larger exponent tuple. */
bool monomial_before(const Weight& a, const Weight& b) {
  const long long da = std::accumulate(a.begin(), a.end(), 0LL);
  const long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da > db;
  return a > b;
}

BigInt bigint_from_string(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer literal: " + s);
  }
}

}  // namespace

Weight parse_weight(const std::string& text) {
  size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1])))
    --hi;
  if (hi - lo >= 2 && ((text[lo] == '[' && text[hi - 1] == ']') ||
                       (text[lo] == '(' && text[hi - 1] == ')'))) {
    ++lo;
    --hi;
  }
  const std::string body = text.substr(lo, hi - lo);
  if (body.empty()) throw std::invalid_argument("empty weight");

  Weight w;
  size_t pos = 0;
  while (true) {
    const size_t comma = body.find(',', pos);
    std::string tok = body.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              tok.end());
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight entry: '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("bad weight entry: '" + tok + "'");
    w.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::string render_weight(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

std::string render_weight_bracketed(const Weight& w) {
  return "[" + render_weight(w) + "]";
}

std::string render_weight_parenthesized(const Weight& w) {
  return "(" + render_weight(w) + ")";
}

std::string render_laurent(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> ts;
  for (const auto& [e, c] : p.terms()) ts.push_back(laurent_term(e, c));
  return join_signed(ts);
}

namespace {

std::string render_basis_combination(const std::map<Weight, Laurent>& terms,
                                     const std::string& symbol) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [lam, c] : terms) {
    if (!out.empty()) out += " + ";
    if (c == Laurent::one()) {
      // bare basis vector
    } else if (single_positive_term(c)) {
      out += render_laurent(c) + "·";
    } else {
      out += "(" + render_laurent(c) + ")·";
    }
    out += symbol + render_weight_bracketed(lam);
  }
  return out;
}

}  // namespace

std::string render_wedge(const WedgeVector& v, const std::string& symbol) {
  return render_basis_combination(v.terms(), symbol);
}

std::string render_tensor(const TensorVector& v, const std::string& symbol) {
  return render_basis_combination(v.terms(), symbol);
}

std::string render_multiplicities(const std::map<Weight, BigInt>& m) {
  std::string out;
  for (const auto& [w, c] : m) {
    if (!out.empty()) out += "\n";
    out += render_weight_parenthesized(w) + ": " + c.str();
  }
  return out;
}

std::string render_monomials(const std::map<Weight, BigInt>& terms) {
  if (terms.empty()) return "0";
  std::vector<const std::map<Weight, BigInt>::value_type*> order;
  for (const auto& item : terms) order.push_back(&item);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return monomial_before(a->first, b->first); });
  std::vector<std::pair<bool, std::string>> ts;
  for (auto* item : order) {
    const auto& [e, c] = *item;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    const std::string body = monomial_body(e);
    std::string s;
    if (body.empty())
      s = mag.str();
    else if (mag == 1)
      s = body;
    else
      s = mag.str() + "·" + body;
    ts.emplace_back(negative, s);
  }
  return join_signed(ts);
}

std::string render_symfunc(const SymFunc& f) { return render_monomials(f.terms); }

nlohmann::json weight_to_json(const Weight& w) { return nlohmann::json(w); }

Weight weight_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight JSON must be an array");
  Weight w;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument("weight JSON entries must be integers");
    w.push_back(v.get<int>());
  }
  return w;
}

nlohmann::json laurent_to_json(const Laurent& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    j.push_back({{"exp", e}, {"coeff", c.str()}});
  return j;
}

Laurent laurent_from_json(const nlohmann::json& j) {
  Laurent p;
  for (const auto& term : j)
    p.add_term(term.at("exp").get<int>(),
               bigint_from_string(term.at("coeff").get<std::string>()));
  return p;
}

nlohmann::json wedge_to_json(const WedgeVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [lam, c] : v.terms())
    j.push_back({{"weight", weight_to_json(lam)}, {"coeff", laurent_to_json(c)}});
  return j;
}

WedgeVector wedge_from_json(const nlohmann::json& j) {
  WedgeVector v;
  for (const auto& term : j)
    v.add(weight_from_json(term.at("weight")),
          laurent_from_json(term.at("coeff")));
  return v;
}

nlohmann::json tensor_to_json(const TensorVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [mu, c] : v.terms())
    j.push_back({{"word", weight_to_json(mu)}, {"coeff", laurent_to_json(c)}});
  return j;
}

TensorVector tensor_from_json(const nlohmann::json& j) {
  TensorVector v;
  for (const auto& term : j)
    v.add(weight_from_json(term.at("word")),
          laurent_from_json(term.at("coeff")));
  return v;
}

nlohmann::json multiplicities_to_json(const std::map<Weight, BigInt>& m) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [w, c] : m)
    j.push_back({{"weight", weight_to_json(w)}, {"coeff", c.str()}});
  return j;
}

std::map<Weight, BigInt> multiplicities_from_json(const nlohmann::json& j) {
  std::map<Weight, BigInt> m;
  for (const auto& term : j)
    m[weight_from_json(term.at("weight"))] =
        bigint_from_string(term.at("coeff").get<std::string>());
  return m;
}

nlohmann::json monomials_to_json(const std::map<Weight, BigInt>& terms) {
  std::vector<const std::map<Weight, BigInt>::value_type*> order;
  for (const auto& item : terms) order.push_back(&item);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return monomial_before(a->first, b->first); });
  nlohmann::json j = nlohmann::json::array();
  for (auto* item : order)
    j.push_back({{"exp", weight_to_json(item->first)},
                 {"coeff", item->second.str()}});
  return j;
}

std::map<Weight, BigInt> monomials_from_json(const nlohmann::json& j) {
  std::map<Weight, BigInt> terms;
  for (const auto& term : j)
    terms[weight_from_json(term.at("exp"))] =
        bigint_from_string(term.at("coeff").get<std::string>());
  return terms;
}

}  // namespace qnchar
