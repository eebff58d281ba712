#pragma once

/** @file textio.hpp
 *  Stable text and JSON rendering for every value type the command-line
 *  tool prints, plus the inverse parsers.  Orderings are deterministic so
 *  golden outputs can be diffed byte-for-byte: weight-keyed listings are
 *  ascending lexicographic, monomial listings put the leading monomial
 *  first, Laurent polynomials read from the lowest power of q upwards.
 */

#include "qnchar/characters.hpp"
#include "qnchar/laurent.hpp"
#include "qnchar/wedge.hpp"
#include "qnchar/weights.hpp"

#include "json.hpp"

#include <map>
#include <string>

namespace qnchar {

/** Parse "5,3,-1" into a weight; surrounding spaces and one matched pair of
 *  [] or () are tolerated.  Throws std::invalid_argument on anything else. */
Weight parse_weight(const std::string& text);

/** "5,3,-1" (no wrapper), "[5,3,-1]", "(5,3,-1)". */
std::string render_weight(const Weight& w);
std::string render_weight_bracketed(const Weight& w);
std::string render_weight_parenthesized(const Weight& w);

/** "q + q^3", "2q^-1", "1", "0"; terms ascend by exponent. */
std::string render_laurent(const Laurent& p);

/** "F[0,0] + (q + q^3)·F[1,-1]": weights ascending lexicographic, unit
 *  coefficients dropped, composite coefficients parenthesized. */
std::string render_wedge(const WedgeVector& v, const std::string& symbol = "F");

/** Same layout over word vectors: "N[0,0] + q·N[1,-1]". */
std::string render_tensor(const TensorVector& v,
                          const std::string& symbol = "N");

/** One line per weight, ascending lexicographic: "(0,0,0): 1". */
std::string render_multiplicities(const std::map<Weight, BigInt>& m);

/** "2·x1 + 2·x2": zero exponents dropped, leading monomial first
 *  (grade, then exponent tuple, both descending). */
std::string render_monomials(const std::map<Weight, BigInt>& terms);
std::string render_symfunc(const SymFunc& f);

/** JSON forms.  Arbitrary-precision coefficients travel as decimal strings;
 *  each *_from_json inverts its renderer exactly (round-trip property). */
nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json laurent_to_json(const Laurent& p);
Laurent laurent_from_json(const nlohmann::json& j);

nlohmann::json wedge_to_json(const WedgeVector& v);
WedgeVector wedge_from_json(const nlohmann::json& j);

nlohmann::json tensor_to_json(const TensorVector& v);
TensorVector tensor_from_json(const nlohmann::json& j);

nlohmann::json multiplicities_to_json(const std::map<Weight, BigInt>& m);
std::map<Weight, BigInt> multiplicities_from_json(const nlohmann::json& j);

nlohmann::json monomials_to_json(const std::map<Weight, BigInt>& terms);
std::map<Weight, BigInt> monomials_from_json(const nlohmann::json& j);

}  // namespace qnchar
