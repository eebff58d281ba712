/** Command-line surface for the canonical-basis and character library.
 *
 *  Every computation the library exposes is reachable from a subcommand,
 *  with deterministic text output (weight-keyed listings ascend
 *  lexicographically) and an optional single-document JSON mode.
 *
 *  Exit codes: 0 success; 2 malformed input (bad weight syntax, a
 *  non-dominant weight where dominance is required, mismatched lengths);
 *  3 rewrite-fuel exhaustion.
 */

#include "CLI11.hpp"

#include "qnchar/canonical.hpp"
#include "qnchar/characters.hpp"
#include "qnchar/crystal.hpp"
#include "qnchar/tensor.hpp"
#include "qnchar/textio.hpp"
#include "qnchar/wedge.hpp"
#include "qnchar/weights.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qnchar;

void emit(bool as_json, const std::string& command, const nlohmann::json& result,
          const std::string& text) {
  if (as_json) {
    const nlohmann::json doc{{"command", command}, {"result", result}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text << '\n';
  }
}

nlohmann::json weight_or_null(const std::optional<Weight>& w) {
  return w ? weight_to_json(*w) : nlohmann::json(nullptr);
}

std::string weight_or_none(const std::optional<Weight>& w) {
  return w ? render_weight(*w) : "none";
}

const char* reach_string(Reach r) {
  switch (r) {
    case Reach::Reachable:
      return "yes";
    case Reach::Unreachable:
      return "no";
    default:
      return "fuel-exhausted";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact canonical bases, decomposition numbers and characters for the "
      "queer Lie superalgebra q(n)"};
  app.require_subcommand(1);

  // Shared option storage; only one subcommand runs per invocation.
  std::string weight_arg, second_arg, method = "closed", kind;
  long long fuel = 1000000;
  long long cutoff = 20;
  int node = 0;
  bool as_json = false, at_q1 = false, dual = false, dominant = false;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json,
                  "emit one JSON document {\"command\":..., \"result\":...}");
  };
  auto add_fuel = [&](CLI::App* cmd) {
    cmd->add_option("--fuel", fuel, "rewrite-step budget")
        ->default_val(1000000);
  };
  auto method_option = [&](CLI::App* cmd) {
    cmd->add_option("--method", method,
                    "closed pairing rule or canonical-basis evaluation")
        ->check(CLI::IsMember({"closed", "canonical"}))
        ->default_val("closed");
  };

  CLI::App* ucb_cmd = app.add_subcommand(
      "ucb", "Canonical basis vector U_W expanded in the F-basis");
  ucb_cmd->add_option("weight", weight_arg, "dominant weight, e.g. 0,0")
      ->required();
  ucb_cmd->add_flag("--q1", at_q1,
                    "evaluate at q = 1 (decomposition multiplicities)");
  method_option(ucb_cmd);
  add_fuel(ucb_cmd);
  add_json(ucb_cmd);

  CLI::App* dmat_cmd = app.add_subcommand(
      "dmat", "Decomposition-matrix column of W: rows (mu): d_{mu,W}");
  dmat_cmd->add_option("weight", weight_arg, "dominant weight")->required();
  method_option(dmat_cmd);
  add_json(dmat_cmd);

  CLI::App* char_cmd = app.add_subcommand(
      "char",
      "Characters: L irreducible, E Euler family, P Schur P-function, "
      "M Verma (truncated; requires --cutoff)");
  char_cmd->add_option("kind", kind, "one of L, E, P, M")
      ->required()
      ->check(CLI::IsMember({"L", "E", "P", "M"}));
  char_cmd->add_option("weight", weight_arg, "weight")->required();
  CLI::Option* cutoff_opt = char_cmd->add_option(
      "--cutoff", cutoff,
      "truncation: total degree in the variables x_i^-1 x_j");
  add_json(char_cmd);

  CLI::App* crystal_cmd = app.add_subcommand(
      "crystal", "Crystal operators E~, F~ and string lengths eps, phi at --i");
  crystal_cmd->add_option("weight", weight_arg, "integer tuple")->required();
  crystal_cmd->add_option("--i", node, "Dynkin node index, >= 0")
      ->required()
      ->check(CLI::NonNegativeNumber);
  CLI::Option* dual_opt = crystal_cmd->add_flag(
      "--dual", dual, "dual crystal (L-basis) instead of the word crystal");
  crystal_cmd
      ->add_flag("--dominant", dominant,
                 "crystal on dominant tuples (wedge basis); requires a "
                 "dominant weight")
      ->excludes(dual_opt);
  add_json(crystal_cmd);

  CLI::App* straighten_cmd = app.add_subcommand(
      "straighten", "Expand the image of a tensor word in the F-basis");
  straighten_cmd->add_option("word", weight_arg, "letters, e.g. -1,2,0")
      ->required();
  add_fuel(straighten_cmd);
  add_json(straighten_cmd);

  CLI::App* bruhat_cmd = app.add_subcommand(
      "bruhat",
      "Compare two weights: Bruhat order, gl-dominance, block, and a "
      "fuel-bounded down-move reachability probe");
  bruhat_cmd->add_option("first", weight_arg, "weight A")->required();
  bruhat_cmd->add_option("second", second_arg, "weight B")->required();
  add_fuel(bruhat_cmd);
  add_json(bruhat_cmd);

  CLI::App* bar2_cmd = app.add_subcommand(
      "bar2", "Bar involution of a two-letter word vector, exact below "
              "--cutoff in the key grading");
  bar2_cmd->add_option("word", weight_arg, "two letters, e.g. 1,-1")
      ->required();
  bar2_cmd->add_option("--cutoff", cutoff, "key truncation bound")
      ->default_val(20);
  add_json(bar2_cmd);

  CLI::App* blocks_cmd = app.add_subcommand(
      "blocks", "All dominant weights Bruhat-below W in its block");
  blocks_cmd->add_option("weight", weight_arg, "dominant weight")->required();
  add_json(blocks_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const DecompMethod decomp_method =
      method == "closed" ? DecompMethod::Closed : DecompMethod::Canonical;

  try {
    if (ucb_cmd->parsed()) {
      const Weight lam = parse_weight(weight_arg);
      require_dominant(lam);
      if (at_q1) {
        const auto column = decomposition_column(lam, decomp_method);
        emit(as_json, "ucb", multiplicities_to_json(column),
             render_multiplicities(column));
      } else {
        StraightenOptions opts;
        opts.fuel = fuel;
        const WedgeVector u = ucb(lam, opts);
        emit(as_json, "ucb", wedge_to_json(u), render_wedge(u));
      }
    } else if (dmat_cmd->parsed()) {
      const Weight lam = parse_weight(weight_arg);
      require_dominant(lam);
      const auto column = decomposition_column(lam, decomp_method);
      emit(as_json, "dmat", multiplicities_to_json(column),
           render_multiplicities(column));
    } else if (char_cmd->parsed()) {
      const Weight lam = parse_weight(weight_arg);
      if (kind == "M") {
        if (cutoff_opt->count() == 0)
          throw std::invalid_argument("char M requires --cutoff");
        const TruncatedSeries s =
            ch_verma_truncated(lam, static_cast<int>(cutoff));
        emit(as_json, "char",
             nlohmann::json{{"cutoff", s.degree},
                            {"terms", monomials_to_json(s.terms)}},
             render_monomials(s.terms));
      } else {
        SymFunc f;
        if (kind == "L") {
          require_dominant(lam);
          f = ch_irreducible(lam);
        } else if (kind == "E") {
          require_dominant(lam);
          f = ch_euler(lam);
        } else {
          f = schur_p(lam);
        }
        emit(as_json, "char", monomials_to_json(f.terms), render_symfunc(f));
      }
    } else if (crystal_cmd->parsed()) {
      const Weight lam = parse_weight(weight_arg);
      std::optional<Weight> e, fop;
      int eps = 0, phi = 0;
      if (dominant) {
        require_dominant(lam);
        e = crystal_dom_E(lam, node);
        fop = crystal_dom_F(lam, node);
        eps = crystal_dom_eps(lam, node);
        phi = crystal_dom_phi(lam, node);
      } else if (dual) {
        e = crystal_dual_E(lam, node);
        fop = crystal_dual_F(lam, node);
        eps = crystal_dual_eps(lam, node);
        phi = crystal_dual_phi(lam, node);
      } else {
        e = crystal_word_E(lam, node);
        fop = crystal_word_F(lam, node);
        eps = crystal_word_eps(lam, node);
        phi = crystal_word_phi(lam, node);
      }
      emit(as_json, "crystal",
           nlohmann::json{{"e", weight_or_null(e)},
                          {"f", weight_or_null(fop)},
                          {"eps", eps},
                          {"phi", phi}},
           "E: " + weight_or_none(e) + "\nF: " + weight_or_none(fop) +
               "\neps: " + std::to_string(eps) +
               "\nphi: " + std::to_string(phi));
    } else if (straighten_cmd->parsed()) {
      const Weight word = parse_weight(weight_arg);
      StraightenOptions opts;
      opts.fuel = fuel;
      const WedgeVector v = straighten(word, opts);
      emit(as_json, "straighten", wedge_to_json(v), render_wedge(v));
    } else if (bruhat_cmd->parsed()) {
      const Weight a = parse_weight(weight_arg);
      const Weight b = parse_weight(second_arg);
      if (a.size() != b.size())
        throw std::invalid_argument("weights have different lengths");
      const bool br = bruhat_leq(a, b);
      const bool dom = gl_dominance_leq(a, b);
      const bool blk = same_block(a, b);
      const Reach reach = downarrow_reachable(b, a, fuel);
      emit(as_json, "bruhat",
           nlohmann::json{{"bruhat", br},
                          {"dominance", dom},
                          {"same_block", blk},
                          {"reachable", reach_string(reach)}},
           std::string("bruhat: ") + (br ? "yes" : "no") +
               "\ndominance: " + (dom ? "yes" : "no") +
               "\nsame-block: " + (blk ? "yes" : "no") +
               "\nreachable: " + reach_string(reach));
    } else if (bar2_cmd->parsed()) {
      const Weight word = parse_weight(weight_arg);
      const TensorVector v = bar_n2(TensorVector::basis(word), cutoff);
      emit(as_json, "bar2", tensor_to_json(v), render_tensor(v));
    } else if (blocks_cmd->parsed()) {
      const Weight lam = parse_weight(weight_arg);
      require_dominant(lam);
      std::vector<Weight> set = lower_block_set(lam);
      std::reverse(set.begin(), set.end());
      nlohmann::json arr = nlohmann::json::array();
      std::string text;
      for (const Weight& mu : set) {
        arr.push_back(weight_to_json(mu));
        if (!text.empty()) text += "\n";
        text += render_weight_parenthesized(mu);
      }
      emit(as_json, "blocks", arr, text);
    }
  } catch (const FuelExhaustedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
