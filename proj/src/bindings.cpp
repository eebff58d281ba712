/** Python bindings for the main library operations.
 *
 *  Value mapping: weights cross as tuples of ints, Laurent polynomials as
 *  {exponent: coefficient} dicts, symmetric functions and multiplicity
 *  columns as {exponent-tuple: coefficient} dicts.  All coefficients are
 *  exact (arbitrary-precision ints on both sides).
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qnchar/canonical.hpp"
#include "qnchar/characters.hpp"
#include "qnchar/crystal.hpp"
#include "qnchar/textio.hpp"
#include "qnchar/wedge.hpp"
#include "qnchar/weights.hpp"

#include <optional>
#include <string>

namespace py = pybind11;
using namespace qnchar;

namespace {

py::int_ to_py(const BigInt& c) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::tuple to_tuple(const Weight& w) {
  py::tuple t(w.size());
  for (size_t i = 0; i < w.size(); ++i) t[i] = w[i];
  return t;
}

py::dict laurent_dict(const Laurent& p) {
  py::dict d;
  for (const auto& [e, c] : p.terms()) d[py::int_(e)] = to_py(c);
  return d;
}

py::dict wedge_dict(const WedgeVector& v) {
  py::dict d;
  for (const auto& [lam, c] : v.terms()) d[to_tuple(lam)] = laurent_dict(c);
  return d;
}

py::dict multiplicity_dict(const std::map<Weight, BigInt>& m) {
  py::dict d;
  for (const auto& [w, c] : m) d[to_tuple(w)] = to_py(c);
  return d;
}

py::object weight_or_none(const std::optional<Weight>& w) {
  return w ? py::object(to_tuple(*w)) : py::none();
}

DecompMethod parse_method(const std::string& method) {
  if (method == "closed") return DecompMethod::Closed;
  if (method == "canonical") return DecompMethod::Canonical;
  throw std::invalid_argument("method must be 'closed' or 'canonical'");
}

enum class CrystalKind { Word, Dual, Dominant };

CrystalKind parse_kind(const std::string& kind, const Weight& lam) {
  if (kind == "word") return CrystalKind::Word;
  if (kind == "dual") return CrystalKind::Dual;
  if (kind == "dominant") {
    require_dominant(lam);
    return CrystalKind::Dominant;
  }
  throw std::invalid_argument("kind must be 'word', 'dual' or 'dominant'");
}

StraightenOptions fuel_options(long long fuel) {
  StraightenOptions opts;
  opts.fuel = fuel;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_qnchar, m) {
  m.doc() =
      "Exact canonical bases, decomposition numbers and characters for the "
      "queer Lie superalgebra q(n)";

  m.def(
      "ucb",
      [](const Weight& lam, long long fuel) {
        require_dominant(lam);
        return wedge_dict(ucb(lam, fuel_options(fuel)));
      },
      py::arg("lam"), py::arg("fuel") = 1000000,
      "Canonical basis vector U_lam in the F-basis: "
      "{weight: {q-exponent: coefficient}}");

  m.def(
      "ucb_string",
      [](const Weight& lam, long long fuel) {
        require_dominant(lam);
        return render_wedge(ucb(lam, fuel_options(fuel)));
      },
      py::arg("lam"), py::arg("fuel") = 1000000,
      "Rendered canonical basis expansion, e.g. 'F[0,0] + (q + q^3)·"
      "F[1,-1]'");

  m.def(
      "decomposition_column",
      [](const Weight& lam, const std::string& method) {
        require_dominant(lam);
        return multiplicity_dict(decomposition_column(lam, parse_method(method)));
      },
      py::arg("lam"), py::arg("method") = "closed",
      "Column lam of the decomposition matrix at q = 1");

  m.def(
      "ch_irreducible",
      [](const Weight& lam) {
        require_dominant(lam);
        return multiplicity_dict(ch_irreducible(lam).terms);
      },
      py::arg("lam"), "Character of the irreducible of highest weight lam");

  m.def(
      "ch_euler",
      [](const Weight& lam) {
        require_dominant(lam);
        return multiplicity_dict(ch_euler(lam).terms);
      },
      py::arg("lam"), "Euler characteristic character");

  m.def(
      "schur_p",
      [](const Weight& lam) { return multiplicity_dict(schur_p(lam).terms); },
      py::arg("lam"), "Schur P-function of a weakly decreasing weight");

  m.def(
      "hall_littlewood",
      [](const Weight& lam, long long t) {
        return multiplicity_dict(hall_littlewood(lam, t).terms);
      },
      py::arg("lam"), py::arg("t"), "Hall-Littlewood polynomial p_lam(t)");

  m.def(
      "ch_verma",
      [](const Weight& lam, int cutoff) {
        return multiplicity_dict(ch_verma_truncated(lam, cutoff).terms);
      },
      py::arg("lam"), py::arg("cutoff"),
      "Verma character truncated at total degree `cutoff` in x_i^-1 x_j");

  m.def(
      "straighten",
      [](const Weight& word, long long fuel) {
        return wedge_dict(straighten(word, fuel_options(fuel)));
      },
      py::arg("word"), py::arg("fuel") = 1000000,
      "Expand a tensor word in the F-basis");

  m.def(
      "crystal_e",
      [](const Weight& lam, int i, const std::string& kind) {
        switch (parse_kind(kind, lam)) {
          case CrystalKind::Word:
            return weight_or_none(crystal_word_E(lam, i));
          case CrystalKind::Dual:
            return weight_or_none(crystal_dual_E(lam, i));
          default:
            return weight_or_none(crystal_dom_E(lam, i));
        }
      },
      py::arg("lam"), py::arg("i"), py::arg("kind") = "word",
      "Crystal operator E~_i, or None");

  m.def(
      "crystal_f",
      [](const Weight& lam, int i, const std::string& kind) {
        switch (parse_kind(kind, lam)) {
          case CrystalKind::Word:
            return weight_or_none(crystal_word_F(lam, i));
          case CrystalKind::Dual:
            return weight_or_none(crystal_dual_F(lam, i));
          default:
            return weight_or_none(crystal_dom_F(lam, i));
        }
      },
      py::arg("lam"), py::arg("i"), py::arg("kind") = "word",
      "Crystal operator F~_i, or None");

  m.def(
      "crystal_eps",
      [](const Weight& lam, int i, const std::string& kind) {
        switch (parse_kind(kind, lam)) {
          case CrystalKind::Word:
            return crystal_word_eps(lam, i);
          case CrystalKind::Dual:
            return crystal_dual_eps(lam, i);
          default:
            return crystal_dom_eps(lam, i);
        }
      },
      py::arg("lam"), py::arg("i"), py::arg("kind") = "word",
      "String length toward E~_i");

  m.def(
      "crystal_phi",
      [](const Weight& lam, int i, const std::string& kind) {
        switch (parse_kind(kind, lam)) {
          case CrystalKind::Word:
            return crystal_word_phi(lam, i);
          case CrystalKind::Dual:
            return crystal_dual_phi(lam, i);
          default:
            return crystal_dom_phi(lam, i);
        }
      },
      py::arg("lam"), py::arg("i"), py::arg("kind") = "word",
      "String length toward F~_i");

  m.def("is_dominant", &is_dominant, py::arg("lam"));
  m.def("bruhat_leq", &bruhat_leq, py::arg("a"), py::arg("b"),
        "Bruhat order a ≼ b (same block required for truth)");
  m.def("gl_dominance_leq", &gl_dominance_leq, py::arg("a"), py::arg("b"),
        "gl-type dominance a ≤ b");
  m.def("same_block", &same_block, py::arg("a"), py::arg("b"));
  m.def("atypicality", &atypicality, py::arg("lam"),
        "Degree of atypicality #lam");

  m.def(
      "lower_block_set",
      [](const Weight& lam) {
        require_dominant(lam);
        std::vector<Weight> set = lower_block_set(lam);
        py::list out;
        for (auto it = set.rbegin(); it != set.rend(); ++it)
          out.append(to_tuple(*it));
        return out;
      },
      py::arg("lam"),
      "Dominant weights Bruhat-below lam in its block, ascending");
}
