#ifndef RIORDAN_RENDER_HPP
#define RIORDAN_RENDER_HPP

#include <cstddef>
#include <string>

#include <json.hpp>

#include "riordan/k_riordan.hpp"
#include "riordan/morphisms.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/series.hpp"
#include "riordan/triangular_matrix.hpp"

namespace riordan {

using Json = nlohmann::json;

/// Polynomial form, e.g. "1 - z^2 + 3/2*z^4". The output re-parses to
/// the same coefficients under the expression grammar; the zero series
/// prints as "0".
inline std::string to_pretty(const Series& s) {
  std::string out;
  for (std::size_t e = 0; e <= s.truncation(); ++e) {
    const Rational& c = s.coeff(e);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
    } else {
      // a leading "-z^e" would re-parse as (-z)^e under the grammar, so
      // the unit coefficient must be spelled out there
      const bool needs_explicit_one = mag.is_one() && negative && e >= 2 && out == "-";
      if (!mag.is_one() || needs_explicit_one) out += mag.str() + "*";
      out += (e == 1) ? "z" : "z^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

namespace detail {

inline Json coeff_strings(const Series& s) {
  Json arr = Json::array();
  for (const auto& c : s.coeffs()) arr.push_back(c.str());
  return arr;
}

}  // namespace detail

// JSON result documents. Rationals travel as "p/q" strings throughout;
// JSON numbers cannot hold them exactly.

inline Json to_json(const Series& s) {
  return Json{{"kind", "series"}, {"trunc", s.truncation()}, {"coeffs", detail::coeff_strings(s)}};
}

inline Json to_json(const KRiordanArray& d) {
  Json ms = Json::array();
  for (const auto& m : d.multipliers()) ms.push_back(detail::coeff_strings(m));
  return Json{{"kind", "array"},
              {"trunc", d.truncation()},
              {"k", d.arity()},
              {"g", detail::coeff_strings(d.g())},
              {"m", ms}};
}

inline Json to_json(const RiordanArray& r) { return to_json(as_k_riordan(r)); }

inline Json to_json(const TriangularMatrix& m) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < m.size(); ++n) {
    Json row = Json::array();
    for (const auto& e : m.row(n)) row.push_back(e.str());
    rows.push_back(row);
  }
  return Json{{"kind", "matrix"}, {"trunc", m.size() - 1}, {"size", m.size()}, {"rows", rows}};
}

inline Json to_json(const HomomorphismReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(Json{{"trial", f.trial},
                            {"check", f.check},
                            {"component", f.component},
                            {"position", f.position},
                            {"lhs", f.lhs},
                            {"rhs", f.rhs},
                            {"input_a", f.input_a},
                            {"input_b", f.input_b}});
  }
  return Json{{"kind", "report"},   {"map", r.map.name()}, {"trials", r.trials},
              {"trunc", r.truncation}, {"seed", r.seed},   {"verified", r.verified()},
              {"failures", failures}};
}

// CSV documents.

/// Lower-triangle rows under a "n\k" header; row n carries its n+1
/// entries.
inline std::string to_csv(const TriangularMatrix& m) {
  std::string out = "n\\k";
  for (std::size_t j = 0; j < m.size(); ++j) out += "," + std::to_string(j);
  out += "\n";
  for (std::size_t n = 0; n < m.size(); ++n) {
    out += std::to_string(n);
    for (const auto& e : m.row(n)) out += "," + e.str();
    out += "\n";
  }
  return out;
}

inline std::string to_csv(const Series& s) {
  std::string out = "k,coeff\n";
  for (std::size_t e = 0; e <= s.truncation(); ++e)
    out += std::to_string(e) + "," + s.coeff(e).str() + "\n";
  return out;
}

inline std::string to_csv(const KRiordanArray& d) {
  auto line = [](const std::string& name, const Series& s) {
    std::string row = name;
    for (const auto& c : s.coeffs()) row += "," + c.str();
    return row + "\n";
  };
  std::string out = "series,coeffs\n" + line("g", d.g());
  for (unsigned i = 1; i <= d.arity(); ++i)
    out += line(d.arity() == 1 ? "f" : "m" + std::to_string(i), d.multiplier(i));
  return out;
}

inline std::string to_csv(const HomomorphismReport& r) {
  std::string out = "field,value\n";
  out += "map," + r.map.name() + "\n";
  out += "trials," + std::to_string(r.trials) + "\n";
  out += "trunc," + std::to_string(r.truncation) + "\n";
  out += "seed," + std::to_string(r.seed) + "\n";
  out += std::string("verified,") + (r.verified() ? "true" : "false") + "\n";
  for (const auto& f : r.failures)
    out += "failure," + std::to_string(f.trial) + "," + f.check + "," + f.component + "[" +
           std::to_string(f.position) + "]\n";
  return out;
}

// Plain-text documents.

inline std::string to_pretty(const TriangularMatrix& m) {
  std::string out;
  for (std::size_t n = 0; n < m.size(); ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (j) out += " ";
      out += m.entry(n, j).str();
    }
    out += "\n";
  }
  return out;
}

inline std::string to_pretty(const KRiordanArray& d) {
  std::string out = "k: " + std::to_string(d.arity()) + "\n";
  out += "trunc: " + std::to_string(d.truncation()) + "\n";
  out += "g: " + to_pretty(d.g()) + "\n";
  for (unsigned i = 1; i <= d.arity(); ++i) {
    const std::string label = d.arity() == 1 ? "f" : "m" + std::to_string(i);
    out += label + ": " + to_pretty(d.multiplier(i)) + "\n";
  }
  return out;
}

inline std::string to_pretty(const HomomorphismReport& r) {
  std::string out = "map: " + r.map.name() + "\n";
  out += "trials: " + std::to_string(r.trials) + "\n";
  out += "trunc: " + std::to_string(r.truncation) + "\n";
  out += "seed: " + std::to_string(r.seed) + "\n";
  out += std::string("verified: ") + (r.verified() ? "true" : "false") + "\n";
  out += "failures: " + std::to_string(r.failures.size()) + "\n";
  for (const auto& f : r.failures)
    out += "  trial " + std::to_string(f.trial) + " " + f.check + " at " + f.component + "[" +
           std::to_string(f.position) + "]: " + f.lhs + " != " + f.rhs + "\n";
  return out;
}

}  // namespace riordan

#endif  // RIORDAN_RENDER_HPP
