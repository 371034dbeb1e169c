// Command-line front end: parses generating-function expressions,
// executes group computations, and emits matrices, arrays, series and
// verification reports as pretty text, JSON or CSV.
//
// Exit codes: 0 success, 1 domain error, 2 usage or syntax error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riordan/riordan.hpp"

namespace {

using namespace riordan;

struct Common {
  std::size_t trunc = 24;
  std::string format = "pretty";
  std::uint64_t seed = 0;
};

std::string g_format = "pretty";  // last parsed format, for error documents

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--trunc", c.trunc, "truncation order N")->capture_default_str();
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
}

Series eval_arg(const std::string& text, std::size_t trunc) {
  return evaluate_expression(text, trunc);
}

/// Assembles an array from --g plus either --f (ordinary Riordan) or
/// repeated --m flags (k inferred from the count).
KRiordanArray build_array(const std::string& g_expr, const std::string& f_expr,
                          const std::vector<std::string>& m_exprs, std::size_t trunc) {
  const Series g = eval_arg(g_expr, trunc);
  if (!f_expr.empty()) {
    return KRiordanArray(1, g, {eval_arg(f_expr, trunc)});
  }
  std::vector<Series> ms;
  ms.reserve(m_exprs.size());
  for (const auto& e : m_exprs) ms.push_back(eval_arg(e, trunc));
  const unsigned k = static_cast<unsigned>(ms.size());
  return KRiordanArray(k, g, std::move(ms));
}

void print_series(const Series& s, const Common& c) {
  if (c.format == "json")
    std::cout << to_json(s).dump(2) << "\n";
  else if (c.format == "csv")
    std::cout << to_csv(s);
  else
    std::cout << to_pretty(s) << "\n";
}

void print_array(const KRiordanArray& d, const Common& c) {
  if (c.format == "json")
    std::cout << to_json(d).dump(2) << "\n";
  else if (c.format == "csv")
    std::cout << to_csv(d);
  else
    std::cout << to_pretty(d);
}

void print_matrix(const TriangularMatrix& m, const Common& c) {
  if (c.format == "json")
    std::cout << to_json(m).dump(2) << "\n";
  else if (c.format == "csv")
    std::cout << to_csv(m);
  else
    std::cout << to_pretty(m);
}

void print_report(const HomomorphismReport& r, const Common& c) {
  if (c.format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else if (c.format == "csv")
    std::cout << to_csv(r);
  else
    std::cout << to_pretty(r);
}

struct MapSpec {
  std::string name;
  unsigned k = 0;
  unsigned i = 0;
  unsigned pos = 0;
};

MorphismId morphism_from_spec(const MapSpec& spec) {
  if (spec.name == "psi") return MorphismId::psi_checkerboard();
  if (spec.name == "phi") return MorphismId::phi();
  if (spec.name == "psi2") return MorphismId::psi_type2();
  if (spec.name == "phik" || spec.name == "phi_k") {
    if (spec.k == 0) throw ArityError("map phik needs --k");
    return spec.pos == 0 ? MorphismId::phi_k(spec.k) : MorphismId::phi_k(spec.k, spec.pos);
  }
  if (spec.name == "chi") return MorphismId::chi();
  if (spec.name == "chii" || spec.name == "chi_i") {
    if (spec.k == 0) throw ArityError("map chii needs --k (domain arity)");
    if (spec.i == 0) throw PositionError("map chii needs --i (inserted-z position)");
    return MorphismId::chi_i(spec.k, spec.i);
  }
  throw Error("unknown map '" + spec.name + "' (expected psi, phi, psi2, phik, chi or chii)");
}

void emit_error(const std::string& category, const std::string& message,
                std::optional<std::size_t> position) {
  if (g_format == "json") {
    Json doc{{"kind", "error"}, {"error", category}, {"message", message}};
    if (position) doc["position"] = *position;
    std::cerr << doc.dump(2) << "\n";
  } else {
    std::cerr << "error (" << category << "): " << message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the Riordan, Double Riordan and k-Riordan groups"};
  app.require_subcommand(1);

  // eval
  Common eval_common;
  std::string eval_expr;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a generating-function expression");
  cmd_eval->add_option("--expr", eval_expr, "expression")->required();
  add_common(cmd_eval, eval_common);
  cmd_eval->callback([&] {
    g_format = eval_common.format;
    print_series(eval_arg(eval_expr, eval_common.trunc), eval_common);
  });

  // matrix
  Common matrix_common;
  std::string matrix_g, matrix_f;
  std::vector<std::string> matrix_m;
  auto* cmd_matrix = app.add_subcommand("matrix", "expand an array to its triangular matrix");
  cmd_matrix->add_option("--g", matrix_g, "initial column g")->required();
  auto* matrix_f_opt = cmd_matrix->add_option("--f", matrix_f, "multiplier f (ordinary Riordan)");
  cmd_matrix->add_option("--m", matrix_m, "multipliers m1..mk, repeated in order")
      ->excludes(matrix_f_opt);
  add_common(cmd_matrix, matrix_common);
  cmd_matrix->callback([&] {
    g_format = matrix_common.format;
    const KRiordanArray d = build_array(matrix_g, matrix_f, matrix_m, matrix_common.trunc);
    print_matrix(to_matrix(d, matrix_common.trunc), matrix_common);
  });

  // rmul
  Common rmul_common;
  std::string rmul_g, rmul_f, rmul_gg, rmul_ff;
  std::vector<std::string> rmul_m, rmul_mm;
  auto* cmd_rmul = app.add_subcommand("rmul", "multiply two arrays");
  cmd_rmul->add_option("--g", rmul_g, "left g")->required();
  auto* rmul_f_opt = cmd_rmul->add_option("--f", rmul_f, "left f");
  cmd_rmul->add_option("--m", rmul_m, "left multipliers")->excludes(rmul_f_opt);
  cmd_rmul->add_option("--G", rmul_gg, "right g")->required();
  auto* rmul_ff_opt = cmd_rmul->add_option("--F", rmul_ff, "right f");
  cmd_rmul->add_option("--M", rmul_mm, "right multipliers")->excludes(rmul_ff_opt);
  add_common(cmd_rmul, rmul_common);
  cmd_rmul->callback([&] {
    g_format = rmul_common.format;
    const KRiordanArray lhs = build_array(rmul_g, rmul_f, rmul_m, rmul_common.trunc);
    const KRiordanArray rhs = build_array(rmul_gg, rmul_ff, rmul_mm, rmul_common.trunc);
    print_array(lhs * rhs, rmul_common);
  });

  // rinv
  Common rinv_common;
  std::string rinv_g, rinv_f;
  std::vector<std::string> rinv_m;
  auto* cmd_rinv = app.add_subcommand("rinv", "invert an array");
  cmd_rinv->add_option("--g", rinv_g, "g")->required();
  auto* rinv_f_opt = cmd_rinv->add_option("--f", rinv_f, "f");
  cmd_rinv->add_option("--m", rinv_m, "multipliers")->excludes(rinv_f_opt);
  add_common(cmd_rinv, rinv_common);
  cmd_rinv->callback([&] {
    g_format = rinv_common.format;
    print_array(inverse(build_array(rinv_g, rinv_f, rinv_m, rinv_common.trunc)), rinv_common);
  });

  // apply
  Common apply_common;
  std::string apply_g, apply_f, apply_a;
  std::vector<std::string> apply_m;
  auto* cmd_apply = app.add_subcommand("apply", "apply an array to a column vector A");
  cmd_apply->add_option("--g", apply_g, "g")->required();
  auto* apply_f_opt = cmd_apply->add_option("--f", apply_f, "f");
  cmd_apply->add_option("--m", apply_m, "multipliers")->excludes(apply_f_opt);
  cmd_apply->add_option("--A", apply_a, "column generating function")->required();
  add_common(cmd_apply, apply_common);
  cmd_apply->callback([&] {
    g_format = apply_common.format;
    const KRiordanArray d = build_array(apply_g, apply_f, apply_m, apply_common.trunc);
    const Series a = eval_arg(apply_a, apply_common.trunc);
    if (d.arity() == 1) {
      print_series(ftra_apply(as_riordan(d), a), apply_common);
    } else if (d.arity() == 2) {
      if (support_is(a, 2, 0))
        print_series(ftdra_apply_even(d, a), apply_common);
      else if (support_is(a, 2, 1))
        print_series(ftdra_apply_odd(d, a), apply_common);
      else
        throw SupportError("apply: A must be even or odd for a Double Riordan array");
    } else {
      throw ArityError("apply: only defined for k = 1 and k = 2 arrays");
    }
  });

  // map
  Common map_common;
  MapSpec map_spec;
  std::string map_g, map_f;
  std::vector<std::string> map_m;
  auto* cmd_map = app.add_subcommand("map", "apply a monomorphism to an array");
  cmd_map->add_option("--map", map_spec.name, "psi | phi | psi2 | phik | chi | chii")->required();
  cmd_map->add_option("--k", map_spec.k, "arity parameter (phik: target, chii: domain)");
  cmd_map->add_option("--i", map_spec.i, "inserted-z position for chii");
  cmd_map->add_option("--pos", map_spec.pos, "non-z multiplier position for phik");
  cmd_map->add_option("--g", map_g, "g")->required();
  auto* map_f_opt = cmd_map->add_option("--f", map_f, "f");
  cmd_map->add_option("--m", map_m, "multipliers")->excludes(map_f_opt);
  add_common(cmd_map, map_common);
  cmd_map->callback([&] {
    g_format = map_common.format;
    const MorphismId id = morphism_from_spec(map_spec);
    const KRiordanArray d = build_array(map_g, map_f, map_m, map_common.trunc);
    print_array(apply_morphism(id, d), map_common);
  });

  // verify
  Common verify_common;
  MapSpec verify_spec;
  std::size_t verify_trials = 100;
  auto* cmd_verify = app.add_subcommand("verify", "randomized check of a monomorphism's laws");
  cmd_verify->add_option("--map", verify_spec.name, "psi | phi | psi2 | phik | chi | chii")
      ->required();
  cmd_verify->add_option("--k", verify_spec.k, "arity parameter");
  cmd_verify->add_option("--i", verify_spec.i, "inserted-z position for chii");
  cmd_verify->add_option("--pos", verify_spec.pos, "non-z multiplier position for phik");
  cmd_verify->add_option("--trials", verify_trials, "number of random trials")
      ->capture_default_str();
  add_common(cmd_verify, verify_common);
  cmd_verify->callback([&] {
    g_format = verify_common.format;
    const MorphismId id = morphism_from_spec(verify_spec);
    const HomomorphismReport report =
        verify_homomorphism(id, verify_trials, verify_common.trunc, verify_common.seed);
    print_report(report, verify_common);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what(), std::nullopt);
    return 2;
  } catch (const riordan::ParseError& e) {
    emit_error("parse", e.what(), e.position);
    return 2;
  } catch (const riordan::Error& e) {
    emit_error("domain", e.what(), std::nullopt);
    return 1;
  }
  return 0;
}
