#include "dimers/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dimers/diagrams.hpp"
#include "dimers/errors.hpp"
#include "dimers/fsc.hpp"
#include "dimers/oracle.hpp"
#include "dimers/qseries.hpp"
#include "dimers/spectrum.hpp"

namespace dimers::cli {

namespace {

std::string command_name(Command c) {
  switch (c) {
    case Command::spectrum: return "spectrum";
    case Command::fsc: return "fsc";
    case Command::fit: return "fit";
    case Command::verify: return "verify";
    case Command::characters: return "characters";
  }
  return "?";
}

int parse_two_v(const std::string& s) {
  Rational v = parse_rational(s);
  Rational tv = v * 2;
  if (!is_integer(tv)) throw DomainError("sector index must be integer or half-integer: " + s);
  return static_cast<int>(tv.get_num().get_si());
}

std::string two_v_str(int two_v) { return make_rational(two_v, 2).get_str(); }

Json resolved_config(const RunConfig& c) {
  Json j;
  j["command"] = command_name(c.command);
  switch (c.command) {
    case Command::spectrum:
      j["n"] = c.n_grid;
      j["alpha"] = c.alpha;
      if (c.has_sector) j["v"] = c.sector;
      j["digits"] = c.precision_digits;
      break;
    case Command::fsc:
      j["n"] = c.n_grid;
      j["alpha"] = c.alpha;
      j["l_max"] = c.l_max;
      j["eps"] = c.eps_modes;
      j["mu"] = c.mu_modes;
      j["digits"] = c.precision_digits;
      break;
    case Command::fit:
      j["grid"] = c.n_grid;
      j["alpha"] = c.alpha;
      j["l_max"] = c.l_max;
      j["eps"] = c.eps_modes;
      j["mu"] = c.mu_modes;
      j["digits"] = c.precision_digits;
      break;
    case Command::verify:
      j["n_max"] = c.n_max;
      j["m"] = c.m_values;
      j["suites"] = c.suites.empty() ? Json::array({"matching", "algebra", "traces", "dims"})
                                     : Json(c.suites);
      break;
    case Command::characters:
      j["l"] = c.height;
      if (c.limit_mode) {
        j["limit"] = true;
        j["v"] = c.sector;
        j["order"] = c.order;
      }
      break;
  }
  j["format"] = c.format == OutputFormat::json ? "json" : "csv";
  return j;
}

std::vector<int> sectors_for(int n) {
  std::vector<int> out;
  for (int two_v = -n; two_v <= n; two_v += 2) out.push_back(two_v);
  return out;
}

}  // namespace

Json run_spectrum(const RunConfig& c) {
  Json art;
  art["schema_version"] = kSchemaVersion;
  art["config"] = resolved_config(c);
  art["columns"] = Json::array({"n", "alpha", "v", "diagram", "lambda", "energy"});
  Json rows = Json::array();
  Rational alpha = parse_rational(c.alpha);
  for (int n : c.n_grid) {
    LatticeParams params{n, alpha, c.precision_digits};
    params.validate();
    std::vector<int> sectors =
        c.has_sector ? std::vector<int>{parse_two_v(c.sector)} : sectors_for(n);
    for (int two_v : sectors) {
      for (const SpectralPoint& pt : sector_spectrum(params, two_v)) {
        rows.push_back(Json::array({n, alpha.get_str(), two_v_str(two_v), pt.diagram.str(),
                                    pt.lambda.str(c.precision_digits),
                                    pt.energy.str(c.precision_digits)}));
      }
    }
  }
  art["rows"] = rows;
  return art;
}

Json run_fsc(const RunConfig& c) {
  Json art;
  art["schema_version"] = kSchemaVersion;
  art["config"] = resolved_config(c);
  art["columns"] =
      Json::array({"n", "parity", "diagram", "energy", "fsc_energy", "residual"});
  Rational alpha = parse_rational(c.alpha);
  FscEvaluator eval(alpha, c.precision_digits, c.l_max);
  Json rows = Json::array();
  for (int n : c.n_grid) {
    LatticeParams params{n, alpha, c.precision_digits};
    params.validate();
    TwoColumnDiagram d = TwoColumnDiagram::from_sets(n / 2, c.eps_modes, c.mu_modes);
    BigFloat exact = energy(params, d);
    BigFloat approx = eval.energy(n, d);
    rows.push_back(Json::array({n, n % 2 == 0 ? "even" : "odd", d.str(),
                                exact.str(c.precision_digits), approx.str(c.precision_digits),
                                abs(exact - approx).str(c.precision_digits)}));
  }
  art["rows"] = rows;
  Json terms = Json::array();
  for (int l = 0; l <= c.l_max; ++l) {
    Json t;
    t["l"] = l;
    t["p_polynomial"] = eval.table().p[l].str("alpha");
    t["p_at_alpha"] = eval.table().p[l].eval(alpha).get_str();
    terms.push_back(t);
  }
  art["expansion_terms"] = terms;
  return art;
}

Json run_fit(const RunConfig& c) {
  Json art;
  art["schema_version"] = kSchemaVersion;
  art["config"] = resolved_config(c);
  Rational alpha = parse_rational(c.alpha);
  ResidualFit fit =
      residual_order_fit(c.n_grid, c.eps_modes, c.mu_modes, alpha, c.l_max, c.precision_digits);
  Json report;
  report["slope"] = fit.slope;
  report["expected_slope"] = fit.expected_slope;
  report["intercept"] = fit.intercept;
  report["digits"] = fit.precision_digits;
  Json residuals = Json::array();
  for (const auto& [n, r] : fit.residuals)
    residuals.push_back(Json::array({n, r.str(std::min(c.precision_digits, 20))}));
  report["residuals"] = residuals;
  art["report"] = report;
  return art;
}

namespace {

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

void run_matching_suite(const RunConfig& c, std::vector<CheckItem>& items) {
  int n_cap = std::min(c.n_max, 8);
  for (int n = 1; n <= n_cap; ++n) {
    DenseOperator<AlphaPoly> t = transfer_matrix<AlphaPoly>(n, AlphaPoly::monomial(Rational(1), 1));
    for (int m : c.m_values) {
      if (n * m > 64) continue;
      AlphaPoly traced = trace_power(t, m);
      CountPoly direct = brute_force_z_poly(n, m);
      bool ok = traced == to_rational_poly(direct);
      for (long a = 1; a <= 3 && ok; ++a) {
        Rational lhs = traced.eval(Rational(a));
        Int rhs = brute_force_z<Int>(n, m, Int(a));
        ok = lhs == Rational(rhs);
      }
      items.push_back({"trace_vs_matching n=" + std::to_string(n) + " m=" + std::to_string(m), ok,
                       ok ? "exact" : "polynomial mismatch"});
    }
  }
}

void run_algebra_suite(const RunConfig& c, std::vector<CheckItem>& items) {
  int n_cap = std::min(c.n_max, 8);
  for (int n = 1; n <= n_cap; ++n) {
    AlphaPoly alpha = AlphaPoly::monomial(Rational(1), 1);
    DenseOperator<AlphaPoly> v3 = build_v3<AlphaPoly>(n, alpha);
    DenseOperator<AlphaPoly> v3_desc = build_v3<AlphaPoly>(n, alpha, FactorOrder::descending);
    DenseOperator<AlphaPoly> v1 = build_v1<AlphaPoly>(n);
    DenseOperator<AlphaPoly> t = transfer_matrix<AlphaPoly>(n, alpha);
    std::vector<Rational> diag = variation_values(n);
    bool anti_t = matrix_is_zero(anticommutator_with_diagonal(diag, t));
    bool comm_v3 = matrix_is_zero(commutator_with_diagonal(diag, v3));
    bool anti_v1 = matrix_is_zero(anticommutator_with_diagonal(diag, v1));
    bool order_free = matrices_equal(v3, v3_desc);
    DenseOperator<AlphaPoly> t2 = multiply(t, t);
    bool sector_blocks = true;
    for (Eigen::Index i = 0; i < t2.rows() && sector_blocks; ++i)
      for (Eigen::Index j = 0; j < t2.cols(); ++j)
        if (diag[i] != diag[j] && !t2(i, j).is_zero()) {
          sector_blocks = false;
          break;
        }
    items.push_back({"anticommutes_VT n=" + std::to_string(n), anti_t, "exact"});
    items.push_back({"commutes_V_V3 n=" + std::to_string(n), comm_v3, "exact"});
    items.push_back({"anticommutes_V_V1 n=" + std::to_string(n), anti_v1, "exact"});
    items.push_back({"V3_order_independent n=" + std::to_string(n), order_free, "exact"});
    items.push_back({"T2_sector_blocks n=" + std::to_string(n), sector_blocks, "exact"});
  }
}

double trace_rule_delta(int n, int k) {
  LatticeParams params{n, Rational(1), 20};
  SpectrumContext ctx(params);
  double sum = 0;
  for_each_diagram(n / 2, [&](const TwoColumnDiagram& d) {
    double lam = ctx.eigenvalue(d).to_double();
    sum += std::pow(lam, k);
  });
  if (n % 2 == 1) sum *= 2;
  DenseOperator<double> t = transfer_matrix<double>(n, 1.0);
  DenseOperator<double> t2 = t * t;
  DenseOperator<double> acc = t2;
  for (int i = 1; i < k; ++i) acc = DenseOperator<double>(acc * t2);
  double tr = acc.trace();
  return std::abs(sum - tr) / std::max(1.0, std::abs(tr));
}

void run_traces_suite(const RunConfig& c, std::vector<CheckItem>& items) {
  for (int n = 1; n <= c.n_max; ++n) {
    if (n % 2 == 0 && n > 10) continue;
    if (n % 2 == 1 && n > 9) continue;
    for (int k = 1; k <= 3; ++k) {
      double delta = trace_rule_delta(n, k);
      bool ok = delta < 1e-9;
      std::ostringstream os;
      os << "rel_delta=" << delta;
      items.push_back({"trace_sum_rule n=" + std::to_string(n) + " k=" + std::to_string(k), ok,
                       os.str()});
    }
  }
}

void run_dims_suite(const RunConfig& c, std::vector<CheckItem>& items) {
  int n_cap = std::min(c.n_max, 12);
  for (int n = 1; n <= n_cap; ++n) {
    std::vector<Rational> diag = variation_values(n);
    bool ok = true;
    for (int two_v = -n; two_v <= n && ok; two_v += 2) {
      Rational v = make_rational(two_v, 2);
      long count = 0;
      for (const Rational& x : diag)
        if (x == v) ++count;
      ok = Rational(count) == Rational(sector_dimension2(n, two_v));
    }
    items.push_back({"sector_dimensions n=" + std::to_string(n), ok, "exact"});
  }
}

}  // namespace

Json run_verify(const RunConfig& c, bool& all_passed) {
  if (c.n_max < 1 || c.n_max > kDenseBudgetN)
    throw SizeError("verify budget exceeded (need 1 <= n-max <= 14)");
  auto wants = [&c](const std::string& s) {
    return c.suites.empty() || std::find(c.suites.begin(), c.suites.end(), s) != c.suites.end();
  };
  std::vector<CheckItem> items;
  if (wants("matching")) run_matching_suite(c, items);
  if (wants("algebra")) run_algebra_suite(c, items);
  if (wants("traces")) run_traces_suite(c, items);
  if (wants("dims")) run_dims_suite(c, items);

  Json art;
  art["schema_version"] = kSchemaVersion;
  art["config"] = resolved_config(c);
  Json rows = Json::array();
  all_passed = true;
  int passed = 0;
  for (const CheckItem& item : items) {
    rows.push_back(Json::array({item.name, item.passed ? "pass" : "FAIL", item.detail}));
    all_passed = all_passed && item.passed;
    passed += item.passed ? 1 : 0;
  }
  art["columns"] = Json::array({"check", "status", "detail"});
  art["rows"] = rows;
  art["summary"] = Json{{"total", items.size()}, {"passed", passed}, {"all_passed", all_passed}};
  return art;
}

Json run_characters(const RunConfig& c) {
  Json art;
  art["schema_version"] = kSchemaVersion;
  art["config"] = resolved_config(c);
  if (c.limit_mode) {
    int two_v = parse_two_v(c.sector);
    ContinuumCheck check = continuum_limit_check(two_v, c.order, c.height);
    Json report;
    report["v"] = two_v_str(two_v);
    report["L"] = c.height;
    report["order"] = c.order;
    report["all_match"] = check.all_match;
    if (check.first_mismatch_grain) {
      report["first_mismatch_grain"] = *check.first_mismatch_grain;
      report["first_mismatch_exponent"] = make_rational(*check.first_mismatch_grain, 24).get_str();
    }
    art["report"] = report;
    return art;
  }
  if (c.height < 0 || c.height > 8)
    throw SizeError("exhaustive character identities limited to L <= 8");
  Json rows = Json::array();
  bool all = true;
  for (int big_l = 1; big_l <= c.height; ++big_l) {
    for (int v = -big_l; v <= big_l; ++v) {
      bool enum_ok = exact_equal(sector_partition_even(big_l, v),
                                 sector_partition_even_closed(big_l, v));
      CharacterSumResult sum = character_sum_identity(big_l, 2 * v, Parity::even);
      bool q1_ok = sum.partition.value_at_one() == Rational(sector_dimension2(2 * big_l, 2 * v));
      all = all && enum_ok && sum.holds && q1_ok;
      rows.push_back(Json::array({"even", big_l, two_v_str(2 * v), enum_ok ? "pass" : "FAIL",
                                  sum.holds ? "pass" : "FAIL", q1_ok ? "pass" : "FAIL",
                                  sum.r_first, sum.r_last}));
    }
    for (int two_v = -(2 * big_l + 1); two_v <= 2 * big_l + 1; two_v += 2) {
      bool enum_ok = exact_equal(sector_partition_odd(big_l, two_v),
                                 sector_partition_odd_closed(big_l, two_v));
      CharacterSumResult sum = character_sum_identity(big_l, two_v, Parity::odd);
      bool q1_ok =
          sum.partition.value_at_one() == Rational(sector_dimension2(2 * big_l + 1, two_v));
      all = all && enum_ok && sum.holds && q1_ok;
      rows.push_back(Json::array({"odd", big_l, two_v_str(two_v), enum_ok ? "pass" : "FAIL",
                                  sum.holds ? "pass" : "FAIL", q1_ok ? "pass" : "FAIL",
                                  sum.r_first, sum.r_last}));
    }
  }
  art["columns"] = Json::array(
      {"parity", "L", "v", "enumeration_vs_closed", "character_sum", "q1_dimension", "r_first", "r_last"});
  art["rows"] = rows;
  art["summary"] = Json{{"all_identities", all}};
  return art;
}

std::string render_csv(const Json& artifact) {
  std::ostringstream os;
  if (artifact.contains("columns") && artifact.contains("rows")) {
    const Json& cols = artifact["columns"];
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ",";
      os << cols[i].get<std::string>();
    }
    os << "\n";
    for (const Json& row : artifact["rows"]) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ",";
        if (row[i].is_string())
          os << row[i].get<std::string>();
        else
          os << row[i].dump();
      }
      os << "\n";
    }
    return os.str();
  }
  if (artifact.contains("report")) {
    for (const auto& [key, value] : artifact["report"].items()) {
      os << key << ",";
      if (value.is_string())
        os << value.get<std::string>();
      else
        os << value.dump();
      os << "\n";
    }
    return os.str();
  }
  return artifact.dump(2) + "\n";
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    Json artifact;
    bool all_passed = true;
    switch (config.command) {
      case Command::spectrum: artifact = run_spectrum(config); break;
      case Command::fsc: artifact = run_fsc(config); break;
      case Command::fit: artifact = run_fit(config); break;
      case Command::verify: artifact = run_verify(config, all_passed); break;
      case Command::characters: {
        artifact = run_characters(config);
        if (!config.limit_mode && artifact.contains("summary"))
          all_passed = artifact["summary"]["all_identities"].get<bool>();
        break;
      }
    }
    result.artifact = config.format == OutputFormat::json ? artifact.dump(2) + "\n"
                                                          : render_csv(artifact);
    result.exit_code = all_passed ? kExitOk : 1;
    if (!config.out_path.empty()) {
      std::ofstream out(config.out_path, std::ios::binary);
      if (!out) throw DomainError("cannot open output path: " + config.out_path);
      out << result.artifact;
      result.artifact.clear();
    }
  } catch (const PrecisionError& e) {
    result.exit_code = kExitPrecision;
    result.diagnostic = e.what();
  } catch (const AccuracyError& e) {
    result.exit_code = kExitPrecision;
    result.diagnostic = e.what();
  } catch (const DomainError& e) {
    result.exit_code = kExitUsage;
    result.diagnostic = e.what();
  } catch (const SizeError& e) {
    result.exit_code = kExitUsage;
    result.diagnostic = e.what();
  } catch (const std::exception& e) {
    result.exit_code = kExitInternal;
    result.diagnostic = e.what();
  }
  return result;
}

}  // namespace dimers::cli
