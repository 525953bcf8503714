// toeplab: command-line front end over the Toeplitz verification laboratory.
//
// Every subcommand emits one table as CSV (default) or JSON, fully buffered
// so errors never leave partial output on the data stream. Exit codes:
//   0  success
//   1  usage error (bad flags or malformed inputs; message on stderr)
//   2  numerical failure (domain/size-guard violations, solver non-convergence)

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "toeplab/banded.hpp"
#include "toeplab/integral_operator.hpp"
#include "toeplab/nilpotent.hpp"
#include "toeplab/permutations.hpp"
#include "toeplab/spectra.hpp"
#include "toeplab/toeplitz.hpp"

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// shortest round-trip decimal for a double
std::string fmt_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_csv(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c)) return fmt_real(std::get<double>(c));
  return std::get<std::string>(c);
}

std::string table_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) out += ',';
    out += t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_csv(row[i]);
    }
    out += '\n';
  }
  return out;
}

ordered_json cell_json(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c)) return std::get<std::int64_t>(c);
  if (std::holds_alternative<double>(c)) return std::get<double>(c);
  return std::get<std::string>(c);
}

ordered_json table_rows_json(const Table& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.header[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::string render(const Table& t, const ordered_json& config, bool json,
                   const ordered_json& extra = ordered_json::object()) {
  if (!json) return table_csv(t);
  ordered_json doc = ordered_json::object();
  doc["config"] = config;
  for (const auto& [key, value] : extra.items()) doc[key] = value;
  doc["rows"] = table_rows_json(t);
  return doc.dump(2) + "\n";
}

std::vector<int> parse_perm(const std::string& text) {
  std::vector<int> image;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc() || ptr != text.data() + comma)
      throw UsageError("--perm: expected comma-separated integers");
    image.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return image;
}

toeplab::Permutation resolve_permutation(std::size_t n, const std::string& perm_text,
                                         std::uint64_t seed, bool seed_given) {
  if (!perm_text.empty()) {
    std::vector<int> image = parse_perm(perm_text);
    if (n != 0 && image.size() != n)
      throw UsageError("--perm length disagrees with --n");
    try {
      return toeplab::Permutation(std::move(image));
    } catch (const toeplab::DomainError& e) {
      throw UsageError(std::string("--perm: ") + e.what());
    }
  }
  if (!seed_given) throw UsageError("need either --perm or --seed");
  if (n == 0) throw UsageError("--n is required with --seed");
  return toeplab::sample_uniform(n, seed);
}

toeplab::KernelId parse_kernel(const std::string& name) {
  if (name == "triangular") return toeplab::KernelId::Triangular;
  if (name == "min") return toeplab::KernelId::BrownianMin;
  if (name == "conv") return toeplab::KernelId::ConvIndicator;
  throw UsageError("--kernel must be one of: triangular, min, conv");
}

double one_sided_cosine_integral(std::size_t k) {
  if (k == 0) return 0.5;
  if (k % 2 == 0) return 0.0;
  const double pk = std::numbers::pi * static_cast<double>(k);
  return 2.0 / (pk * pk);
}

const char* verdict_name(toeplab::ReportEntry::Verdict v) {
  switch (v) {
    case toeplab::ReportEntry::Verdict::Match: return "MATCH";
    case toeplab::ReportEntry::Verdict::Mismatch: return "MISMATCH";
    case toeplab::ReportEntry::Verdict::Unverified: return "UNVERIFIED";
  }
  return "UNVERIFIED";
}

std::string report_csv(const toeplab::DiscrepancyReport& report) {
  Table t;
  t.header = {"quantity", "paper_value", "computed_value", "abs_diff",
              "rel_diff", "tolerance",   "verdict"};
  for (const toeplab::ReportEntry& e : report.entries) {
    std::vector<Cell> row;
    row.emplace_back(e.quantity);
    row.emplace_back(e.has_paper_value ? Cell(e.paper_value) : Cell(std::string("n/a")));
    row.emplace_back(e.computed_value);
    row.emplace_back(e.abs_diff);
    row.emplace_back(e.has_rel_diff ? Cell(e.rel_diff) : Cell(std::string("n/a")));
    row.emplace_back(e.tolerance);
    row.emplace_back(std::string(verdict_name(e.verdict)));
    t.rows.push_back(std::move(row));
  }
  return table_csv(t);
}

std::string report_json(const toeplab::DiscrepancyReport& report,
                        const toeplab::ReportConfig& cfg) {
  ordered_json doc = ordered_json::object();
  ordered_json config = ordered_json::object();
  config["m"] = cfg.m;
  config["quad_points"] = cfg.quad_points;
  config["n_list"] = cfg.n_list;
  config["k_max"] = cfg.k_max;
  config["p_max"] = cfg.p_max;
  config["tol_spectral"] = cfg.tol_spectral;
  config["tol_identity"] = cfg.tol_identity;
  doc["config"] = std::move(config);
  ordered_json entries = ordered_json::array();
  for (const toeplab::ReportEntry& e : report.entries) {
    ordered_json obj = ordered_json::object();
    obj["quantity"] = e.quantity;
    if (e.has_paper_value)
      obj["paper_value"] = e.paper_value;
    else
      obj["paper_value"] = "n/a";
    obj["computed_value"] = e.computed_value;
    obj["abs_diff"] = e.abs_diff;
    if (e.has_rel_diff)
      obj["rel_diff"] = e.rel_diff;
    else
      obj["rel_diff"] = "n/a";
    obj["tolerance"] = e.tolerance;
    obj["verdict"] = verdict_name(e.verdict);
    entries.push_back(std::move(obj));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::vector<std::size_t> parse_size_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc() || ptr != text.data() + comma || value == 0)
      throw UsageError(std::string(flag) + ": expected comma-separated positive integers");
    values.push_back(value);
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return values;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for scaled-kernel and permutation Toeplitz matrices"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output_path;
  app.add_option("--format", format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output_path, "write output to this file instead of stdout");

  std::string out; // rendered on success only

  // ---- displacement ------------------------------------------------------
  auto* sc_disp = app.add_subcommand("displacement", "displacement histogram d_k of a permutation");
  std::size_t disp_n = 0;
  std::string disp_perm;
  std::uint64_t disp_seed = 0;
  sc_disp->add_option("--n", disp_n, "order");
  sc_disp->add_option("--perm", disp_perm, "one-line notation, e.g. 2,4,1,3");
  auto* disp_seed_opt = sc_disp->add_option("--seed", disp_seed, "sample a seeded permutation");
  sc_disp->callback([&] {
    const toeplab::Permutation p =
        resolve_permutation(disp_n, disp_perm, disp_seed, !disp_seed_opt->empty());
    const toeplab::DisplacementHistogram h = toeplab::histogram(p);
    const long bound = static_cast<long>(h.order()) - 1;
    Table t;
    t.header = {"k", "d_k"};
    for (long k = -bound; k <= bound; ++k)
      t.rows.push_back({Cell(static_cast<std::int64_t>(k)), Cell(h.count(k))});
    ordered_json cfg;
    cfg["n"] = h.order();
    if (!disp_perm.empty())
      cfg["perm"] = p.image();
    else
      cfg["seed"] = disp_seed;
    out = render(t, cfg, format == "json");
  });

  // ---- expectation -------------------------------------------------------
  auto* sc_exp = app.add_subcommand("expectation", "E[d_k] = (n-|k|)/n");
  std::size_t exp_n = 0;
  long exp_k = 0;
  sc_exp->add_option("--n", exp_n, "order")->required()->check(CLI::PositiveNumber);
  sc_exp->add_option("--k", exp_k, "diagonal")->required();
  sc_exp->callback([&] {
    Table t;
    t.header = {"n", "k", "expected_dk"};
    t.rows.push_back({Cell(static_cast<std::int64_t>(exp_n)), Cell(static_cast<std::int64_t>(exp_k)),
                      Cell(toeplab::expected_dk(exp_n, exp_k))});
    out = render(t, {{"n", exp_n}, {"k", exp_k}}, format == "json");
  });

  // ---- variance ----------------------------------------------------------
  auto* sc_var = app.add_subcommand("variance", "exact and leading-order Var(d_k)");
  std::size_t var_n = 0;
  long var_k = 0;
  sc_var->add_option("--n", var_n, "order")->required()->check(CLI::PositiveNumber);
  sc_var->add_option("--k", var_k, "diagonal")->required();
  sc_var->callback([&] {
    Table t;
    t.header = {"n", "k", "variance_exact", "variance_asymptotic"};
    t.rows.push_back({Cell(static_cast<std::int64_t>(var_n)), Cell(static_cast<std::int64_t>(var_k)),
                      Cell(toeplab::variance_dk_exact(var_n, var_k)),
                      Cell(toeplab::variance_dk_asymptotic(var_n, var_k))});
    out = render(t, {{"n", var_n}, {"k", var_k}}, format == "json");
  });

  // ---- mc-moments --------------------------------------------------------
  auto* sc_mc = app.add_subcommand("mc-moments", "Monte Carlo moments of d_k");
  std::size_t mc_n = 0;
  long mc_k = 0;
  std::uint64_t mc_trials = 0, mc_seed = 0;
  unsigned mc_workers = 1;
  sc_mc->add_option("--n", mc_n, "order")->required()->check(CLI::PositiveNumber);
  sc_mc->add_option("--k", mc_k, "diagonal")->required();
  sc_mc->add_option("--trials", mc_trials, "number of sampled permutations")
      ->required()
      ->check(CLI::PositiveNumber);
  sc_mc->add_option("--seed", mc_seed, "base seed (default 0)");
  sc_mc->add_option("--workers", mc_workers, "worker streams (default 1)")
      ->check(CLI::PositiveNumber);
  sc_mc->callback([&] {
    const toeplab::McEstimate est = toeplab::mc_moments_dk(mc_n, mc_k, mc_trials, mc_seed, mc_workers);
    Table t;
    t.header = {"n", "k", "trials", "seed", "workers", "mean", "variance", "stderr"};
    t.rows.push_back({Cell(static_cast<std::int64_t>(mc_n)), Cell(static_cast<std::int64_t>(mc_k)),
                      Cell(static_cast<std::int64_t>(mc_trials)),
                      Cell(static_cast<std::int64_t>(mc_seed)),
                      Cell(static_cast<std::int64_t>(mc_workers)), Cell(est.mean),
                      Cell(est.variance), Cell(est.stderr_)});
    out = render(t, {{"n", mc_n}, {"k", mc_k}, {"trials", mc_trials}, {"seed", mc_seed},
                     {"workers", mc_workers}},
                 format == "json");
  });

  // ---- concentration -----------------------------------------------------
  auto* sc_conc = app.add_subcommand("concentration",
                                     "empirical tail probability vs the Chebyshev bound");
  std::size_t conc_n = 0;
  long conc_k = 0;
  double conc_eps = 0.0;
  std::uint64_t conc_trials = 0, conc_seed = 0;
  unsigned conc_workers = 1;
  sc_conc->add_option("--n", conc_n, "order")->required()->check(CLI::PositiveNumber);
  sc_conc->add_option("--k", conc_k, "diagonal")->required();
  sc_conc->add_option("--epsilon", conc_eps, "deviation threshold")->required();
  sc_conc->add_option("--trials", conc_trials, "number of sampled permutations")
      ->required()
      ->check(CLI::PositiveNumber);
  sc_conc->add_option("--seed", conc_seed, "base seed (default 0)");
  sc_conc->add_option("--workers", conc_workers, "worker streams (default 1)")
      ->check(CLI::PositiveNumber);
  sc_conc->callback([&] {
    const toeplab::ConcentrationResult r =
        toeplab::concentration_check(conc_n, conc_k, conc_eps, conc_trials, conc_seed, conc_workers);
    Table t;
    t.header = {"n", "k", "epsilon", "trials", "seed", "workers", "empirical_prob",
                "chebyshev_bound"};
    t.rows.push_back({Cell(static_cast<std::int64_t>(conc_n)),
                      Cell(static_cast<std::int64_t>(conc_k)), Cell(conc_eps),
                      Cell(static_cast<std::int64_t>(conc_trials)),
                      Cell(static_cast<std::int64_t>(conc_seed)),
                      Cell(static_cast<std::int64_t>(conc_workers)), Cell(r.empirical_prob),
                      Cell(r.chebyshev_bound)});
    out = render(t, {{"n", conc_n}, {"k", conc_k}, {"epsilon", conc_eps},
                     {"trials", conc_trials}, {"seed", conc_seed}, {"workers", conc_workers}},
                 format == "json");
  });

  // ---- spectrum ----------------------------------------------------------
  auto* sc_spec = app.add_subcommand("spectrum", "eigenvalues of K_n, P_n, or a Nystrom matrix");
  std::string spec_target = "kn";
  std::size_t spec_n = 0, spec_m = 400, spec_top = 0;
  std::string spec_kernel = "triangular", spec_perm;
  std::uint64_t spec_seed = 0;
  sc_spec->add_option("--target", spec_target, "kn | pn | nystrom")
      ->check(CLI::IsMember({"kn", "pn", "nystrom"}));
  sc_spec->add_option("--n", spec_n, "order for kn/pn");
  sc_spec->add_option("--m", spec_m, "Nystrom mesh size (default 400)");
  sc_spec->add_option("--top", spec_top, "emit only the largest eigenvalues");
  sc_spec->add_option("--kernel", spec_kernel, "triangular | min | conv");
  sc_spec->add_option("--perm", spec_perm, "permutation for pn");
  auto* spec_seed_opt = sc_spec->add_option("--seed", spec_seed, "seeded permutation for pn");
  sc_spec->callback([&] {
    toeplab::Spectrum spectrum;
    ordered_json cfg;
    cfg["target"] = spec_target;
    bool normalized_column = false;
    std::size_t order = 0;
    if (spec_target == "kn") {
      if (spec_n == 0) throw UsageError("spectrum --target kn requires --n");
      spectrum = toeplab::jacobi_eigen(toeplab::materialize(toeplab::triangular_symbol(spec_n)));
      cfg["n"] = spec_n;
      normalized_column = true;
      order = spec_n;
    } else if (spec_target == "pn") {
      const toeplab::Permutation p =
          resolve_permutation(spec_n, spec_perm, spec_seed, !spec_seed_opt->empty());
      spectrum = toeplab::jacobi_eigen(
          toeplab::materialize(toeplab::build_pn(toeplab::histogram(p))));
      cfg["n"] = p.order();
      if (!spec_perm.empty())
        cfg["perm"] = p.image();
      else
        cfg["seed"] = spec_seed;
      normalized_column = true;
      order = p.order();
    } else {
      spectrum = toeplab::jacobi_eigen(toeplab::nystrom(parse_kernel(spec_kernel), spec_m));
      cfg["kernel"] = spec_kernel;
      cfg["m"] = spec_m;
    }
    std::size_t count = spectrum.eigenvalues.size();
    if (spec_top != 0) count = std::min(count, spec_top);
    Table t;
    t.header = normalized_column ? std::vector<std::string>{"index", "eigenvalue", "eigenvalue_over_n"}
                                 : std::vector<std::string>{"index", "eigenvalue"};
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Cell> row = {Cell(static_cast<std::int64_t>(i)), Cell(spectrum.eigenvalues[i])};
      if (normalized_column)
        row.emplace_back(spectrum.eigenvalues[i] / static_cast<double>(order));
      t.rows.push_back(std::move(row));
    }
    ordered_json extra;
    extra["solver"] = {{"sweeps", spectrum.sweeps}, {"off_norm", spectrum.off_norm}};
    out = render(t, cfg, format == "json", extra);
  });

  // ---- cosine-approx -----------------------------------------------------
  auto* sc_cos = app.add_subcommand("cosine-approx",
                                    "cosine-sum eigenvalue approximation, both normalizations");
  std::size_t cos_n = 0, cos_k = 0;
  sc_cos->add_option("--n", cos_n, "order")->required()->check(CLI::PositiveNumber);
  sc_cos->add_option("--k", cos_k, "mode index")->required();
  sc_cos->callback([&] {
    const double sum = toeplab::cosine_symbol_sum(cos_n, cos_k);
    const double one_sided = one_sided_cosine_integral(cos_k);
    Table t;
    t.header = {"n", "k", "cosine_sum", "normalized", "symmetric_integral", "one_sided_integral"};
    t.rows.push_back({Cell(static_cast<std::int64_t>(cos_n)), Cell(static_cast<std::int64_t>(cos_k)),
                      Cell(sum), Cell(sum / static_cast<double>(cos_n)), Cell(2.0 * one_sided),
                      Cell(one_sided)});
    out = render(t, {{"n", cos_n}, {"k", cos_k}}, format == "json");
  });

  // ---- trace-powers ------------------------------------------------------
  auto* sc_tp = app.add_subcommand("trace-powers", "(1/n) Tr(K_n^p) and the normalized power sum");
  std::size_t tp_n = 0;
  unsigned tp_p = 1;
  sc_tp->add_option("--n", tp_n, "order")->required()->check(CLI::PositiveNumber);
  sc_tp->add_option("--p", tp_p, "power")->required()->check(CLI::PositiveNumber);
  sc_tp->callback([&] {
    const double mean_power =
        toeplab::trace_powers(toeplab::materialize(toeplab::triangular_symbol(tp_n)), tp_p);
    double normalized = mean_power; // sum of (lambda/n)^p = mean_power / n^(p-1)
    for (unsigned i = 1; i < tp_p; ++i) normalized /= static_cast<double>(tp_n);
    Table t;
    t.header = {"n", "p", "mean_power", "normalized_power_sum", "claimed_series"};
    t.rows.push_back({Cell(static_cast<std::int64_t>(tp_n)), Cell(static_cast<std::int64_t>(tp_p)),
                      Cell(mean_power), Cell(normalized),
                      Cell(toeplab::claimed_trace_series(tp_p, 1000000))});
    out = render(t, {{"n", tp_n}, {"p", tp_p}}, format == "json");
  });

  // ---- banded-det --------------------------------------------------------
  auto* sc_det = app.add_subcommand("banded-det", "det E_n(x): exact polynomial or LU value");
  std::size_t det_n = 0;
  double det_x = 0.0;
  sc_det->add_option("--n", det_n, "order")->required()->check(CLI::PositiveNumber);
  auto* det_x_opt = sc_det->add_option("--x", det_x, "evaluate numerically at x");
  sc_det->callback([&] {
    const toeplab::IntPolynomial poly = toeplab::det_recurrence(det_n);
    Table t;
    if (det_x_opt->empty()) {
      t.header = {"degree", "coefficient"};
      for (std::size_t j = 0; j < poly.coefficients().size(); ++j)
        t.rows.push_back({Cell(static_cast<std::int64_t>(j)), Cell(poly.coefficients()[j])});
      out = render(t, {{"n", det_n}}, format == "json");
    } else {
      t.header = {"n", "x", "det_polynomial", "det_lu"};
      t.rows.push_back({Cell(static_cast<std::int64_t>(det_n)), Cell(det_x),
                        Cell(poly.eval(det_x)), Cell(toeplab::det_numeric(det_n, det_x))});
      out = render(t, {{"n", det_n}, {"x", det_x}}, format == "json");
    }
  });

  // ---- nilpotent-pow -----------------------------------------------------
  auto* sc_nil = app.add_subcommand("nilpotent-pow", "band profile of T_n(x)^k");
  std::size_t nil_n = 0;
  unsigned nil_k = 0;
  double nil_x = 0.0;
  std::string nil_method = "binomial";
  sc_nil->add_option("--n", nil_n, "order")->required()->check(CLI::PositiveNumber);
  sc_nil->add_option("--k", nil_k, "exponent")->required();
  sc_nil->add_option("--x", nil_x, "superdiagonal value")->required();
  sc_nil->add_option("--method", nil_method, "binomial | direct")
      ->check(CLI::IsMember({"binomial", "direct"}));
  sc_nil->callback([&] {
    Table t;
    const toeplab::UnipotentSpec spec{nil_n, nil_x};
    if (nil_method == "binomial") {
      const toeplab::DenseMatrix m = toeplab::power_binomial(spec, nil_k);
      t.header = {"offset", "binomial_coefficient", "entry"};
      for (std::size_t j = 0; j < nil_n && j <= nil_k; ++j)
        t.rows.push_back({Cell(static_cast<std::int64_t>(j)),
                          Cell(toeplab::binomial(nil_k, static_cast<unsigned>(j))),
                          Cell(m.at(0, j))});
    } else {
      const toeplab::DenseMatrix m = toeplab::power_direct(spec, nil_k);
      t.header = {"offset", "entry"};
      for (std::size_t j = 0; j < nil_n && j <= nil_k; ++j)
        t.rows.push_back({Cell(static_cast<std::int64_t>(j)), Cell(m.at(0, j))});
    }
    out = render(t, {{"n", nil_n}, {"k", nil_k}, {"x", nil_x}, {"method", nil_method}},
                 format == "json");
  });

  // ---- path-count --------------------------------------------------------
  auto* sc_path = app.add_subcommand("path-count", "weighted stay/step-right path count");
  std::size_t path_n = 0, path_i = 0, path_j = 0;
  unsigned path_k = 0;
  sc_path->add_option("--n", path_n, "order")->required()->check(CLI::PositiveNumber);
  sc_path->add_option("--k", path_k, "path length")->required();
  sc_path->add_option("--i", path_i, "start row (1-based)")->required()->check(CLI::PositiveNumber);
  sc_path->add_option("--j", path_j, "end column (1-based)")->required()->check(CLI::PositiveNumber);
  sc_path->callback([&] {
    const toeplab::PathMonomial p = toeplab::path_count(path_n, path_k, path_i, path_j);
    Table t;
    t.header = {"n", "k", "i", "j", "coefficient", "power"};
    t.rows.push_back({Cell(static_cast<std::int64_t>(path_n)),
                      Cell(static_cast<std::int64_t>(path_k)),
                      Cell(static_cast<std::int64_t>(path_i)),
                      Cell(static_cast<std::int64_t>(path_j)), Cell(p.coefficient),
                      Cell(static_cast<std::int64_t>(p.power))});
    out = render(t, {{"n", path_n}, {"k", path_k}, {"i", path_i}, {"j", path_j}},
                 format == "json");
  });

  // ---- report ------------------------------------------------------------
  auto* sc_rep = app.add_subcommand("report", "full discrepancy report");
  toeplab::ReportConfig rep_cfg;
  std::string rep_nlist = "100,200,400";
  sc_rep->add_option("--m", rep_cfg.m, "Nystrom mesh (default 400)")->check(CLI::PositiveNumber);
  sc_rep->add_option("--quad", rep_cfg.quad_points, "quadrature nodes (default 4096)")
      ->check(CLI::PositiveNumber);
  sc_rep->add_option("--n-list", rep_nlist, "comma-separated orders (default 100,200,400)");
  sc_rep->add_option("--k-max", rep_cfg.k_max, "largest mode index (default 4)");
  sc_rep->add_option("--p-max", rep_cfg.p_max, "largest trace power (default 3)")
      ->check(CLI::PositiveNumber);
  sc_rep->add_option("--tol-spectral", rep_cfg.tol_spectral, "spectral tolerance (default 1e-3)");
  sc_rep->add_option("--tol-identity", rep_cfg.tol_identity, "identity tolerance (default 1e-8)");
  sc_rep->callback([&] {
    rep_cfg.n_list = parse_size_list(rep_nlist, "--n-list");
    const toeplab::DiscrepancyReport report = toeplab::build_discrepancy_report(rep_cfg);
    out = format == "json" ? report_json(report, rep_cfg) : report_csv(report);
  });

  // --format/--output live on the parent; let them appear after a subcommand
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 1;
  } catch (const toeplab::ConvergenceError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) { // DomainError, DimensionError
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::length_error& e) { // SizeGuardError
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  if (output_path.empty()) {
    std::fwrite(out.data(), 1, out.size(), stdout);
  } else {
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "cannot open output file: %s\n", output_path.c_str());
      return 1;
    }
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
  }
  return 0;
}
