#include "ghost/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <numeric>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ghost/boundary.hpp"
#include "ghost/dims.hpp"
#include "ghost/error.hpp"
#include "ghost/modified.hpp"

namespace ghost::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Validation failures while turning argv into a RunConfig; reported as usage errors.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::int64_t p = 0;
  std::int64_t N = 1;
  std::optional<std::int64_t> component;
  std::string weight;
  std::int64_t count = 10;
  std::string mode = "overconvergent";
  bool modified = false;
  std::string seed_path;
  std::optional<std::int64_t> cap;
  std::string fixture;
  std::int64_t center = 0;
  std::vector<std::int64_t> intervals;
  std::int64_t samples = 3;
  std::string out_dir;
  std::optional<std::int64_t> burn_in;
  std::int64_t max_burn_in = 100;
  std::int64_t max_k = 50;
};

// Everything a command needs after validation.
struct Prepared {
  PrimeContext ctx;
  std::optional<Weight2SeedSlopes> seed;
  CertifyOptions opts;
};

Prepared prepare(const RunConfig& cfg) {
  std::optional<PrimeContext> ctx;
  try {
    ctx.emplace(cfg.p, cfg.N);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  Prepared prep{*ctx, std::nullopt, {}};
  if (!cfg.seed_path.empty() && !cfg.modified) throw UsageError("--seed requires --modified");
  if (cfg.modified) {
    if (cfg.p != 2) throw UsageError("--modified applies only to p = 2");
    if (cfg.N % 2 == 0) throw UsageError("--modified requires odd N");
    try {
      prep.seed = cfg.seed_path.empty() ? bundled_seed(cfg.N) : load_seed(cfg.seed_path);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    if (prep.seed->N != cfg.N) throw UsageError("seed file is for a different N");
  }
  prep.opts.cap = cfg.cap ? *cfg.cap : default_cap();
  if (prep.opts.cap < 1) throw UsageError("--cap must be positive");
  if (cfg.count < 0) throw UsageError("--count must be nonnegative");
  return prep;
}

ComponentLabel component_arg(const RunConfig& cfg, const PrimeContext& ctx) {
  ComponentLabel eps{cfg.component.value_or(0)};
  try {
    validate(eps, ctx);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return eps;
}

WeightPoint weight_arg(const RunConfig& cfg, const PrimeContext& ctx) {
  if (cfg.weight.empty()) throw UsageError("--weight is required");
  try {
    return parse_weight(cfg.weight, ctx);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

SlopeList compute_slopes(const RunConfig& cfg, const Prepared& prep) {
  WeightPoint kappa = weight_arg(cfg, prep.ctx);
  if (cfg.mode == "overconvergent") {
    return ghost_slopes(prep.ctx, kappa, static_cast<std::size_t>(cfg.count), prep.opts, prep.seed);
  }
  auto* classical = std::get_if<weight::Classical>(&kappa);
  if (classical == nullptr || classical->k < 2) throw UsageError("--mode tame|full needs a weight k=<even k >= 2>");
  CountMode mode = cfg.mode == "tame" ? CountMode::Tame : CountMode::Full;
  return classical_ghost_slopes(prep.ctx, classical->k, mode, prep.opts, prep.seed);
}

Json invariants_json(const Gamma0Invariants& inv) {
  return Json{{"level", inv.level}, {"index", inv.index}, {"nu2", inv.nu2},
              {"nu3", inv.nu3},     {"cusps", inv.cusps}, {"genus", inv.genus}};
}

Json zero_json(const Zero& z, std::int64_t m) {
  return Json{{"type", z.kind == ZeroKind::Classical ? "classical" : "eta8"}, {"k", z.k}, {"mult", m}};
}

int cmd_slopes(const RunConfig& cfg, std::ostream& out) {
  auto prep = prepare(cfg);
  out << slopes_to_json(compute_slopes(cfg, prep)).dump(2) << "\n";
  return kOk;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
  auto prep = prepare(cfg);
  GhostSeries series(prep.ctx, component_arg(cfg, prep.ctx), prep.seed);
  for (std::int64_t i = 1; i <= cfg.count; ++i) {
    auto coef = series.coefficient(i);
    auto extra = series.extra_zeros(i);
    Json zeros = Json::array();
    for (const auto& [z, m] : coef.zeros) zeros.push_back(zero_json(z, m));
    Json line{{"i", i}, {"lambda", coef.lambda}, {"zeros", zeros}};
    if (prep.seed) line["extra_lambda"] = std::accumulate(extra.begin(), extra.end(), std::int64_t{0},
                                                          [](std::int64_t a, const auto& e) { return a + e.second; });
    out << line.dump() << "\n";
  }
  return kOk;
}

int cmd_dims(const RunConfig& cfg, std::ostream& out) {
  auto prep = prepare(cfg);
  const auto& ctx = prep.ctx;
  Json dims = Json::array();
  for (std::int64_t k = 2; k <= cfg.max_k; k += 2) {
    dims.push_back(Json{{"k", k}, {"d_k", dim_cusp_gamma0(ctx.N(), k)},
                        {"d_k_Np", dim_cusp_gamma0(ctx.N() * ctx.p(), k)}, {"d_k_new", dim_pnew(ctx, k)}});
  }
  Json doc{{"p", ctx.p()},
           {"N", ctx.N()},
           {"gamma0_N", invariants_json(gamma0_invariants(ctx.N()))},
           {"gamma0_Np", invariants_json(gamma0_invariants(ctx.N() * ctx.p()))},
           {"dims", dims}};
  if (ctx.p() == 2) {
    Json eta = Json::array();
    for (std::int64_t k = 2; k <= cfg.max_k; ++k) {
      eta.push_back(Json{{"k", k}, {"sign", k % 2 == 0 ? "+" : "-"}, {"d_k_eta8", dim_cusp_eta8(ctx.N(), k)}});
    }
    doc["eta8"] = eta;
    if (ctx.N() > 1) doc["fractional_slope_bound"] = fractional_slope_bound(ctx.N());
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

Json ap_json(const APReport& r) {
  Json j{{"n_ap", r.n_ap},
         {"delta", rational_to_json(r.delta)},
         {"burn_in", r.burn_in},
         {"verified_through", r.verified_through},
         {"verified", r.verified()}};
  j["first_violation"] = r.first_violation ? Json(*r.first_violation) : Json(nullptr);
  return j;
}

int cmd_boundary(const RunConfig& cfg, std::ostream& out) {
  auto prep = prepare(cfg);
  auto eps = component_arg(cfg, prep.ctx);
  auto poly = boundary_polygon(prep.ctx, eps, static_cast<std::size_t>(cfg.count), prep.opts, prep.seed);
  Json doc{{"p", prep.ctx.p()}, {"N", prep.ctx.N()}, {"component", eps.residue}, {"slopes", slopes_to_json(poly.slopes)}};
  doc["ap"] = nullptr;
  if (prep.ctx.p() != 2) {
    auto params = progression_params(prep.ctx);
    std::size_t burn = 0;
    if (cfg.burn_in) {
      burn = static_cast<std::size_t>(*cfg.burn_in);
    } else if (auto found = smallest_burn_in(poly.slopes, params.count, params.difference,
                                             static_cast<std::size_t>(cfg.max_burn_in))) {
      burn = *found;
    } else {
      burn = static_cast<std::size_t>(cfg.max_burn_in);
    }
    if (poly.slopes.certified_count >= burn + static_cast<std::size_t>(params.count) + 1) {
      doc["ap"] = ap_json(ap_check(poly.slopes, params.count, params.difference, burn));
    }
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_halo(const RunConfig& cfg, std::ostream& out) {
  auto prep = prepare(cfg);
  if (cfg.intervals.empty()) throw UsageError("--interval is required");
  if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
  if (cfg.intervals.size() > 1 && cfg.out_dir.empty()) throw UsageError("several intervals need --out-dir");
  if (cfg.center % 2 != 0) throw UsageError("--center must be even");
  for (auto r : cfg.intervals) {
    auto profile = halo_profile(prep.ctx, cfg.center, r, static_cast<std::size_t>(cfg.samples),
                                static_cast<std::size_t>(cfg.count), prep.opts, prep.seed);
    if (cfg.out_dir.empty()) {
      out << profile.to_csv();
      continue;
    }
    std::filesystem::create_directories(cfg.out_dir);
    auto path = std::filesystem::path(cfg.out_dir) /
                ("halo_c" + std::to_string(cfg.center) + "_r" + std::to_string(r) + ".csv");
    std::ofstream file(path);
    if (!file) throw Error("cannot write " + path.string());
    file << profile.to_csv();
    out << path.string() << "\n";
  }
  return kOk;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  auto prep = prepare(cfg);
  if (cfg.fixture.empty()) throw UsageError("--fixture is required");
  Fixture fixture;
  try {
    fixture = load_fixture(cfg.fixture);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  auto report = compare(fixture, compute_slopes(cfg, prep), cfg.fixture);
  out << report_to_json(report).dump(2) << "\n";
  return report.match() ? kOk : kMismatch;
}

void add_context_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--p", cfg.p, "prime p")->required();
  sub->add_option("--N", cfg.N, "tame level N, coprime to p");
  sub->add_option("--cap", cfg.cap, "largest truncation degree (default GHOST_CAP or 10000)");
  sub->add_flag("--modified", cfg.modified, "use the modified p = 2 series");
  sub->add_option("--seed", cfg.seed_path, "weight-2 seed JSON for --modified");
}

void add_slope_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--weight", cfg.weight, "k=<k> | annulus:<k0>:<a>/<b> | char:<k>:<p^t> | eta8:<k> | w:<w>:prec=<m>");
  sub->add_option("--count", cfg.count, "number of slopes (overconvergent mode)");
  sub->add_option("--mode", cfg.mode, "tame | full | overconvergent")
      ->check(CLI::IsMember({"tame", "full", "overconvergent"}));
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const PrecisionError*>(&e)) return "precision error";
  if (dynamic_cast<const CertificationError*>(&e)) return "certification error";
  if (dynamic_cast<const ExternalDataRequired*>(&e)) return "external data required";
  if (dynamic_cast<const DomainError*>(&e)) return "domain error";
  return "error";
}

}  // namespace

Fixture parse_fixture(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed fixture JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("slopes") || !j["slopes"].is_array()) {
    throw DomainError("fixture must be an object with a slopes array");
  }
  Fixture f;
  f.description = j.value("description", "");
  f.source = j.value("source", "");
  for (const auto& s : j["slopes"]) f.slopes.push_back(rational_from_json(s));
  return f;
}

Fixture load_fixture(const std::string& path) { return parse_fixture(read_file(path)); }

std::string fixture_to_json(const Fixture& fixture) {
  Json slopes = Json::array();
  for (const auto& s : fixture.slopes) slopes.push_back(rational_to_json(s));
  return Json{{"description", fixture.description}, {"slopes", slopes}, {"source", fixture.source}}.dump(2);
}

ComparisonReport compare(const Fixture& expected, const SlopeList& computed, const std::string& source) {
  ComparisonReport report;
  report.source = source.empty() ? expected.source : source;
  report.computed = computed;
  report.compared = std::min(expected.slopes.size(), computed.slopes.size());
  report.truncated = expected.slopes.size() != computed.slopes.size();
  for (std::size_t j = 0; j < report.compared; ++j) {
    report.diffs.push_back({j + 1, expected.slopes[j], computed.slopes[j]});
    if (!report.first_mismatch && expected.slopes[j] != computed.slopes[j]) report.first_mismatch = j + 1;
  }
  return report;
}

Json slopes_to_json(const SlopeList& slopes) {
  Json arr = Json::array();
  for (std::size_t j = 0; j < slopes.slopes.size(); ++j) {
    arr.push_back(
        Json{{"index", j + 1}, {"slope", rational_to_json(slopes.slopes[j])}, {"certified", j < slopes.certified_count}});
  }
  return arr;
}

SlopeList slopes_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("slope list must be a JSON array");
  SlopeList out;
  bool prefix = true;
  for (const auto& entry : j) {
    out.slopes.push_back(rational_from_json(entry.at("slope")));
    bool certified = entry.value("certified", false);
    if (certified && prefix) {
      ++out.certified_count;
    } else {
      prefix = false;
    }
  }
  return out;
}

Json report_to_json(const ComparisonReport& report) {
  Json diffs = Json::array();
  for (const auto& d : report.diffs) {
    diffs.push_back(Json{{"index", d.index},
                         {"expected", rational_to_json(d.expected)},
                         {"computed", rational_to_json(d.computed)},
                         {"equal", d.expected == d.computed}});
  }
  Json j{{"source", report.source},
         {"status", report.match() ? "match" : "mismatch"},
         {"compared", report.compared},
         {"truncated", report.truncated},
         {"computed", slopes_to_json(report.computed)},
         {"diffs", diffs}};
  j["first_mismatch"] = report.first_mismatch ? Json(*report.first_mismatch) : Json(nullptr);
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ghost series slopes: exact Newton polygons of the ghost series at p-adic weights"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* slopes = app.add_subcommand("slopes", "first slopes of NP(G_kappa) at one weight");
  add_context_options(slopes, cfg);
  add_slope_options(slopes, cfg);

  auto* series = app.add_subcommand("series", "zero divisors and degrees of g_1..g_n as JSON lines");
  add_context_options(series, cfg);
  series->add_option("--count", cfg.count, "number of coefficients");
  series->add_option("--component", cfg.component, "even residue mod p-1");

  auto* dims = app.add_subcommand("dims", "level invariants and cusp form dimensions");
  add_context_options(dims, cfg);
  dims->add_option("--max-k", cfg.max_k, "largest weight listed");

  auto* boundary = app.add_subcommand("boundary", "boundary slopes and the progression report");
  add_context_options(boundary, cfg);
  boundary->add_option("--count", cfg.count, "number of slopes");
  boundary->add_option("--component", cfg.component, "even residue mod p-1");
  boundary->add_option("--burn-in", cfg.burn_in, "fixed burn-in for the progression check");
  boundary->add_option("--max-burn-in", cfg.max_burn_in, "largest burn-in tried by the scan");

  auto* halo = app.add_subcommand("halo", "CSV of the first slopes over v_p(w - w_center) in (r, r+1)");
  add_context_options(halo, cfg);
  halo->add_option("--center", cfg.center, "even center weight k0");
  halo->add_option("--interval", cfg.intervals, "integer r; repeatable")->required();
  halo->add_option("--count", cfg.count, "number of slopes per row");
  halo->add_option("--samples", cfg.samples, "sample valuations per interval");
  halo->add_option("--out-dir", cfg.out_dir, "write one CSV per interval here");

  auto* comparison = app.add_subcommand("compare", "compare computed slopes with a fixture file");
  add_context_options(comparison, cfg);
  add_slope_options(comparison, cfg);
  comparison->add_option("--fixture", cfg.fixture, "fixture JSON path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  auto* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  try {
    if (cfg.command == "slopes") return cmd_slopes(cfg, out);
    if (cfg.command == "series") return cmd_series(cfg, out);
    if (cfg.command == "dims") return cmd_dims(cfg, out);
    if (cfg.command == "boundary") return cmd_boundary(cfg, out);
    if (cfg.command == "halo") return cmd_halo(cfg, out);
    if (cfg.command == "compare") return cmd_compare(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << error_kind(e) << ": " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}

}  // namespace ghost::cli
