#include "klr/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "klr/functors.hpp"
#include "klr/kfiltration.hpp"
#include "klr/mackey.hpp"

namespace klr::cli {

namespace {

constexpr const char* kEngine = "klr-engine/1.0.0";
constexpr const char* kConfigSchema = "klr-verify-config/1";
constexpr const char* kReportSchema = "klr-verify-report/1";

std::string iso_timestamp() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string beta_str(const RootVector& beta) {
  std::string s = "[";
  for (std::size_t k = 0; k < beta.coeff.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(beta.coeff[k]);
  }
  return s + "]";
}

std::string case_id(const CartanDatum& d, const CaseSpec& cs,
                    const std::string& check) {
  std::string id = check + "|beta=" + beta_str(cs.beta);
  if (cs.i >= 0) id += "|i=" + d.labels()[cs.i];
  return id;
}

json beta_json(const RootVector& beta) { return json(beta.coeff); }

// ------------------------------------------------------------- config

int require_label(const CartanDatum& d, const std::string& s) {
  for (std::size_t k = 0; k < d.labels().size(); ++k)
    if (d.labels()[k] == s) return static_cast<int>(k);
  throw ConfigError("unknown label '" + s + "'");
}

bool needs_color(const std::string& check) {
  return check != "cyclotomic" && check != "simples";
}

} // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> v = {
      "mackey", "cyclotomic", "rho",  "zigzag",    "eq1",          "eq2",
      "eq3",    "grin",       "prop_main", "projectivity", "simples"};
  return v;
}

VerifyConfig parse_config(const json& j) {
  VerifyConfig cfg;
  cfg.echo = j;
  if (!j.is_object()) throw ConfigError("config root must be an object");
  if (j.contains("schema") && j.at("schema") != kConfigSchema)
    throw ConfigError("unsupported config schema");
  if (!j.contains("cartan")) throw ConfigError("missing 'cartan'");
  const auto& c = j.at("cartan");
  try {
    std::vector<std::string> labels =
        c.at("labels").get<std::vector<std::string>>();
    std::vector<std::vector<int>> matrix =
        c.at("matrix").get<std::vector<std::vector<int>>>();
    std::optional<std::vector<int>> sym;
    if (c.contains("symmetrizers"))
      sym = c.at("symmetrizers").get<std::vector<int>>();
    cfg.datum = CartanDatum::validate(labels, matrix, sym);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad 'cartan': ") + e.what());
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
  const CartanDatum& d = *cfg.datum;

  if (j.contains("q")) {
    std::map<std::pair<int, int>, std::vector<QMatrix::Entry>> entries;
    try {
      for (const auto& blk : j.at("q")) {
        const int a = require_label(d, blk.at("i").get<std::string>());
        const int b = require_label(d, blk.at("j").get<std::string>());
        std::vector<QMatrix::Entry> es;
        for (const auto& e : blk.at("entries")) {
          Rational t = e.at("t").is_string()
                           ? Rational(e.at("t").get<std::string>())
                           : Rational(e.at("t").get<long>());
          es.push_back({e.at("p").get<int>(), e.at("q").get<int>(), t});
        }
        entries[{a, b}] = std::move(es);
      }
      cfg.q = QMatrix::from_entries(d, entries);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("bad 'q': ") + e.what());
    } catch (const ValidationError& e) {
      throw ConfigError(e.what());
    }
  } else {
    cfg.q = QMatrix::default_q(d);
  }

  std::vector<int> ell(d.rank(), 0);
  if (!j.contains("lambda")) throw ConfigError("missing 'lambda'");
  for (const auto& [key, val] : j.at("lambda").items()) {
    const int k = require_label(d, key);
    if (!val.is_number_integer() || val.get<int>() < 0)
      throw ConfigError("lambda multiplicities must be nonnegative integers");
    ell[k] = val.get<int>();
  }
  cfg.lambda = DominantWeight(ell);

  if (j.contains("bounds")) {
    const auto& b = j.at("bounds");
    if (b.contains("D")) cfg.mackey_degree = b.at("D").get<int>();
    if (b.contains("cap")) cfg.fil_cap = b.at("cap").get<int>();
    if (b.contains("max_degree")) cfg.max_degree = b.at("max_degree").get<int>();
    // N and buffer belonged to a windowed-saturation design; the quotient
    // computation is exact and ignores them, but configs may carry them.
  }

  if (!j.contains("cases")) throw ConfigError("missing 'cases'");
  for (const auto& cj : j.at("cases")) {
    CaseSpec cs;
    std::vector<int> coeff(d.rank(), 0);
    for (const auto& [key, val] : cj.at("beta").items()) {
      const int k = require_label(d, key);
      if (!val.is_number_integer() || val.get<int>() < 0)
        throw ConfigError("beta multiplicities must be nonnegative integers");
      coeff[k] = val.get<int>();
    }
    cs.beta = RootVector(coeff);
    if (cj.contains("i")) cs.i = require_label(d, cj.at("i").get<std::string>());
    if (!cj.contains("checks") || cj.at("checks").empty())
      throw ConfigError("every case needs a nonempty 'checks' list");
    for (const auto& ch : cj.at("checks")) {
      const std::string name = ch.get<std::string>();
      const auto& known = known_checks();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ConfigError("unknown check '" + name + "'");
      if (cs.i < 0 && needs_color(name))
        throw ConfigError("check '" + name + "' needs a case color 'i'");
      cs.checks.push_back(name);
    }
    cfg.cases.push_back(std::move(cs));
  }
  return cfg;
}

VerifyConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

// ------------------------------------------------------------- checks

namespace {

struct CheckResult {
  std::string status = "pass";  // pass / fail / skip
  json dims = json::object();
  json certs = json::object();
  std::string witness;
};

void set_fail(CheckResult& r, const std::string& w) {
  r.status = "fail";
  r.witness = w.empty() ? "check returned false" : w;
}

CheckResult check_mackey(const KLRContext& ctx, const CaseSpec& cs, int D) {
  CheckResult r;
  auto rep = verify_mackey(ctx, cs.beta, cs.i, D);
  r.certs["max_degree"] = rep.max_degree;
  for (const auto& [d, dim] : rep.target_dims)
    r.dims[std::to_string(d)] = dim;
  if (!rep.ok) {
    std::string w;
    for (std::size_t k = 0; k < rep.failures.size() && k < 3; ++k)
      w += (k ? "; " : "") + rep.failures[k];
    set_fail(r, w);
  }
  return r;
}

CheckResult check_cyclotomic(const AlgebraTower& tower, const CaseSpec& cs) {
  CheckResult r;
  const auto& a = tower.at(cs.beta);
  const auto& c = a.certificates();
  r.dims["dim"] = a.dim();
  r.dims["top_degree"] = a.top_degree();
  r.certs["closure"] = c.closure;
  r.certs["stabilized"] = c.stabilized;
  r.certs["relations"] = c.relations;
  r.certs["cap"] = c.cap;
  r.certs["escapes"] = c.escapes;
  if (!(c.closure && c.stabilized && c.relations))
    set_fail(r, "quotient certificates incomplete");
  return r;
}

CheckResult check_rho(const AlgebraTower& tower, const CaseSpec& cs) {
  CheckResult r;
  if (tower.at(cs.beta).dim() == 0) {
    r.certs["vacuous"] = true;
    return r;
  }
  BiadjointCell cell(tower, cs.beta, cs.i);
  const auto& rep = cell.rho_report();
  r.dims["alg"] = rep.dim_alg;
  r.dims["ef"] = rep.dim_ef;
  r.dims["fe"] = rep.dim_fe;
  r.certs["lambda_i"] = rep.lambda_i;
  r.certs["plus_case"] = rep.plus_case;
  r.certs["ledger_ok"] = rep.ledger_ok;
  r.certs["bijective"] = rep.bijective;
  if (!rep.ledger_ok) set_fail(r, "dimension ledger identity fails");
  else if (!rep.bijective) set_fail(r, "rho is not bijective");
  return r;
}

CheckResult check_zigzag(const AlgebraTower& tower, const CaseSpec& cs,
                         bool flip) {
  CheckResult r;
  auto rep = verify_zigzag(tower, cs.beta, cs.i, flip);
  r.certs["e_side"] = rep.ok_e;
  r.certs["f_side"] = rep.ok_f;
  r.certs["flipped_eta_sign"] = flip;
  if (!(rep.ok_e && rep.ok_f)) set_fail(r, rep.witness);
  return r;
}

CheckResult from_eq(const EqReport& rep) {
  CheckResult r;
  if (!rep.applicable) {
    r.status = "skip";
    r.certs["applicable"] = false;
    r.certs["detail"] = rep.detail;
    return r;
  }
  r.certs["applicable"] = true;
  r.certs["detail"] = rep.detail;
  if (!rep.ok) set_fail(r, rep.detail);
  return r;
}

CheckResult check_grin_case(const AlgebraTower& tower, const CaseSpec& cs,
                            int cap) {
  CheckResult r;
  KModule K(tower, cs.beta, cs.i);
  auto rep = verify_grin(K, cap);
  const bool div = check_grind(K, cap);
  r.dims["quotient_up"] = K.up().dim();
  r.certs["bimodule"] = rep.bimodule_ok;
  r.certs["shift"] = rep.shift_ok;
  r.certs["forms_agree"] = rep.forms_agree;
  r.certs["graded_iso"] = rep.graded_iso_ok;
  r.certs["kernel"] = rep.kernel_ok;
  r.certs["division"] = div;
  r.certs["detail"] = rep.detail;
  if (!(rep.ok && div)) set_fail(r, "filtration structure certificate failed");
  return r;
}

CheckResult check_prop_main(const AlgebraTower& tower, const CaseSpec& cs) {
  CheckResult r;
  KModule K(tower, cs.beta, cs.i);
  auto cong = check_intertwiner_congruence(K);
  auto pm = verify_prop_main(K);
  r.certs["first_congruence"] = cong.first_ok;
  r.certs["second_congruence"] = cong.second_ok;
  r.certs["applicable"] = pm.applicable;
  r.certs["detail"] = pm.detail.empty() ? cong.detail : pm.detail;
  if (pm.applicable) r.certs["c"] = to_string(pm.c);
  if (!(cong.first_ok && cong.second_ok))
    set_fail(r, "intertwiner congruence failed: " + cong.detail);
  else if (pm.applicable && !pm.ok)
    set_fail(r, "no nonzero proportionality constant: " + pm.detail);
  return r;
}

CheckResult check_projectivity(const AlgebraTower& tower, const CaseSpec& cs) {
  CheckResult r;
  ModuleOps fk = f_kernel_right_module(tower, cs.beta, cs.i);
  ModuleOps ek = e_kernel_left_module(tower, cs.beta, cs.i);
  const bool pf = is_projective(fk, regular_right(*fk.alg));
  const bool pe = is_projective(ek, regular_left(*ek.alg));
  r.dims["e_kernel"] = ek.dim;
  r.dims["f_kernel"] = fk.dim;
  r.certs["e_kernel_projective"] = pe;
  r.certs["f_kernel_projective"] = pf;
  if (!(pe && pf)) set_fail(r, "a non-projective kernel module was detected");
  return r;
}

CheckResult check_simples(const AlgebraTower& tower, const CaseSpec& cs) {
  CheckResult r;
  const auto& a = tower.at(cs.beta);
  const int rad = a.radical_dim();
  const int sc = a.simple_count();
  r.dims["dim"] = a.dim();
  r.dims["radical"] = rad;
  r.dims["simples"] = sc;
  // internal consistency: the semisimple quotient carries the simples
  const bool consistent =
      (a.dim() == 0 ? sc == 0 : sc >= 1 && sc <= a.dim() - rad);
  r.certs["consistent"] = consistent;
  if (!consistent) set_fail(r, "simple count inconsistent with the radical");
  return r;
}

CheckResult run_check(const KLRContext& ctx, const AlgebraTower& tower,
                      const CaseSpec& cs, const std::string& check,
                      const VerifyConfig& cfg, bool flip) {
  if (check == "mackey") return check_mackey(ctx, cs, cfg.mackey_degree);
  if (check == "cyclotomic") return check_cyclotomic(tower, cs);
  if (check == "rho") return check_rho(tower, cs);
  if (check == "zigzag") return check_zigzag(tower, cs, flip);
  if (check == "eq1") return from_eq(check_eq1(tower, cs.beta, cs.i));
  if (check == "eq2") return from_eq(solve_eq2(tower, cs.beta, cs.i));
  if (check == "eq3") return from_eq(solve_eq3(tower, cs.beta, cs.i));
  if (check == "grin") return check_grin_case(tower, cs, cfg.fil_cap);
  if (check == "prop_main") return check_prop_main(tower, cs);
  if (check == "projectivity") return check_projectivity(tower, cs);
  if (check == "simples") return check_simples(tower, cs);
  throw std::logic_error("unreachable check name");
}

struct Unit {
  int case_idx;
  std::string check;
};

} // namespace

json run_cases(const VerifyConfig& cfg, const RunOptions& opts,
               int* exit_code) {
  const CartanDatum& d = *cfg.datum;
  std::vector<Unit> units;
  for (std::size_t c = 0; c < cfg.cases.size(); ++c)
    for (const auto& ch : cfg.cases[c].checks)
      units.push_back({static_cast<int>(c), ch});

  std::vector<json> entries(units.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};
  const auto start = std::chrono::steady_clock::now();

  auto worker = [&]() {
    // straightening caches are not shared across threads
    KLRContext ctx(d, *cfg.q);
    CycloOptions copts;
    copts.max_degree = cfg.max_degree;
    AlgebraTower tower(ctx, cfg.lambda, copts);
    for (;;) {
      const std::size_t u = next.fetch_add(1);
      if (u >= units.size()) return;
      const auto& cs = cfg.cases[units[u].case_idx];
      json& e = entries[u];
      e["id"] = case_id(d, cs, units[u].check);
      e["parameters"] = {{"beta", beta_json(cs.beta)},
                         {"check", units[u].check}};
      if (cs.i >= 0) e["parameters"]["i"] = d.labels()[cs.i];
      const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
      if (aborted || (opts.cap_seconds >= 0 && elapsed >= opts.cap_seconds)) {
        aborted = true;
        e["status"] = "skip";
        e["dims"] = json::object();
        e["certificates"] = json::object();
        e["witness"] = "resource cap exceeded";
        e["elapsed_ms"] = 0;
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = run_check(ctx, tower, cs, units[u].check, cfg,
                      opts.flip_eta_sign);
      } catch (const std::exception& ex) {
        r.status = "fail";
        r.witness = std::string("exception: ") + ex.what();
      }
      e["status"] = r.status;
      e["dims"] = r.dims;
      e["certificates"] = r.certs;
      if (r.status == "fail") e["witness"] = r.witness;
      e["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int pass = 0, fail = 0, skip = 0;
  for (const auto& e : entries) {
    const std::string s = e.at("status");
    if (s == "pass") ++pass;
    else if (s == "fail") ++fail;
    else ++skip;
  }
  json rep;
  rep["schema"] = kReportSchema;
  rep["engine"] = kEngine;
  rep["timestamp"] = iso_timestamp();
  rep["config"] = cfg.echo;
  rep["cases"] = entries;
  rep["summary"] = {{"pass", pass}, {"fail", fail}, {"skip", skip},
                    {"total", static_cast<int>(entries.size())}};
  if (exit_code)
    *exit_code = aborted ? 3 : (fail > 0 ? 1 : 0);
  return rep;
}

// --------------------------------------------------------------- dims

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(const VerifyConfig& cfg, const RootVector& beta) {
  json k;
  k["cartan"] = {{"labels", cfg.datum->labels()},
                 {"matrix", cfg.datum->matrix()},
                 {"symmetrizers", cfg.datum->symmetrizers()}};
  if (cfg.echo.contains("q")) k["q"] = cfg.echo.at("q");
  k["lambda"] = cfg.lambda.ell;
  k["beta"] = beta.coeff;
  k["max_degree"] = cfg.max_degree;
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(k.dump());
  return os.str();
}

std::optional<json> cache_load(const std::string& dir, const std::string& key) {
  std::ifstream in(dir + "/" + key + ".json");
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    return std::nullopt;
  }
  return j;
}

void cache_store(const std::string& dir, const std::string& key,
                 const json& j) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(dir + "/" + key + ".json");
  if (out) out << j.dump(2) << "\n";
}

} // namespace

json dims_table(const VerifyConfig& cfg) {
  const char* env = std::getenv("KLR_ENGINE_CACHE");
  const std::string cache_dir = env ? env : "";
  KLRContext ctx(*cfg.datum, *cfg.q);
  CycloOptions copts;
  copts.max_degree = cfg.max_degree;
  AlgebraTower tower(ctx, cfg.lambda, copts);

  auto quotient_summary = [&](const RootVector& beta) -> json {
    const std::string key = cache_key(cfg, beta);
    if (!cache_dir.empty())
      if (auto hit = cache_load(cache_dir, key)) return *hit;
    const auto& a = tower.at(beta);
    json s;
    s["dim"] = a.dim();
    s["top_degree"] = a.top_degree();
    s["simples"] = a.simple_count();
    if (!cache_dir.empty()) cache_store(cache_dir, key, s);
    return s;
  };

  json rows = json::array();
  for (const auto& cs : cfg.cases) {
    json row;
    row["beta"] = beta_json(cs.beta);
    row["quotient"] = quotient_summary(cs.beta);
    if (cs.i >= 0) {
      row["i"] = cfg.datum->labels()[cs.i];
      // kernel dimensions live one step up and need the built algebra
      const auto& up = tower.at(cs.beta.plus_alpha(cs.i));
      row["e_kernel_dim"] = e_slice(up, cs.i).dim();
      row["f_kernel_dim"] = f_slice(up, cs.i).dim();
    }
    rows.push_back(row);
  }
  json rep;
  rep["schema"] = kReportSchema;
  rep["engine"] = kEngine;
  rep["timestamp"] = iso_timestamp();
  rep["dims"] = rows;
  return rep;
}

// ---------------------------------------------------------------- cli

namespace {

void print_run_text(const json& rep, std::ostream& os) {
  for (const auto& e : rep.at("cases")) {
    std::string s = e.at("status");
    for (auto& c : s) c = static_cast<char>(std::toupper(c));
    os << std::left << std::setw(5) << s << " " << e.at("id").get<std::string>()
       << " (" << e.at("elapsed_ms").get<long>() << " ms)";
    if (e.contains("witness"))
      os << "  -- " << e.at("witness").get<std::string>();
    os << "\n";
  }
  const auto& s = rep.at("summary");
  os << "summary: " << s.at("pass") << " pass, " << s.at("fail") << " fail, "
     << s.at("skip") << " skip\n";
}

void print_dims_text(const json& rep, std::ostream& os) {
  for (const auto& row : rep.at("dims")) {
    os << "beta=" << row.at("beta").dump()
       << "  dim=" << row.at("quotient").at("dim")
       << "  simples=" << row.at("quotient").at("simples");
    if (row.contains("i"))
      os << "  i=" << row.at("i").get<std::string>()
         << "  e_kernel=" << row.at("e_kernel_dim")
         << "  f_kernel=" << row.at("f_kernel_dim");
    os << "\n";
  }
}

void write_json(const json& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write JSON report to '" + path + "'");
  out << rep.dump(2) << "\n";
}

int do_explain(const std::string& report_path, const std::string& id) {
  std::ifstream in(report_path);
  if (!in) {
    std::cerr << "error: cannot read report '" << report_path << "'\n";
    return 2;
  }
  json rep;
  try {
    in >> rep;
  } catch (const json::exception& e) {
    std::cerr << "error: report is not valid JSON: " << e.what() << "\n";
    return 2;
  }
  for (const auto& e : rep.value("cases", json::array())) {
    if (e.value("id", "") != id) continue;
    std::cout << "case " << id << "\n"
              << "  status: " << e.at("status").get<std::string>() << "\n"
              << "  parameters: " << e.at("parameters").dump() << "\n"
              << "  dims: " << e.at("dims").dump() << "\n"
              << "  certificates: " << e.at("certificates").dump(2) << "\n";
    if (e.contains("witness"))
      std::cout << "  witness: " << e.at("witness").get<std::string>() << "\n";
    return 0;
  }
  std::cerr << "error: unknown case id '" << id << "'\n";
  return 2;
}

} // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"exact verification driver for cyclotomic quotient checks"};
  app.require_subcommand(1);

  std::string config_path, json_path, report_path = "report.json", case_name;
  RunOptions opts;

  auto* run = app.add_subcommand("run", "run the configured checks");
  run->add_option("config", config_path, "config JSON path")->required();
  run->add_option("--json", json_path, "also write the JSON report here");
  run->add_option("--jobs", opts.jobs, "parallel worker count");
  run->add_option("--cap-seconds", opts.cap_seconds,
                  "wall-clock cap; later units are skipped (exit 3)");
  run->add_flag("--debug-flip-eta-sign", opts.flip_eta_sign,
                "regression aid: negate the two-sided unit normalization");

  auto* dims = app.add_subcommand("dims", "print quotient and kernel dims");
  dims->add_option("config", config_path, "config JSON path")->required();
  dims->add_option("--json", json_path, "also write the JSON table here");

  auto* explain = app.add_subcommand("explain",
                                     "show the certificate of one case");
  explain->add_option("id", case_name, "case id from a prior report")
      ->required();
  explain->add_option("--report", report_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (run->parsed()) {
      const VerifyConfig cfg = load_config(config_path);
      int code = 0;
      const json rep = run_cases(cfg, opts, &code);
      print_run_text(rep, std::cout);
      if (!json_path.empty()) write_json(rep, json_path);
      return code;
    }
    if (dims->parsed()) {
      const VerifyConfig cfg = load_config(config_path);
      const json rep = dims_table(cfg);
      print_dims_text(rep, std::cout);
      if (!json_path.empty()) write_json(rep, json_path);
      return 0;
    }
    return do_explain(report_path, case_name);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace klr::cli
