// Command-line front end: derive, orbits, dims, verify, sweep, hilbert.
//
// Exit status: 0 success, 1 invalid input, 2 mathematical disagreement.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ggm/cocycle.hpp"
#include "ggm/cover.hpp"
#include "ggm/error.hpp"
#include "ggm/report.hpp"
#include "ggm/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDisagree = 2;

// Raw option values from flags, falling back to the --config file.
class Params {
 public:
  void bind(CLI::App* app, const std::string& name, const std::string& help) {
    app->add_option("--" + name, flags_[name], help);
    names_.push_back(name);
  }

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ggm::InvalidArgument("cannot open config file '" + path + "'");
    ordered_json j;
    try {
      j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ggm::InvalidArgument("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw ggm::InvalidArgument("config file must hold a JSON object");
    for (const auto& [key, val] : j.items()) {
      if (std::find(names_.begin(), names_.end(), key) == names_.end())
        throw ggm::InvalidArgument("unknown config key '" + key + "' for this subcommand");
      config_[key] = scalar(val, key);
    }
  }

  std::optional<std::string> get(const std::string& name) const {
    if (auto it = flags_.find(name); it != flags_.end() && !it->second.empty()) return it->second;
    if (auto it = config_.find(name); it != config_.end()) return it->second;
    return std::nullopt;
  }

  std::int64_t integer(const std::string& name, std::optional<std::int64_t> fallback = std::nullopt) const {
    auto v = get(name);
    if (!v) {
      if (fallback) return *fallback;
      throw ggm::InvalidArgument("--" + name + " is required");
    }
    std::size_t pos = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(*v, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != v->size()) throw ggm::InvalidArgument("--" + name + " expects an integer, got '" + *v + "'");
    return x;
  }

 private:
  static std::string scalar(const ordered_json& v, const std::string& key) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
    if (v.is_array()) {
      std::string out;
      for (const auto& x : v) {
        if (!out.empty()) out += ",";
        out += scalar(x, key);
      }
      return out;
    }
    throw ggm::InvalidArgument("config key '" + key + "' must be an integer, a string or an array");
  }

  std::map<std::string, std::string> flags_;
  std::map<std::string, std::string> config_;
  std::vector<std::string> names_;
};

struct Command {
  explicit Command(CLI::App* a) : app(a) {}
  CLI::App* app;
  Params params;
  std::string config;
};

void add_common(Command& cmd, bool ranges) {
  const std::string value = ranges ? "range such as 1..6 or 1,3,5" : "integer";
  cmd.params.bind(cmd.app, "kind", ranges ? "cover kinds: kp, savin, generic (comma separated)" : "kp, savin or generic");
  cmd.params.bind(cmd.app, "n", "degree of the cover (" + value + ")");
  cmd.params.bind(cmd.app, "c", "exponent of the determinant cocycle (" + value + (ranges ? ", or all" : "") + ")");
  cmd.params.bind(cmd.app, "d", "exponent of the KP cocycle (" + value + (ranges ? ", or all" : "") + ")");
  cmd.params.bind(cmd.app, "r", "rank of GL (" + value + "; default k)");
  cmd.params.bind(cmd.app, "k", "number of blocks (" + value + ")");
  cmd.params.bind(cmd.app, "l0", "twist order, a divisor of n (" + value + (ranges ? ", or all" : "") + ")");
  cmd.params.bind(cmd.app, "f", "q0 = q^f (integer, default 1)");
  cmd.params.bind(cmd.app, "q", "specialize the Hecke computation at this rational q > 1");
  cmd.params.bind(cmd.app, "bound", "enumeration bound (default 1000000)");
  cmd.params.bind(cmd.app, "output", "json, csv or text");
  cmd.app->add_option("--config", cmd.config, "JSON file with default values for the flags");
}

ggm::OutputFormat output_of(const Params& p, ggm::OutputFormat fallback) {
  auto v = p.get("output");
  return v ? ggm::parse_output_format(*v) : fallback;
}

std::uint64_t bound_of(const Params& p) {
  const std::int64_t b = p.integer("bound", static_cast<std::int64_t>(ggm::kDefaultEnumerationBound));
  if (b < 1) throw ggm::InvalidArgument("--bound must be positive");
  return static_cast<std::uint64_t>(b);
}

unsigned f_of(const Params& p) {
  const std::int64_t f = p.integer("f", 1);
  if (f < 1 || f > 64) throw ggm::InvalidArgument("--f must lie in [1, 64]");
  return static_cast<unsigned>(f);
}

ggm::RunConfig run_config(const Params& p) {
  ggm::RunConfig cfg;
  const ggm::CoverKind kind = ggm::parse_cover_kind(p.get("kind").value_or("kp"));
  const std::int64_t n = p.integer("n");
  switch (kind) {
    case ggm::CoverKind::kp:
      cfg.cover = ggm::CoverSpec{n, p.integer("c", 0), p.integer("d", 1), kind};
      break;
    case ggm::CoverKind::savin:
      cfg.cover = ggm::CoverSpec{n, p.integer("c", -1), p.integer("d", 2), kind};
      break;
    case ggm::CoverKind::generic:
      cfg.cover = ggm::CoverSpec{n, p.integer("c"), p.integer("d"), kind};
      break;
  }
  const std::int64_t k = p.integer("k", 1);
  cfg.type = ggm::TypeSpec{p.integer("r", k), k, p.integer("l0", 1), f_of(p)};
  if (auto q = p.get("q")) cfg.q = ggm::parse_rational(*q);
  cfg.bound = bound_of(p);
  cfg.output = output_of(p, ggm::OutputFormat::text);
  cfg.validate();
  return cfg;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

// ------------------------------------------------------------ subcommands

int cmd_derive(const Params& p) {
  const ggm::RunConfig cfg = run_config(p);
  const auto dp = ggm::derive_params(cfg.cover, cfg.type);
  const auto xg = ggm::x_lambda(cfg.cover, cfg.type);
  std::optional<bool> lemma;
  if (cfg.cover.kind == ggm::CoverKind::kp) lemma = ggm::verify_kp_lemma(cfg.cover, cfg.type);

  ordered_json j;
  j["kind"] = ggm::to_string(cfg.cover.kind);
  j["n"] = cfg.cover.n;
  j["c"] = cfg.cover.c;
  j["d"] = cfg.cover.d;
  j["r"] = cfg.type.r;
  j["k"] = cfg.type.k;
  j["l0"] = cfg.type.l0;
  j["f"] = cfg.type.f;
  j["r0"] = dp.r0;
  j["n0"] = dp.n0;
  j["d0"] = dp.d0;
  j["x_order"] = xg.order();
  j["invariant_factors"] = xg.invariant_factors();
  j["coroot_multiplier"] = cfg.type.k > 1 ? ordered_json(xg.coroot_multiplier()) : ordered_json(nullptr);
  j["kp_lemma"] = lemma ? ordered_json(*lemma) : ordered_json(nullptr);

  switch (cfg.output) {
    case ggm::OutputFormat::json:
      std::cout << j.dump(2) << "\n";
      break;
    case ggm::OutputFormat::csv: {
      std::string header, row;
      for (const auto& [key, val] : j.items()) {
        header += (header.empty() ? "" : ",") + key;
        std::string cell = val.is_null() ? "NA" : val.is_array() ? join(val.get<std::vector<std::int64_t>>(), ";")
                                                                  : val.dump();
        if (val.is_string()) cell = val.get<std::string>();
        row += (row.empty() ? "" : ",") + cell;
      }
      std::cout << header << "\n" << row << "\n";
      break;
    }
    case ggm::OutputFormat::text:
      for (const auto& [key, val] : j.items()) {
        std::string cell = val.is_null() ? "NA" : val.is_array() ? join(val.get<std::vector<std::int64_t>>(), " ")
                                                                  : val.dump();
        if (val.is_string()) cell = val.get<std::string>();
        std::cout << key << ": " << cell << "\n";
      }
      break;
  }
  if (lemma && !*lemma) return kExitDisagree;
  return kExitOk;
}

int cmd_orbits(const Params& p) {
  const ggm::RunConfig cfg = run_config(p);
  const auto xg = ggm::x_lambda(cfg.cover, cfg.type);
  const auto orbs = ggm::orbits(xg, cfg.bound);
  auto stab = [](const ggm::OrbitRecord& o) { return o.stabilizer ? o.stabilizer->to_string() : std::string("none"); };
  switch (cfg.output) {
    case ggm::OutputFormat::json: {
      ordered_json j;
      j["x_order"] = xg.order();
      j["invariant_factors"] = xg.invariant_factors();
      j["orbit_count"] = orbs.size();
      j["orbits"] = ordered_json::array();
      for (const auto& o : orbs) {
        ordered_json e;
        e["representative"] = o.representative;
        e["lift"] = xg.lift(o.representative);
        e["size"] = o.size;
        e["stabilizer"] = o.stabilizer ? ordered_json(o.stabilizer->parts()) : ordered_json(nullptr);
        j["orbits"].push_back(e);
      }
      std::cout << j.dump(2) << "\n";
      break;
    }
    case ggm::OutputFormat::csv:
      std::cout << "representative,lift,size,stabilizer\n";
      for (const auto& o : orbs) {
        std::cout << join(o.representative, ";") << ',' << join(xg.lift(o.representative), ";") << ',' << o.size
                  << ',' << stab(o) << "\n";
      }
      break;
    case ggm::OutputFormat::text:
      std::cout << "X = Z^" << cfg.type.k << " / T(b,rho), order " << xg.order() << ", invariant factors "
                << (xg.invariant_factors().empty() ? "none" : join(xg.invariant_factors(), " ")) << "\n";
      std::cout << orbs.size() << " orbits\n";
      for (const auto& o : orbs) {
        std::cout << "  [" << join(o.representative, ",") << "]  lift (" << join(xg.lift(o.representative), ",")
                  << ")  size " << o.size << "  stabilizer " << stab(o) << "\n";
      }
      break;
  }
  return kExitOk;
}

int cmd_dims(const Params& p) {
  const ggm::RunConfig cfg = run_config(p);
  const ggm::DimReport rep = ggm::compute_dim_report(cfg);
  switch (cfg.output) {
    case ggm::OutputFormat::json:
      std::cout << ggm::to_json(rep) << "\n";
      break;
    case ggm::OutputFormat::csv:
      std::cout << ggm::kSweepCsvHeader << "\n" << ggm::csv_row(rep) << "\n";
      break;
    case ggm::OutputFormat::text:
      std::cout << ggm::to_text(rep);
      break;
  }
  return rep.agree ? kExitOk : kExitDisagree;
}

std::optional<std::vector<std::int64_t>> range_or_all(const Params& p, const std::string& name) {
  auto v = p.get(name);
  if (!v || *v == "all") return std::nullopt;
  return ggm::parse_int_range(*v);
}

int cmd_sweep(const Params& p, unsigned threads) {
  ggm::SweepSpec spec;
  spec.kinds.clear();
  {
    std::stringstream ss(p.get("kind").value_or("kp"));
    std::string item;
    while (std::getline(ss, item, ',')) spec.kinds.push_back(ggm::parse_cover_kind(item));
  }
  auto nv = p.get("n");
  if (!nv) throw ggm::InvalidArgument("--n is required");
  spec.n = ggm::parse_int_range(*nv);
  spec.k = ggm::parse_int_range(p.get("k").value_or("1"));
  spec.c = range_or_all(p, "c");
  spec.d = range_or_all(p, "d");
  spec.l0 = range_or_all(p, "l0");
  if (auto r = p.get("r")) spec.r = ggm::parse_int_range(*r);
  if (auto m = p.get("r-mult")) spec.r_mult = ggm::parse_int_range(*m);
  spec.f = f_of(p);
  if (auto q = p.get("q")) spec.q = ggm::parse_rational(*q);
  spec.bound = bound_of(p);
  const auto rows = ggm::run_sweep(spec, threads);
  switch (output_of(p, ggm::OutputFormat::csv)) {
    case ggm::OutputFormat::json:
      std::cout << ggm::sweep_json(rows) << "\n";
      break;
    case ggm::OutputFormat::csv:
    case ggm::OutputFormat::text:
      std::cout << ggm::sweep_csv(rows);
      break;
  }
  for (const auto& r : rows) {
    if (!r.agree) return kExitDisagree;
  }
  return kExitOk;
}

int cmd_verify(const Params& p, const std::string& fault) {
  ggm::VerifyOptions opt;
  if (fault == "quadratic-sign")
    opt.fault = ggm::StructureFault::quadratic_sign;
  else if (!fault.empty() && fault != "none")
    throw ggm::InvalidArgument("unknown fault '" + fault + "'");
  if (p.get("q")) opt.q = p.integer("q");
  if (p.get("n")) opt.n = p.integer("n");
  if (opt.q) ggm::FieldModel(*opt.q, opt.n.value_or(1));
  if (opt.n && !opt.q) throw ggm::InvalidArgument("--n for the cocycle suite needs --q");
  if (auto s = p.get("seed")) opt.seed = static_cast<std::uint64_t>(p.integer("seed"));

  std::vector<std::string> suites;
  if (auto s = p.get("suite")) {
    std::stringstream ss(*s);
    std::string item;
    while (std::getline(ss, item, ',')) suites.push_back(item);
  }
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = ggm::verify_suite_names();
  for (const auto& s : suites) {
    const auto& names = ggm::verify_suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw ggm::InvalidArgument("unknown suite '" + s + "'");
  }

  const auto format = output_of(p, ggm::OutputFormat::text);
  std::vector<ggm::CheckResult> all;
  for (const auto& s : suites) {
    for (auto& r : ggm::run_verify_suite(s, opt)) all.push_back(std::move(r));
  }
  std::size_t failed = 0;
  for (const auto& r : all) failed += !r.ok;
  switch (format) {
    case ggm::OutputFormat::json: {
      ordered_json j = ordered_json::array();
      for (const auto& r : all) j.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
      std::cout << j.dump(2) << "\n";
      break;
    }
    case ggm::OutputFormat::csv:
      std::cout << "name,ok,detail\n";
      for (const auto& r : all) std::cout << r.name << ',' << (r.ok ? "true" : "false") << ",\"" << r.detail << "\"\n";
      break;
    case ggm::OutputFormat::text:
      for (const auto& r : all) std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      std::cout << (all.size() - failed) << " passed, " << failed << " failed\n";
      break;
  }
  return failed ? kExitDisagree : kExitOk;
}

ggm::FieldElem parse_field_elem(const std::string& s, const std::string& flag) {
  const auto colon = s.find(':');
  try {
    std::size_t p1 = 0, p2 = 0;
    if (colon == std::string::npos) throw std::invalid_argument("");
    const std::string a = s.substr(0, colon), x = s.substr(colon + 1);
    ggm::FieldElem e{std::stoll(a, &p1), std::stoll(x, &p2)};
    if (p1 != a.size() || p2 != x.size()) throw std::invalid_argument("");
    return e;
  } catch (const std::exception&) {
    throw ggm::InvalidArgument(flag + " expects valuation:unit_exponent, got '" + s + "'");
  }
}

int cmd_hilbert(const Params& p) {
  const ggm::FieldModel fm(p.integer("q"), p.integer("n"));
  const auto u = ggm::normalize(fm, parse_field_elem(p.get("u").value_or("1:0"), "--u"));
  const auto v = ggm::normalize(fm, parse_field_elem(p.get("v").value_or("1:0"), "--v"));
  const ggm::MuN h = ggm::hilbert(fm, u, v);
  const std::int64_t order = ggm::mu_order(fm, h);
  switch (output_of(p, ggm::OutputFormat::text)) {
    case ggm::OutputFormat::json: {
      ordered_json j;
      j["q"] = fm.q();
      j["n"] = fm.n();
      j["u"] = {{"valuation", u.valuation}, {"unit_exp", u.unit_exp}};
      j["v"] = {{"valuation", v.valuation}, {"unit_exp", v.unit_exp}};
      j["exponent"] = h.exp;
      j["order"] = order;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case ggm::OutputFormat::csv:
      std::cout << "q,n,u_valuation,u_unit_exp,v_valuation,v_unit_exp,exponent,order\n"
                << fm.q() << ',' << fm.n() << ',' << u.valuation << ',' << u.unit_exp << ',' << v.valuation << ','
                << v.unit_exp << ',' << h.exp << ',' << order << "\n";
      break;
    case ggm::OutputFormat::text:
      std::cout << "(u, v)_" << fm.n() << " = zeta^" << h.exp << "  (order " << order << ")\n"
                << "zeta = g^((q-1)/n) for the fixed generator g of the residue units\n";
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whittaker dimensions of simple types of Kazhdan-Patterson and Savin covers"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand help for every subcommand");

  Command derive{app.add_subcommand("derive", "derived parameters n0, d0 and the quotient X")};
  Command orbits{app.add_subcommand("orbits", "S_k-orbits on X with stabilizers")};
  Command dims{app.add_subcommand("dims", "Whittaker dimension by closed form, orbit count and Hecke Hom")};
  Command sweep{app.add_subcommand("sweep", "dimension reports over parameter ranges")};
  Command verify{app.add_subcommand("verify", "run the invariant suites")};
  Command hilbert{app.add_subcommand("hilbert", "tame n-th Hilbert symbol")};
  for (Command* c : {&derive, &orbits, &dims}) add_common(*c, false);
  add_common(sweep, true);
  sweep.params.bind(sweep.app, "r-mult", "ranks r = m k for these m when --r is absent (default 1)");
  unsigned threads = 0;
  sweep.app->add_option("--threads", threads, "worker threads (default: hardware concurrency)");

  std::string fault;
  verify.params.bind(verify.app, "suite", "hecke-finite, hecke-affine, cover, cocycle or all (comma separated)");
  verify.params.bind(verify.app, "q", "residue field size for the cocycle suite");
  verify.params.bind(verify.app, "n", "restrict the cocycle suite to this n");
  verify.params.bind(verify.app, "seed", "seed of the random property checks");
  verify.params.bind(verify.app, "output", "json, csv or text");
  verify.app->add_option("--config", verify.config, "JSON file with default values for the flags");
  verify.app->add_option("--inject-fault", fault, "test hook")->group("");

  hilbert.params.bind(hilbert.app, "q", "residue field size (prime power)");
  hilbert.params.bind(hilbert.app, "n", "order of the symbol, dividing q-1");
  hilbert.params.bind(hilbert.app, "u", "first argument as valuation:unit_exponent (default 1:0)");
  hilbert.params.bind(hilbert.app, "v", "second argument as valuation:unit_exponent (default 1:0)");
  hilbert.params.bind(hilbert.app, "output", "json, csv or text");
  hilbert.app->add_option("--config", hilbert.config, "JSON file with default values for the flags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    for (Command* c : {&derive, &orbits, &dims, &sweep, &verify, &hilbert}) {
      if (!c->app->parsed()) continue;
      if (!c->config.empty()) c->params.load(c->config);
      if (c == &derive) return cmd_derive(c->params);
      if (c == &orbits) return cmd_orbits(c->params);
      if (c == &dims) return cmd_dims(c->params);
      if (c == &sweep) return cmd_sweep(c->params, threads);
      if (c == &verify) return cmd_verify(c->params, fault);
      if (c == &hilbert) return cmd_hilbert(c->params);
    }
  } catch (const ggm::InternalError& e) {
    std::cerr << "error: internal disagreement: " << e.what() << "\n";
    return kExitDisagree;
  } catch (const ggm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
