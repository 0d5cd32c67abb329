#include "ggm/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <exception>
#include <sstream>
#include <thread>
#include <tuple>

#include "ggm/bruteforce.hpp"
#include "ggm/error.hpp"
#include "ggm/hecke_affine.hpp"
#include "json.hpp"

namespace ggm {

OutputFormat parse_output_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw InvalidArgument("unknown output format '" + s + "' (expected json, csv or text)");
}

Rational parse_rational(const std::string& s) {
  Rational x;
  if (s.empty() || x.set_str(s, 10) != 0) throw InvalidArgument("not a rational number: '" + s + "'");
  if (x.get_den() == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  x.canonicalize();
  return x;
}

void RunConfig::validate() const {
  cover.validate();
  type.validate(cover);
  if (q && *q <= 1) throw InvalidArgument("the specialization point q must exceed 1");
  if (bound == 0) throw InvalidArgument("the enumeration bound must be positive");
}

namespace {

template <class T>
bool all_equal(const std::vector<T>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

}  // namespace

DimReport compute_dim_report(const RunConfig& cfg) {
  cfg.validate();
  DimReport rep;
  rep.cover = cfg.cover;
  rep.type = cfg.type;
  rep.q = cfg.q;
  rep.proved = cfg.cover.kind != CoverKind::generic;
  rep.derived = derive_params(cfg.cover, cfg.type);

  std::optional<QuotientGroup> xg;
  try {
    xg = x_lambda(cfg.cover, cfg.type);
    rep.x_order = xg->order();
  } catch (const InternalError& e) {
    rep.agree = false;
    rep.notes.push_back(std::string("x_order: ") + e.what());
  }

  std::optional<std::vector<OrbitRecord>> orbs;
  if (xg) {
    try {
      orbs = orbits(*xg, cfg.bound);
      rep.orbit_count = orbs->size();
      std::uint64_t total = 0;
      for (const auto& o : *orbs) total += o.size;
      if (total != xg->order()) {
        rep.agree = false;
        rep.notes.push_back("orbit sizes do not sum to |X|");
      }
    } catch (const BoundExceeded& e) {
      rep.notes.push_back(std::string("orbit_count skipped: ") + e.what());
    }
  }

  if (rep.proved) {
    try {
      rep.dim_closed = whittaker_dim_closed(cfg.cover, cfg.type);
    } catch (const InternalError& e) {
      rep.agree = false;
      rep.notes.push_back(std::string("dim_closed: ") + e.what());
    }
  } else {
    rep.notes.push_back("dim_closed skipped: no closed form for generic covers");
  }

  if (auto bf = bruteforce_count(cfg.cover, cfg.type, cfg.bound)) {
    rep.dim_bruteforce = bf->orbit_count;
    if (rep.x_order && *rep.x_order != bf->x_order) {
      rep.agree = false;
      rep.notes.push_back("brute-force |X| differs from the Smith-form order");
    }
  } else {
    rep.notes.push_back("dim_bruteforce skipped: n^k exceeds the enumeration bound");
  }

  if (!rep.proved) {
    rep.notes.push_back("dim_hecke skipped: the Gelfand-Graev decomposition is not established for generic covers");
  } else if (xg && orbs) {
    try {
      GGModule m;
      m.lattice = lattice_spec(*xg);
      for (const auto& o : *orbs) {
        if (!o.stabilizer) throw InternalError("orbit without a Young stabilizer");
        m.blocks.push_back(GGBlock{o, induced_sign_module(xg->rank(), *o.stabilizer)});
      }
      if (m.rank() != xg->order()) {
        rep.agree = false;
        rep.notes.push_back("Gelfand-Graev module rank differs from |X|");
      }
      rep.dim_hecke = cfg.q ? whittaker_dim_hecke_at(m, *cfg.q, cfg.type.f) : whittaker_dim_hecke(m, cfg.type.f);
    } catch (const InternalError& e) {
      rep.agree = false;
      rep.notes.push_back(std::string("dim_hecke: ") + e.what());
    }
  } else {
    rep.notes.push_back("dim_hecke skipped: orbit enumeration exceeded the bound");
  }

  if (!rep.proved) rep.notes.push_back("conjectural: dimension statements are proved only for KP and Savin covers");

  std::vector<Integer> values;
  if (rep.orbit_count) values.emplace_back(static_cast<unsigned long>(*rep.orbit_count));
  if (rep.dim_closed) values.push_back(*rep.dim_closed);
  if (rep.dim_bruteforce) values.emplace_back(static_cast<unsigned long>(*rep.dim_bruteforce));
  if (rep.dim_hecke) values.emplace_back(static_cast<unsigned long>(*rep.dim_hecke));
  if (!all_equal(values)) rep.agree = false;
  return rep;
}

// ------------------------------------------------------------ rendering

namespace {

template <class T>
std::string or_na(const std::optional<T>& v) {
  if (!v) return "NA";
  std::ostringstream os;
  os << *v;
  return os.str();
}

nlohmann::ordered_json json_of(const DimReport& r) {
  auto opt = [](const auto& v) -> nlohmann::ordered_json {
    if (!v) return nullptr;
    return *v;
  };
  nlohmann::ordered_json j;
  j["kind"] = to_string(r.cover.kind);
  j["n"] = r.cover.n;
  j["c"] = r.cover.c;
  j["d"] = r.cover.d;
  j["r"] = r.type.r;
  j["k"] = r.type.k;
  j["l0"] = r.type.l0;
  j["f"] = r.type.f;
  j["q"] = r.q ? nlohmann::ordered_json(r.q->get_str()) : nlohmann::ordered_json(nullptr);
  j["r0"] = r.derived ? nlohmann::ordered_json(r.derived->r0) : nlohmann::ordered_json(nullptr);
  j["n0"] = r.derived ? nlohmann::ordered_json(r.derived->n0) : nlohmann::ordered_json(nullptr);
  j["d0"] = r.derived ? nlohmann::ordered_json(r.derived->d0) : nlohmann::ordered_json(nullptr);
  j["x_order"] = opt(r.x_order);
  j["orbit_count"] = opt(r.orbit_count);
  // Closed-form values can in principle exceed 64 bits.
  if (r.dim_closed && r.dim_closed->fits_ulong_p())
    j["dim_closed"] = r.dim_closed->get_ui();
  else
    j["dim_closed"] = r.dim_closed ? nlohmann::ordered_json(r.dim_closed->get_str()) : nlohmann::ordered_json(nullptr);
  j["dim_bruteforce"] = opt(r.dim_bruteforce);
  j["dim_hecke"] = opt(r.dim_hecke);
  j["agree"] = r.agree;
  j["status"] = r.proved ? "proved" : "conjectural";
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string csv_row(const DimReport& r) {
  std::ostringstream os;
  os << to_string(r.cover.kind) << ',' << r.cover.n << ',' << r.cover.c << ',' << r.cover.d << ',' << r.type.r << ','
     << r.type.k << ',' << r.type.l0 << ',';
  if (r.derived)
    os << r.derived->r0 << ',' << r.derived->n0 << ',' << r.derived->d0 << ',';
  else
    os << "NA,NA,NA,";
  os << or_na(r.x_order) << ',' << or_na(r.orbit_count) << ',' << or_na(r.dim_closed) << ','
     << or_na(r.dim_bruteforce) << ',' << or_na(r.dim_hecke) << ',' << (r.agree ? "true" : "false");
  return os.str();
}

std::string to_json(const DimReport& r, int indent) { return json_of(r).dump(indent); }

std::string to_text(const DimReport& r) {
  std::ostringstream os;
  os << "cover: " << to_string(r.cover.kind) << " n=" << r.cover.n << " c=" << r.cover.c << " d=" << r.cover.d
     << "\n";
  os << "type: r=" << r.type.r << " k=" << r.type.k << " l0=" << r.type.l0 << " f=" << r.type.f;
  if (r.q) os << " q=" << r.q->get_str();
  os << "\n";
  if (r.derived) os << "r0=" << r.derived->r0 << " n0=" << r.derived->n0 << " d0=" << r.derived->d0 << "\n";
  os << "x_order: " << or_na(r.x_order) << "\n";
  os << "orbit_count: " << or_na(r.orbit_count) << "\n";
  os << "dim_closed: " << or_na(r.dim_closed) << "\n";
  os << "dim_bruteforce: " << or_na(r.dim_bruteforce) << "\n";
  os << "dim_hecke: " << or_na(r.dim_hecke) << "\n";
  os << "status: " << (r.proved ? "proved" : "conjectural") << "\n";
  os << "agree: " << (r.agree ? "true" : "false") << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

// ------------------------------------------------------------ sweeps

std::vector<std::int64_t> parse_int_range(const std::string& s) {
  std::vector<std::int64_t> out;
  auto parse_int = [&](const std::string& tok) -> std::int64_t {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (tok.empty() || pos != tok.size()) throw InvalidArgument("malformed integer '" + tok + "' in range '" + s + "'");
    return v;
  };
  std::string compact;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) return out;
  std::stringstream ss(compact);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const std::int64_t a = parse_int(item.substr(0, dots));
    const std::int64_t b = parse_int(item.substr(dots + 2));
    if (b - a > 100000) throw InvalidArgument("range '" + item + "' is too long");
    for (std::int64_t v = a; v <= b; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<RunConfig> sweep_points(const SweepSpec& spec) {
  using Key = std::tuple<std::string, std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                         std::int64_t>;
  std::vector<std::pair<Key, RunConfig>> pts;
  for (CoverKind kind : spec.kinds) {
    for (std::int64_t n : spec.n) {
      if (n < 1) throw InvalidArgument("n must be positive");
      std::vector<std::pair<std::int64_t, std::int64_t>> cds;
      auto all_residues = [n] {
        std::vector<std::int64_t> v;
        for (std::int64_t x = 0; x < n; ++x) v.push_back(x);
        return v;
      };
      if (kind == CoverKind::savin) {
        cds.emplace_back(-1, 2);
      } else {
        const auto cs = spec.c ? *spec.c : all_residues();
        const auto ds = kind == CoverKind::kp ? std::vector<std::int64_t>{1} : (spec.d ? *spec.d : all_residues());
        for (auto c : cs)
          for (auto d : ds) cds.emplace_back(c, d);
      }
      std::vector<std::int64_t> l0s;
      if (spec.l0) {
        for (auto l : *spec.l0)
          if (l >= 1 && n % l == 0) l0s.push_back(l);
      } else {
        for (std::int64_t l = 1; l <= n; ++l)
          if (n % l == 0) l0s.push_back(l);
      }
      for (auto k : spec.k) {
        if (k < 1) throw InvalidArgument("k must be positive");
        std::vector<std::int64_t> rs;
        if (spec.r) {
          for (auto r : *spec.r)
            if (r >= 1 && r % k == 0) rs.push_back(r);
        } else {
          for (auto m : spec.r_mult) {
            if (m < 1) throw InvalidArgument("rank multipliers must be positive");
            rs.push_back(m * k);
          }
        }
        for (auto [c, d] : cds) {
          for (auto r : rs) {
            for (auto l0 : l0s) {
              RunConfig cfg;
              cfg.cover = CoverSpec{n, c, d, kind};
              cfg.type = TypeSpec{r, k, l0, spec.f};
              cfg.q = spec.q;
              cfg.bound = spec.bound;
              pts.emplace_back(Key{to_string(kind), n, c, d, r, k, l0}, cfg);
            }
          }
        }
      }
    }
  }
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
            pts.end());
  std::vector<RunConfig> out;
  out.reserve(pts.size());
  for (auto& p : pts) out.push_back(std::move(p.second));
  return out;
}

std::vector<DimReport> run_sweep(const SweepSpec& spec, unsigned threads) {
  const std::vector<RunConfig> pts = sweep_points(spec);
  for (const auto& p : pts) p.validate();
  std::vector<DimReport> out(pts.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(pts.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(pts.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) {
      try {
        out[i] = compute_dim_report(pts[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string sweep_csv(const std::vector<DimReport>& rows) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (const auto& r : rows) out += csv_row(r) + "\n";
  return out;
}

std::string sweep_json(const std::vector<DimReport>& rows, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back(json_of(r));
  return arr.dump(indent);
}

}  // namespace ggm
