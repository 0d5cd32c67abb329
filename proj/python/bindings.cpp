#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ggm/cocycle.hpp"
#include "ggm/cover.hpp"
#include "ggm/error.hpp"
#include "ggm/hecke_affine.hpp"
#include "ggm/report.hpp"
#include "ggm/verify.hpp"

namespace py = pybind11;
using namespace ggm;

namespace {

CoverSpec make_cover(const std::string& kind, std::int64_t n, std::optional<std::int64_t> c,
                     std::optional<std::int64_t> d) {
  CoverSpec cov;
  cov.kind = parse_cover_kind(kind);
  cov.n = n;
  if (cov.kind == CoverKind::savin) {
    cov.c = c.value_or(-1);
    cov.d = d.value_or(2);
  } else if (cov.kind == CoverKind::kp) {
    cov.c = c.value_or(0);
    cov.d = d.value_or(1);
  } else {
    if (!c || !d) throw InvalidArgument("generic covers need both c and d");
    cov.c = *c;
    cov.d = *d;
  }
  cov.validate();
  return cov;
}

RunConfig make_config(const std::string& kind, std::int64_t n, std::optional<std::int64_t> c,
                      std::optional<std::int64_t> d, std::int64_t k, std::optional<std::int64_t> r,
                      std::int64_t l0, unsigned f) {
  RunConfig cfg;
  cfg.cover = make_cover(kind, n, c, d);
  cfg.type = TypeSpec{r.value_or(k), k, l0, f};
  cfg.validate();
  return cfg;
}

py::dict report_dict(const DimReport& r) {
  py::dict out;
  out["kind"] = to_string(r.cover.kind);
  out["n"] = r.cover.n;
  out["c"] = r.cover.c;
  out["d"] = r.cover.d;
  out["r"] = r.type.r;
  out["k"] = r.type.k;
  out["l0"] = r.type.l0;
  auto opt = [](const auto& v) -> py::object {
    if (!v) return py::none();
    return py::int_(static_cast<unsigned long long>(*v));
  };
  out["n0"] = r.derived ? py::object(py::int_(r.derived->n0)) : py::none();
  out["d0"] = r.derived ? py::object(py::int_(r.derived->d0)) : py::none();
  out["x_order"] = opt(r.x_order);
  out["orbit_count"] = opt(r.orbit_count);
  out["dim_closed"] = r.dim_closed ? py::object(py::int_(py::str(r.dim_closed->get_str()))) : py::none();
  out["dim_bruteforce"] = opt(r.dim_bruteforce);
  out["dim_hecke"] = opt(r.dim_hecke);
  out["agree"] = r.agree;
  out["proved"] = r.proved;
  out["notes"] = r.notes;
  return out;
}

}  // namespace

PYBIND11_MODULE(_ggm, m) {
  m.doc() = "Whittaker dimensions of covering groups via Hecke modules";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

  m.def(
      "derive_params",
      [](const std::string& kind, std::int64_t n, std::optional<std::int64_t> c, std::optional<std::int64_t> d,
         std::int64_t k, std::optional<std::int64_t> r, std::int64_t l0) {
        auto cfg = make_config(kind, n, c, d, k, r, l0, 1);
        auto p = derive_params(cfg.cover, cfg.type);
        auto xg = x_lambda(cfg.cover, cfg.type);
        py::dict out;
        out["r0"] = p.r0;
        out["n0"] = p.n0;
        out["d0"] = p.d0;
        out["x_order"] = xg.order();
        out["invariant_factors"] = xg.invariant_factors();
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("c") = py::none(), py::arg("d") = py::none(), py::arg("k") = 1,
      py::arg("r") = py::none(), py::arg("l0") = 1);

  m.def(
      "orbits",
      [](const std::string& kind, std::int64_t n, std::optional<std::int64_t> c, std::optional<std::int64_t> d,
         std::int64_t k, std::optional<std::int64_t> r, std::int64_t l0, std::uint64_t bound) {
        auto cfg = make_config(kind, n, c, d, k, r, l0, 1);
        auto xg = x_lambda(cfg.cover, cfg.type);
        py::list out;
        for (const auto& o : orbits(xg, bound)) {
          py::dict rec;
          rec["representative"] = xg.lift(o.representative);
          rec["size"] = o.size;
          rec["stabilizer"] = o.stabilizer ? py::object(py::cast(o.stabilizer->parts())) : py::none();
          out.append(rec);
        }
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("c") = py::none(), py::arg("d") = py::none(), py::arg("k") = 1,
      py::arg("r") = py::none(), py::arg("l0") = 1, py::arg("bound") = kDefaultEnumerationBound);

  m.def(
      "dims",
      [](const std::string& kind, std::int64_t n, std::optional<std::int64_t> c, std::optional<std::int64_t> d,
         std::int64_t k, std::optional<std::int64_t> r, std::int64_t l0, unsigned f, std::optional<std::string> q,
         std::uint64_t bound) {
        auto cfg = make_config(kind, n, c, d, k, r, l0, f);
        if (q) cfg.q = parse_rational(*q);
        cfg.bound = bound;
        cfg.validate();
        DimReport rep;
        {
          py::gil_scoped_release release;
          rep = compute_dim_report(cfg);
        }
        return report_dict(rep);
      },
      py::arg("kind"), py::arg("n"), py::arg("c") = py::none(), py::arg("d") = py::none(), py::arg("k") = 1,
      py::arg("r") = py::none(), py::arg("l0") = 1, py::arg("f") = 1, py::arg("q") = py::none(),
      py::arg("bound") = kDefaultEnumerationBound);

  m.def(
      "sweep_csv",
      [](const std::vector<std::string>& kinds, const std::string& n, const std::string& k,
         std::optional<std::string> c, std::optional<std::string> l0, std::optional<std::string> r,
         const std::string& r_mult, unsigned threads) {
        SweepSpec s;
        s.kinds.clear();
        for (const auto& kd : kinds) s.kinds.push_back(parse_cover_kind(kd));
        s.n = parse_int_range(n);
        s.k = parse_int_range(k);
        if (c) s.c = parse_int_range(*c);
        if (l0) s.l0 = parse_int_range(*l0);
        if (r) s.r = parse_int_range(*r);
        s.r_mult = parse_int_range(r_mult);
        py::gil_scoped_release release;
        return sweep_csv(run_sweep(s, threads));
      },
      py::arg("kinds"), py::arg("n"), py::arg("k"), py::arg("c") = py::none(), py::arg("l0") = py::none(),
      py::arg("r") = py::none(), py::arg("r_mult") = "1", py::arg("threads") = 0);

  m.def(
      "hilbert",
      [](std::int64_t q, std::int64_t n, std::pair<std::int64_t, std::int64_t> u,
         std::pair<std::int64_t, std::int64_t> v) {
        FieldModel fm(q, n);
        MuN e = hilbert(fm, {u.first, u.second}, {v.first, v.second});
        return std::make_pair(e.exp, mu_order(fm, e));
      },
      py::arg("q"), py::arg("n"), py::arg("u"), py::arg("v"),
      "Returns (exponent of zeta, order) for elements given as (valuation, unit exponent).");

  m.def(
      "verify",
      [](const std::string& suite, std::optional<std::int64_t> q, std::optional<std::int64_t> n) {
        VerifyOptions opt;
        opt.q = q;
        opt.n = n;
        std::vector<CheckResult> res;
        {
          py::gil_scoped_release release;
          res = run_verify_suite(suite, opt);
        }
        py::list out;
        for (const auto& r : res) out.append(py::make_tuple(r.name, r.ok, r.detail));
        return out;
      },
      py::arg("suite"), py::arg("q") = py::none(), py::arg("n") = py::none());

  m.attr("SWEEP_CSV_HEADER") = kSweepCsvHeader;
  m.attr("VERIFY_SUITES") = verify_suite_names();
}
