#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pfq/builtins.hpp"
#include "pfq/certificates.hpp"
#include "pfq/groebner.hpp"
#include "pfq/hilbert.hpp"
#include "pfq/linalg.hpp"
#include "pfq/pfaffian.hpp"
#include "pfq/sheafcoh.hpp"
#include "pfq/version.hpp"

namespace py = pybind11;
using namespace pfq;

namespace {

py::int_ to_py(const Int& v) {
  PyObject* o = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(o);
}

VarContext ctx_of(const std::vector<std::string>& vars) { return VarContext(vars); }

std::vector<PolyP> parse_gens(const std::vector<std::string>& vars,
                              const std::vector<std::string>& gens, std::uint64_t p) {
  VarContext ctx = ctx_of(vars);
  GF gf(p);
  std::vector<PolyP> out;
  for (const auto& g : gens) out.push_back(parse_poly(g, ctx, gf));
  return out;
}

TwistedFreeComplex resolve_complex(const std::string& spec) {
  if (spec == "eacm" || spec == "rodland" || spec == "be-curve") return builtin_complex(spec);
  return parse_complex_json(spec);
}

}  // namespace

PYBIND11_MODULE(_pfq, m) {
  m.doc() = "exact Pfaffian/Groebner certificates for quartic threefolds";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "PfqError");

  m.def("binomial", [](long n, unsigned k) { return to_py(binomial_ext(n, k)); },
        py::arg("n"), py::arg("k"), "polynomial-extended binomial coefficient");
  m.def("field_inv", &field_inv, py::arg("a"), py::arg("p"));
  m.def("is_prime", &is_prime_u64, py::arg("n"));

  m.def("m0_json", [] { return std::string(kM0Json); });
  m.def("f0_text", [] { return std::string(kF0Text); });

  m.def("canon",
        [](const std::vector<std::string>& vars, const std::string& text) {
          return parse_poly(text, ctx_of(vars), QQ{}).to_string();
        },
        py::arg("vars"), py::arg("poly"), "canonical degrevlex form over the rationals");
  m.def("poly_mul",
        [](const std::vector<std::string>& vars, const std::string& f, const std::string& g) {
          VarContext ctx = ctx_of(vars);
          QQ qq;
          return (parse_poly(f, ctx, qq) * parse_poly(g, ctx, qq)).to_string();
        },
        py::arg("vars"), py::arg("f"), py::arg("g"));
  m.def("differentiate",
        [](const std::vector<std::string>& vars, const std::string& f, const std::string& var) {
          VarContext ctx = ctx_of(vars);
          auto idx = ctx.find(var);
          if (!idx) throw Error("unknown variable: " + var);
          return parse_poly(f, ctx, QQ{}).differentiate(*idx).to_string();
        },
        py::arg("vars"), py::arg("f"), py::arg("var"));
  m.def("evaluate_mod",
        [](const std::vector<std::string>& vars, const std::string& f,
           const std::vector<long>& point, std::uint64_t p) {
          GF gf(p);
          std::vector<std::uint64_t> pt;
          for (long v : point) pt.push_back(gf.from_int(v));
          return parse_poly(f, ctx_of(vars), gf).evaluate(pt);
        },
        py::arg("vars"), py::arg("f"), py::arg("point"), py::arg("p"));

  m.def("pfaffian",
        [](const std::string& matrix_json) { return parse_matrix_json(matrix_json).pfaffian().to_string(); },
        py::arg("matrix_json"));
  m.def("sub_pfaffian",
        [](const std::string& matrix_json, int i, int j) {
          return parse_matrix_json(matrix_json).sub_pfaffian(i, j).to_string();
        },
        py::arg("matrix_json"), py::arg("i"), py::arg("j"));
  m.def("odd_pfaffian_family",
        [](const std::string& matrix_json) {
          std::vector<std::string> out;
          for (const auto& f : parse_matrix_json(matrix_json).odd_pfaffian_family())
            out.push_back(f.to_string());
          return out;
        },
        py::arg("matrix_json"));
  m.def("jacobian_span_rank",
        [](const std::string& matrix_json, std::uint64_t p) {
          return jacobian_span_rank(reduce_mod(parse_matrix_json(matrix_json), GF(p)));
        },
        py::arg("matrix_json"), py::arg("p"));

  m.def("groebner_basis",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::uint64_t p) {
          auto gb = buchberger(parse_gens(vars, gens, p),
                               Order{OrderKind::kDegrevlex, static_cast<int>(vars.size())});
          std::vector<std::string> out;
          for (const auto& g : gb.gens) out.push_back(g.to_string());
          return out;
        },
        py::arg("vars"), py::arg("gens"), py::arg("p"));
  m.def("normal_form",
        [](const std::vector<std::string>& vars, const std::string& f,
           const std::vector<std::string>& gens, std::uint64_t p) {
          auto gb = buchberger(parse_gens(vars, gens, p),
                               Order{OrderKind::kDegrevlex, static_cast<int>(vars.size())});
          GF gf(p);
          return normal_form(parse_poly(f, ctx_of(vars), gf), gb).to_string();
        },
        py::arg("vars"), py::arg("f"), py::arg("gens"), py::arg("p"));
  m.def("is_empty_projective",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::uint64_t p) { return is_empty_projective(parse_gens(vars, gens, p)); },
        py::arg("vars"), py::arg("gens"), py::arg("p"));
  m.def("smoothness",
        [](const std::string& poly, std::uint64_t p) {
          PolyQ f = parse_poly(poly, VarContext::numbered(5), QQ{});
          SmoothnessReport sr = smoothness_certificate(f, p);
          py::dict out;
          out["verdict"] = std::string(to_string(sr.verdict));
          if (sr.witness) {
            py::list w;
            for (const auto& z : *sr.witness) w.append(to_py(z));
            out["witness"] = w;
          }
          return out;
        },
        py::arg("poly"), py::arg("p"), "smoothness of a quintic-variable hypersurface {poly = 0}");

  m.def("hilbert_function",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::uint64_t p, int t) { return to_py(hilbert_function(parse_gens(vars, gens, p), t)); },
        py::arg("vars"), py::arg("gens"), py::arg("p"), py::arg("t"));
  m.def("hilbert_data",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::uint64_t p, int tmax) {
          HilbertSummary hs = hilbert_data(parse_gens(vars, gens, p), tmax);
          py::dict out;
          py::list hf;
          for (const auto& v : hs.hf) hf.append(to_py(v));
          out["hf"] = hf;
          out["hilbert_polynomial"] = hs.hp.to_string();
          out["stabilization_degree"] = hs.stabilization_degree;
          return out;
        },
        py::arg("vars"), py::arg("gens"), py::arg("p"), py::arg("tmax") = 8);
  m.def("curve_invariants",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::uint64_t p) {
          CurveInvariants inv = curve_invariants(parse_gens(vars, gens, p));
          return py::make_tuple(inv.dim, to_py(inv.degree), to_py(inv.arithmetic_genus));
        },
        py::arg("vars"), py::arg("gens"), py::arg("p"));
  m.def("slice_degree",
        [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
           std::uint64_t p, int dim, std::uint64_t seed) {
          return to_py(slice_degree(parse_gens(vars, gens, p), dim, seed).degree);
        },
        py::arg("vars"), py::arg("gens"), py::arg("p"), py::arg("dim"), py::arg("seed") = 1);
  m.def("builtin_ideal",
        [](const std::string& name, std::uint64_t p, std::uint64_t seed) {
          auto gens = builtin_ideal(name, GF(p), seed);
          py::dict out;
          out["vars"] = gens.empty() ? std::vector<std::string>{} : gens[0].ctx().names();
          std::vector<std::string> gs;
          for (const auto& g : gens) gs.push_back(g.to_string());
          out["gens"] = gs;
          return out;
        },
        py::arg("name"), py::arg("p") = kDefaultPrime, py::arg("seed") = 1);

  m.def("bott_h", [](int n, int d, int i) { return to_py(bott_h(n, d, i)); }, py::arg("n"),
        py::arg("d"), py::arg("i"));
  m.def("complex_cohomology",
        [](const std::string& spec, int t) {
          std::vector<std::pair<py::int_, py::int_>> out;
          for (const auto& h : complex_cohomology(resolve_complex(spec), t))
            out.emplace_back(to_py(h.lo), to_py(h.hi));
          return out;
        },
        py::arg("complex"), py::arg("t") = 0, "list of (lo, hi); forced entries have lo == hi");
  m.def("complex_euler",
        [](const std::string& spec, int t) { return to_py(complex_euler(resolve_complex(spec), t)); },
        py::arg("complex"), py::arg("t") = 0);
  m.def("chern_twist",
        [](long k, long alpha, long n) {
          ChernData c = chern_twist({k, alpha}, n);
          return py::make_tuple(c.k, c.alpha);
        },
        py::arg("k"), py::arg("alpha"), py::arg("n"));
  m.def("euler_char_bundle",
        [](long k, long alpha) { return euler_char_bundle({k, alpha}).chi.get_str(); },
        py::arg("k"), py::arg("alpha"), "chi as an exact rational string");
  m.def("zero_locus_invariants",
        [](long k, long alpha) {
          ZeroLocusInvariants z = zero_locus_invariants({k, alpha});
          return py::make_tuple(to_py(z.degree), z.arithmetic_genus.get_str());
        },
        py::arg("k"), py::arg("alpha"));
  m.def("dimension_audit", [] {
    py::list out;
    for (const auto& e : dimension_audit()) {
      py::dict row;
      row["name"] = e.name;
      row["value"] = to_py(e.value);
      row["expected"] = to_py(e.expected);
      row["ok"] = e.ok();
      row["derivation"] = e.derivation;
      out.append(row);
    }
    return out;
  });

  m.def("run_certificate",
        [](const std::string& name, py::kwargs kwargs) {
          CertificateConfig cfg;
          cfg.name = name;
          for (auto item : kwargs) {
            std::string key = py::cast<std::string>(item.first);
            if (key == "matrix") cfg.matrix = py::cast<std::string>(item.second);
            else if (key == "poly") cfg.poly = py::cast<std::string>(item.second);
            else if (key == "ideal") cfg.ideal = py::cast<std::string>(item.second);
            else if (key == "complex") cfg.complex_spec = py::cast<std::string>(item.second);
            else if (key == "prime") cfg.primes = {py::cast<std::uint64_t>(item.second)};
            else if (key == "seed") cfg.seed = py::cast<std::uint64_t>(item.second);
            else if (key == "tmax") cfg.tmax = py::cast<int>(item.second);
            else if (key == "count") cfg.count = py::cast<int>(item.second);
            else if (key == "dim") cfg.scheme_dim = py::cast<int>(item.second);
            else if (key == "cache_dir") cfg.cache_dir = py::cast<std::string>(item.second);
            else throw Error("unknown option: " + key);
          }
          return run_certificate(cfg).to_json().dump();
        },
        py::arg("name"), "run a named certificate; returns the report as a JSON string");
}
