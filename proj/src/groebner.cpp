#include "pfq/groebner.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "pfq/rng.hpp"

namespace pfq {

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
  std::uint32_t sugar;
};

std::uint32_t poly_sugar(const PolyP& f) {
  int d = f.total_degree();
  return d < 0 ? 0 : static_cast<std::uint32_t>(d);
}

// selection order: sugar, then lcm in the monomial order, then indices
bool pair_less(const Pair& a, const Pair& b, const Order& ord) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = ord.compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

PolyP reduce_full(const PolyP& f, const std::vector<PolyP>& basis) {
  if (f.is_zero()) return f;
  const GF& gf = f.dom();
  PolyP work = f;
  PolyP result = PolyP::zero(f.ctx(), gf, f.order());
  std::vector<typename PolyP::Term> done;
  while (!work.is_zero()) {
    const auto& lt = work.leading();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.leading().m.divides(lt.m)) {
        // basis elements are monic
        work.axpy_sub(lt.c, lt.m.div(g.leading().m), g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      done.push_back(lt);
      work.drop_leading();
    }
  }
  result.set_sorted_terms(std::move(done));
  return result;
}

// Gebauer-Moller update: append h to the basis, pruning the pair set.
void update_pairs(std::vector<PolyP>& basis, std::vector<Pair>& pairs, PolyP h) {
  const Monomial t = h.leading().m;
  const int s = static_cast<int>(basis.size());
  const std::uint32_t sug_h = poly_sugar(h);

  struct Cand {
    int i;
    Monomial lcm;
    bool coprime;
    std::uint32_t sugar;
    bool keep = true;
  };
  std::vector<Cand> cand;
  cand.reserve(basis.size());
  for (int i = 0; i < s; ++i) {
    const Monomial& ti = basis[i].leading().m;
    Monomial l = ti.lcm(t);
    std::uint32_t sug = std::max(poly_sugar(basis[i]) - ti.deg, sug_h - t.deg) + l.deg;
    cand.push_back({i, l, ti.coprime(t), sug});
  }
  // criterion M: drop candidates whose lcm is a proper multiple of another's
  for (auto& a : cand) {
    for (const auto& b : cand) {
      if (&a == &b || !b.keep) continue;
      if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
        a.keep = false;
        break;
      }
    }
  }
  // criterion F: among equal lcms keep one, unless some member is coprime
  // (criterion B kills the whole class)
  for (std::size_t x = 0; x < cand.size(); ++x) {
    if (!cand[x].keep) continue;
    bool coprime_class = cand[x].coprime;
    for (std::size_t y = x + 1; y < cand.size(); ++y) {
      if (!cand[y].keep || cand[y].lcm != cand[x].lcm) continue;
      cand[y].keep = false;
      coprime_class = coprime_class || cand[y].coprime;
    }
    if (coprime_class) cand[x].keep = false;
  }
  // prune old pairs strictly subsumed by the new element
  std::erase_if(pairs, [&](const Pair& pr) {
    if (!t.divides(pr.lcm)) return false;
    Monomial li = basis[pr.i].leading().m.lcm(t);
    Monomial lj = basis[pr.j].leading().m.lcm(t);
    return li != pr.lcm && lj != pr.lcm;
  });
  for (const auto& c : cand)
    if (c.keep) pairs.push_back({c.i, s, c.lcm, c.sugar});
  basis.push_back(std::move(h));
}

nlohmann::ordered_json basis_to_json(const GroebnerBasis& gb, const std::string& key_material) {
  nlohmann::ordered_json j;
  j["key_material"] = key_material;
  j["p"] = gb.field.modulus();
  j["order"] = gb.ord.name();
  j["vars"] = gb.gens.empty() ? std::vector<std::string>{} : gb.gens[0].ctx().names();
  std::vector<std::string> polys;
  for (const auto& g : gb.gens) polys.push_back(g.to_string());
  j["basis"] = polys;
  j["truncated"] = gb.truncated;
  return j;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::string groebner_cache_key(const std::vector<PolyP>& gens, const Order& ord, std::uint64_t p) {
  std::string material = ord.name() + "|p=" + std::to_string(p);
  if (!gens.empty()) {
    material += "|vars=";
    for (const auto& n : gens[0].ctx().names()) material += n + ",";
  }
  for (const auto& g : gens) material += "|" + g.to_string();
  return material;
}

GroebnerBasis buchberger(const std::vector<PolyP>& input, Order ord, const GroebnerOptions& opts) {
  if (input.empty()) throw Error("buchberger: empty generator list");
  const GF gf = input[0].dom();
  const VarContext ctx = input[0].ctx();
  ord.nvars = ctx.size();
  for (const auto& g : input) {
    if (g.ctx() != ctx) throw Error("context mismatch between generators");
    if (g.dom() != gf) throw Error("coefficient field mismatch between generators");
  }

  std::string key_material;
  std::string cache_path;
  if (!opts.cache_dir.empty() && opts.degree_cap == 0) {
    key_material = groebner_cache_key(input, ord, gf.modulus());
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(key_material)));
    cache_path = opts.cache_dir + "/gb_" + hex + ".json";
    std::ifstream in(cache_path);
    if (in) {
      try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("key_material").get<std::string>() == key_material) {
          GroebnerBasis gb{{}, ord, gf, true, j.value("truncated", false)};
          for (const auto& s : j.at("basis"))
            gb.gens.push_back(parse_poly(s.get<std::string>(), ctx, gf, ord));
          return gb;
        }
      } catch (const std::exception&) {
        // unreadable cache entry: fall through and recompute
      }
    }
  }

  std::vector<PolyP> basis;
  std::vector<Pair> pairs;
  bool truncated = false;
  for (const auto& g : input) {
    PolyP h = reduce_full(g.order() == ord ? g : g.with_order(ord), basis);
    if (!h.is_zero()) update_pairs(basis, pairs, h.monic());
  }
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pair_less(pairs[k], pairs[best], ord)) best = k;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (opts.degree_cap > 0 && pr.sugar > static_cast<std::uint32_t>(opts.degree_cap)) {
      truncated = true;
      continue;
    }
    const PolyP& gi = basis[pr.i];
    const PolyP& gj = basis[pr.j];
    PolyP s = gi.times_term(gf.one(), pr.lcm.div(gi.leading().m)) -
              gj.times_term(gf.one(), pr.lcm.div(gj.leading().m));
    PolyP h = reduce_full(s, basis);
    if (!h.is_zero()) update_pairs(basis, pairs, h.monic());
  }

  // minimalize: drop elements whose leading term another element divides
  std::vector<PolyP> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& a = basis[j].leading().m;
      const Monomial& b = basis[i].leading().m;
      if (a.divides(b) && (a != b || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce each survivor against the others
  std::vector<PolyP> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<PolyP> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    PolyP r = reduce_full(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const PolyP& a, const PolyP& b) { return ord.less(a.leading().m, b.leading().m); });

  GroebnerBasis gb{std::move(reduced), ord, gf, true, truncated};

  if (!cache_path.empty() && !truncated) {
    std::error_code ec;
    std::filesystem::create_directories(opts.cache_dir, ec);
    std::string tmp = cache_path + ".tmp";
    {
      std::ofstream out(tmp);
      out << basis_to_json(gb, key_material).dump(1) << "\n";
    }
    std::filesystem::rename(tmp, cache_path, ec);  // atomic publish
  }
  return gb;
}

PolyP normal_form(const PolyP& f, const GroebnerBasis& gb) {
  PolyP g = f.order() == gb.ord ? f : f.with_order(gb.ord);
  if (!gb.gens.empty()) {
    if (g.ctx() != gb.gens[0].ctx()) throw Error("normal_form: context mismatch");
    if (g.dom() != gb.field) throw Error("normal_form: coefficient field mismatch");
  }
  return reduce_full(g, gb.gens);
}

bool is_empty_projective(const std::vector<PolyP>& gens, const GroebnerOptions& opts) {
  if (gens.empty()) throw Error("is_empty_projective: empty generator list");
  int nv = gens[0].ctx().size();
  bool all_zero = true;
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw Error("is_empty_projective: inhomogeneous generator");
    all_zero = all_zero && g.is_zero();
  }
  if (all_zero) return nv == 0;
  std::vector<PolyP> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  GroebnerBasis gb = buchberger(nonzero, Order{OrderKind::kDegrevlex, nv}, opts);
  for (int v = 0; v < nv; ++v) {
    bool pure_power = false;
    for (const auto& g : gb.gens) {
      const Monomial& lt = g.leading().m;
      if (lt.e[v] == lt.deg && lt.deg > 0) {
        pure_power = true;
        break;
      }
    }
    if (!pure_power) return false;
  }
  return true;
}

SmoothnessReport smoothness_certificate(const PolyQ& f, std::uint64_t p, const GroebnerOptions& opts) {
  if (!f.is_homogeneous() || f.is_zero()) throw Error("smoothness: nonzero homogeneous input required");
  const int deg = f.homogeneous_degree();
  if (deg == 0) throw Error("smoothness: constant polynomial has no hypersurface");
  if (p == 2 || static_cast<std::uint64_t>(deg) % p == 0)
    throw Error("bad prime: need p odd with p not dividing deg F = " + std::to_string(deg));
  GF gf(p);
  PolyP fp = reduce_mod(f, gf);
  if (fp.is_zero()) throw Error("bad prime: all coefficients vanish mod " + std::to_string(p));

  const int nv = f.ctx().size();
  std::vector<PolyQ> partials_q;
  std::vector<PolyP> partials_p;
  for (int v = 0; v < nv; ++v) {
    partials_q.push_back(f.differentiate(v));
    partials_p.push_back(fp.differentiate(v));
  }

  SmoothnessReport rep;
  rep.prime = p;
  if (is_empty_projective(partials_p, opts)) {
    rep.verdict = Smoothness::kSmooth;
    return rep;
  }

  // singular over GF(p): hunt for an explicit witness
  auto vanishes_mod_p = [&](const std::vector<std::uint64_t>& pt) {
    for (const auto& g : partials_p)
      if (g.evaluate(pt) != 0) return false;
    return true;
  };
  auto try_lift = [&](const std::vector<std::uint64_t>& pt) -> bool {
    std::vector<Rational> lifted;
    std::vector<Int> lifted_int;
    for (auto v : pt) {
      Int z = (v > p / 2) ? Int(static_cast<long>(v) - static_cast<long>(p))
                          : Int(static_cast<unsigned long>(v));
      lifted.emplace_back(z);
      lifted_int.push_back(z);
    }
    for (const auto& g : partials_q)
      if (sgn(g.evaluate(lifted)) != 0) return false;
    rep.witness = lifted_int;
    return true;
  };

  std::vector<std::vector<std::uint64_t>> candidates;
  if (nv <= 12) {
    // all points with coordinates in {0, 1, -1}, skipping the zero vector
    std::vector<std::uint64_t> vals = {0, 1, p - 1};
    std::vector<int> idx(nv, 0);
    while (true) {
      std::vector<std::uint64_t> pt(nv);
      bool nonzero = false;
      for (int i = 0; i < nv; ++i) {
        pt[i] = vals[idx[i]];
        nonzero = nonzero || pt[i] != 0;
      }
      if (nonzero) candidates.push_back(std::move(pt));
      int carry = nv - 1;
      while (carry >= 0 && ++idx[carry] == 3) idx[carry--] = 0;
      if (carry < 0) break;
    }
  }
  Rng rng(0x5eedull ^ p);
  for (int k = 0; k < 2000; ++k) {
    std::vector<std::uint64_t> pt(nv);
    bool nonzero = false;
    for (int i = 0; i < nv; ++i) {
      pt[i] = rng.uniform(p);
      nonzero = nonzero || pt[i] != 0;
    }
    if (nonzero) candidates.push_back(std::move(pt));
  }

  for (const auto& pt : candidates) {
    if (!vanishes_mod_p(pt)) continue;
    if (try_lift(pt)) {
      rep.verdict = Smoothness::kSingular;
      return rep;
    }
    if (!rep.witness_mod_p) rep.witness_mod_p = pt;
  }
  rep.verdict = Smoothness::kIndeterminate;
  return rep;
}

}  // namespace pfq
