#include "topdeg/invariants.hpp"

#include <algorithm>

namespace topdeg {

namespace {

// rank of the coefficient matrix of the forms over the field
size_t span_dimension(const std::vector<Polynomial>& forms) {
  if (forms.empty()) return 0;
  const FieldCtx& F = *forms[0].ring()->field();
  std::vector<std::pair<Monomial, size_t>> columns;
  auto col_of = [&](const Monomial& m) {
    for (auto& [mm, idx] : columns)
      if (mm == m) return idx;
    columns.push_back({m, columns.size()});
    return columns.size() - 1;
  };
  std::vector<std::vector<FieldElement>> rows;
  for (const Polynomial& f : forms) {
    std::vector<FieldElement> row;
    for (const Term& t : f.terms()) {
      size_t c = col_of(t.m);
      if (row.size() <= c) row.resize(c + 1, F.zero());
      row[c] = t.c;
    }
    rows.push_back(std::move(row));
  }
  size_t ncols = columns.size();
  for (auto& r : rows) r.resize(ncols, F.zero());
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t piv = SIZE_MAX;
    for (size_t r = rank; r < rows.size(); ++r)
      if (!F.is_zero(rows[r][col])) {
        piv = r;
        break;
      }
    if (piv == SIZE_MAX) continue;
    std::swap(rows[rank], rows[piv]);
    FieldElement il = F.inv(rows[rank][col]);
    for (size_t c = col; c < ncols; ++c) rows[rank][c] = F.mul(rows[rank][c], il);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || F.is_zero(rows[r][col])) continue;
      FieldElement f = rows[r][col];
      for (size_t c = col; c < ncols; ++c) rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

Polynomial forms_gcd(const std::vector<Polynomial>& forms) {
  Polynomial g = Polynomial::zero(forms[0].ring());
  for (const Polynomial& f : forms) g = poly_gcd(g, f);
  return g;
}

// n seeded combinations of the forms: the preimage ideal of a random point
Ideal generic_fiber_ideal(const RationalMap& map, uint64_t seed) {
  const FieldCtx& F = *map.ring->field();
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> combos;
  for (size_t j = 0; j < map.n; ++j) {
    Polynomial acc = Polynomial::zero(map.ring);
    for (size_t i = 0; i <= map.n; ++i) acc = acc + scale(map.forms[i], F.random_element(rng));
    combos.push_back(std::move(acc));
  }
  return Ideal(map.ring, std::move(combos));
}

// two-seed agreement with field escalation at the map level
template <typename Fn>
long long map_protocol(const RationalMap& map_in, uint64_t seed, Fn&& fn,
                       std::vector<uint64_t>* seeds_used, uint32_t* ext_used,
                       uint64_t* accepted_seed, std::optional<RationalMap>& storage,
                       const RationalMap** final_map) {
  const RationalMap* map = &map_in;
  for (int level = 0; level < 4; ++level) {
    uint64_t s1 = level == 0 ? seed : derive_seed(seed, 100 + 2 * level);
    uint64_t s2 = derive_seed(seed, 101 + 2 * level);
    std::optional<long long> v1, v2;
    try {
      v1 = fn(*map, s1);
    } catch (const AlgebraError& e) {
      if (e.code() != Errc::not_zero_dimensional) throw;
    }
    try {
      v2 = fn(*map, s2);
    } catch (const AlgebraError& e) {
      if (e.code() != Errc::not_zero_dimensional) throw;
    }
    if (seeds_used) {
      seeds_used->push_back(s1);
      seeds_used->push_back(s2);
    }
    if (v1 && v2 && *v1 == *v2) {
      if (ext_used) *ext_used = map->ring->field()->ext_degree();
      if (accepted_seed) *accepted_seed = s1;
      if (final_map) *final_map = map;
      return *v1;
    }
    if (level < 3) {
      storage = extend_map(*map, map->ring->field()->ext_degree() * 2);
      map = &*storage;
    }
  }
  fail(Errc::genericity_failure, "seeded draws disagree after three field escalations");
}

long long delta_power(const RationalMap& map) {
  long long v = 1;
  for (size_t i = 0; i < map.n; ++i) v *= map.delta;
  return v;
}

// single-draw fiber degree: deg(sat(J, I)); requires the draw to cut a
// zero-dimensional complete intersection
long long fiber_degree_once(const RationalMap& map, uint64_t seed) {
  Ideal J = generic_fiber_ideal(map, seed);
  if (projective_degree(J) != delta_power(map))
    fail(Errc::not_zero_dimensional, "degenerate combination draw");
  Ideal fiber = saturate(J, map.base);
  if (fiber.contains_unit()) return 0;  // nothing outside the base locus
  return projective_degree(fiber);
}

}  // namespace

RationalMap map_from_forms(RingPtr ring, std::vector<Polynomial> forms) {
  if (forms.size() != ring->nvars())
    fail(Errc::usage_error, "a map of P^n needs exactly n+1 forms");
  if (forms.size() < 2) fail(Errc::usage_error, "ambient dimension must be at least 1");
  for (const Polynomial& f : forms) {
    if (f.is_zero()) fail(Errc::degenerate_linear_system, "a defining form is zero");
    if (!f.is_homogeneous()) fail(Errc::not_homogeneous, "defining forms must be homogeneous");
  }
  Deg d0 = forms[0].degree();
  for (const Polynomial& f : forms) {
    if (!(f.degree() == d0)) fail(Errc::usage_error, "defining forms must have equal degree");
  }
  RationalMap m;
  m.ring = ring;
  m.n = ring->nvars() - 1;
  Polynomial g = forms_gcd(forms);
  if (!g.is_unit()) {
    for (Polynomial& f : forms) f = exact_divide(f, g);
  }
  m.stripped_divisor = g.is_unit() ? Polynomial::constant(ring, ring->field()->one()) : g;
  if (span_dimension(forms) != forms.size())
    fail(Errc::degenerate_linear_system, "defining forms span fewer than n+1 dimensions");
  m.delta = static_cast<uint32_t>(forms[0].degree().a);
  if (m.delta == 0) fail(Errc::degenerate_linear_system, "constant defining forms");
  m.base = Ideal(ring, forms);
  m.forms = std::move(forms);
  return m;
}

RationalMap polar_map(const Polynomial& f, bool allow_char_divides_degree) {
  RingPtr ring = f.ring();
  if (!f.is_homogeneous()) fail(Errc::not_homogeneous, "polar map needs a homogeneous polynomial");
  int32_t d = f.degree().a;
  if (d < 2) fail(Errc::usage_error, "polar map needs degree at least 2");
  bool p_divides = (static_cast<uint32_t>(d) % ring->field()->characteristic()) == 0;
  if (p_divides && !allow_char_divides_degree)
    fail(Errc::characteristic_divides_degree,
         "characteristic divides deg f; pass the warn-and-proceed flag to continue");
  std::vector<Polynomial> parts;
  for (size_t v = 0; v < ring->nvars(); ++v) parts.push_back(differentiate(f, v));
  bool all_zero = true;
  for (const Polynomial& p : parts) all_zero &= p.is_zero();
  if (all_zero) fail(Errc::degenerate_linear_system, "all partial derivatives vanish");
  RationalMap m = map_from_forms(ring, std::move(parts));
  m.source_poly = f;
  m.source_degree = static_cast<uint32_t>(d);
  m.char_divides_degree = p_divides;
  return m;
}

RationalMap extend_map(const RationalMap& map, uint32_t new_ext) {
  FieldPtr small = map.ring->field();
  FieldPtr big = FieldCtx::make(small->characteristic(), new_ext);
  FieldEmbedding emb = FieldEmbedding::find(small, big);
  RingPtr rbig = PolyRing::projective(big, map.n);
  RationalMap m;
  m.ring = rbig;
  m.n = map.n;
  m.delta = map.delta;
  for (const Polynomial& f : map.forms) m.forms.push_back(PolyRing::map_coefficients(f, emb, rbig));
  m.stripped_divisor = PolyRing::map_coefficients(map.stripped_divisor, emb, rbig);
  if (map.source_poly) m.source_poly = PolyRing::map_coefficients(*map.source_poly, emb, rbig);
  m.source_degree = map.source_degree;
  m.char_divides_degree = map.char_divides_degree;
  m.base = Ideal(rbig, m.forms);
  return m;
}

void require_finite_base_locus(const RationalMap& map) {
  Ideal sat = saturate(map.base, irrelevant_ideal(map.ring));
  if (sat.contains_unit()) return;  // empty base locus
  auto gb = sat.groebner();
  std::vector<Monomial> lt;
  for (const ModVec& e : gb->elems) lt.push_back(e.front().m);
  HilbertData h = hilbert_series(map.ring, std::move(lt));
  if (h.krull_dim() > 1)
    fail(Errc::positive_dimensional_base_locus, "base locus has positive dimension");
}

bool is_dominant(const RationalMap& map, uint64_t seed) {
  require_finite_base_locus(map);
  std::optional<RationalMap> storage;
  long long fib = map_protocol(
      map, seed, [](const RationalMap& m, uint64_t s) { return fiber_degree_once(m, s); }, nullptr,
      nullptr, nullptr, storage, nullptr);
  return fib > 0;
}

long long topological_degree(const RationalMap& map, uint64_t seed) {
  require_finite_base_locus(map);
  std::optional<RationalMap> storage;
  long long fib = map_protocol(
      map, seed, [](const RationalMap& m, uint64_t s) { return fiber_degree_once(m, s); }, nullptr,
      nullptr, nullptr, storage, nullptr);
  if (fib == 0) fail(Errc::not_dominant, "the map is not dominant");
  return fib;
}

long long tjurina(const RationalMap& map) {
  require_finite_base_locus(map);
  return projective_degree(map.base);
}

long long tjurina_local(const RationalMap& map, const PointP& z) {
  require_finite_base_locus(map);
  return local_length(map.base, z);
}

long long milnor(const RationalMap& map, uint64_t seed) {
  return delta_power(map) - topological_degree(map, seed);
}

long long milnor_local(const RationalMap& map, const PointP& z, uint64_t seed) {
  require_finite_base_locus(map);
  std::optional<RationalMap> storage;
  uint64_t accepted = seed;
  const RationalMap* final_map = &map;
  long long fib = map_protocol(
      map, seed, [](const RationalMap& m, uint64_t s) { return fiber_degree_once(m, s); }, nullptr,
      nullptr, &accepted, storage, &final_map);
  if (fib == 0) fail(Errc::not_dominant, "the map is not dominant");
  Ideal J = generic_fiber_ideal(*final_map, accepted);
  PointP zz = z;
  if (final_map != &map) {
    FieldEmbedding emb = FieldEmbedding::find(map.ring->field(), final_map->ring->field());
    std::vector<FieldElement> cs;
    for (const FieldElement& c : z.coords) cs.push_back(emb.map(c));
    zz = PointP::make(*final_map->ring->field(), std::move(cs));
  }
  return local_length(J, zz);
}

ClassicalLocal classical_local_invariants(const Polynomial& f, const PointP& z) {
  RingPtr ring = f.ring();
  const FieldCtx& F = *ring->field();
  if (!f.is_homogeneous()) fail(Errc::not_homogeneous, "classical invariants need a homogeneous curve");
  uint32_t d = static_cast<uint32_t>(f.degree().a);
  if (d % F.characteristic() == 0)
    fail(Errc::characteristic_divides_degree, "classical invariants need p not dividing deg f");
  std::vector<Polynomial> parts;
  for (size_t v = 0; v < ring->nvars(); ++v) parts.push_back(differentiate(f, v));
  // square-free gate: gcd(f, f_0, ..., f_n) constant
  Polynomial g = f;
  for (const Polynomial& p : parts) g = poly_gcd(g, p);
  if (!g.is_unit()) fail(Errc::not_square_free, "curve is not square-free");
  for (const Polynomial& p : parts) {
    if (!F.is_zero(evaluate(p, z.coords)))
      fail(Errc::point_not_on_singular_locus, "point is not on the singular locus");
  }

  size_t chart = 0;
  while (chart < z.coords.size() && F.is_zero(z.coords[chart])) ++chart;

  // dehomogenize, translate z to the origin, then re-homogenize each
  // generator with the chart variable and measure at the chart origin
  auto localize = [&](std::vector<Polynomial> gens) {
    std::vector<Polynomial> out;
    for (Polynomial p : gens) {
      p = dehomogenize(p, chart);
      for (size_t v = 0; v < ring->nvars(); ++v) {
        if (v == chart || F.is_zero(z.coords[v])) continue;
        Polynomial shift = Polynomial::variable(ring, v) +
                           Polynomial::constant(ring, z.coords[v]);
        p = substitute_var(p, v, shift);
      }
      if (!p.is_zero()) out.push_back(homogenize(p, chart));
    }
    Ideal I(ring, std::move(out));
    Ideal affine = saturate(I, Ideal(ring, {Polynomial::variable(ring, chart)}));
    std::vector<FieldElement> origin(ring->nvars(), F.zero());
    origin[chart] = F.one();
    return local_length(affine, PointP::make(F, origin));
  };

  ClassicalLocal out;
  std::vector<Polynomial> mu_gens;
  for (size_t v = 0; v < ring->nvars(); ++v) {
    if (v != chart) mu_gens.push_back(parts[v]);
  }
  std::vector<Polynomial> tau_gens = mu_gens;
  tau_gens.push_back(f);
  out.milnor = localize(mu_gens);
  out.tjurina = localize(tau_gens);
  return out;
}

std::pair<long long, long long> naive_degrees(const RationalMap& map, uint64_t seed) {
  require_finite_base_locus(map);
  long long second = delta_power(map) - tjurina(map);
  BlowupModel model = build_blowup_model(map.ring, map.forms);
  long long first = naive_degree_first(model, derive_seed(seed, 7), nullptr, nullptr);
  return {first, second};
}

std::pair<long long, long long> chern_classes(const RationalMap& map) {
  if (map.n != 2) fail(Errc::unsupported_dimension, "Chern classes are computed for n = 2 only");
  long long c1 = -static_cast<long long>(map.delta);
  long long c2 = static_cast<long long>(map.delta) * map.delta - tjurina(map);
  return {c1, c2};
}

std::string Classification::to_string() const {
  auto list = [](const std::vector<int32_t>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  };
  switch (kind) {
    case Kind::free_bundle: return "Free" + list(exponents);
    case Kind::nearly_free: return "NearlyFree" + list(exponents);
    case Kind::other: return "Other{gens " + list(gen_twists) + ", rels " + list(rel_twists) + "}";
  }
  return "?";
}

Classification classify_relation_bundle(const RationalMap& map) {
  if (map.n != 2) fail(Errc::unsupported_dimension, "classification is computed for n = 2 only");
  require_finite_base_locus(map);
  std::vector<ModVec> cols;
  for (const Polynomial& f : map.forms) cols.push_back(poly_to_vec(f));
  PresentationMatrix raw = syzygy_raw(map.ring, cols, 1, {Deg{}});
  GradedResolution res = resolve_matrix(std::move(raw), 3);
  const PresentationMatrix& gens = res.steps[0];

  Classification c;
  for (size_t j = 0; j < gens.cols; ++j)
    c.gen_twists.push_back(gens.col_deg[j].a - static_cast<int32_t>(map.delta));
  std::sort(c.gen_twists.begin(), c.gen_twists.end());
  if (res.steps.size() > 1) {
    const PresentationMatrix& rels = res.steps[1];
    for (size_t j = 0; j < rels.cols; ++j)
      c.rel_twists.push_back(rels.col_deg[j].a - static_cast<int32_t>(map.delta));
    std::sort(c.rel_twists.begin(), c.rel_twists.end());
  }

  if (c.gen_twists.size() == 2 && c.rel_twists.empty()) {
    c.kind = Classification::Kind::free_bundle;
    c.exponents = c.gen_twists;
  } else if (c.gen_twists.size() == 3 && c.rel_twists.size() == 1) {
    // nearly free: twists (d1, d2, d2) with the single relation in degree d2+1
    int32_t single = 0, doubled = 0;
    bool shaped = false;
    if (c.gen_twists[1] == c.gen_twists[2]) {
      single = c.gen_twists[0];
      doubled = c.gen_twists[2];
      shaped = true;
    } else if (c.gen_twists[0] == c.gen_twists[1]) {
      single = c.gen_twists[2];
      doubled = c.gen_twists[0];
      shaped = true;
    }
    if (shaped && c.rel_twists[0] == doubled + 1) {
      c.kind = Classification::Kind::nearly_free;
      c.exponents = {single, doubled};
    } else {
      c.kind = Classification::Kind::other;
    }
  } else {
    c.kind = Classification::Kind::other;
  }

  // numeric cross-checks from the du Plessis-Wall style theorem
  auto [c1, c2] = chern_classes(map);
  bool equality = (-c1 == c2 + 1);
  bool is_free_1 = c.kind == Classification::Kind::free_bundle && c.exponents[0] == 1;
  if (equality != is_free_1)
    fail(Errc::consistency_violation, "free(1,c2) classification disagrees with -c1 = c2+1");
  if (c1 <= -5) {
    bool nf_eq = (-c1 == c2);
    bool is_nf_1 = c.kind == Classification::Kind::nearly_free && c.exponents[0] == 1;
    if (nf_eq != is_nf_1)
      fail(Errc::consistency_violation, "nearly-free classification disagrees with -c1 = c2");
  }
  return c;
}

bool is_homaloidal(const RationalMap& map, uint64_t seed) {
  return topological_degree(map, seed) == 1;
}

bool verify_inverse(const RationalMap& map, const std::vector<Polynomial>& candidate) {
  if (candidate.size() != map.n + 1) return false;
  for (const Polynomial& f : candidate) {
    if (f.is_zero() || !f.is_homogeneous()) return false;
  }
  Deg d0 = candidate[0].degree();
  for (const Polynomial& f : candidate)
    if (!(f.degree() == d0)) return false;

  auto proportional_to_identity = [&](const std::vector<Polynomial>& comp) {
    bool any = false;
    for (const Polynomial& c : comp) any |= !c.is_zero();
    if (!any) return false;
    // [comp_i ; x_i] has rank 1: all two-by-two minors vanish
    for (size_t i = 0; i <= map.n; ++i) {
      Polynomial xi = Polynomial::variable(map.ring, i);
      for (size_t j = i + 1; j <= map.n; ++j) {
        Polynomial xj = Polynomial::variable(map.ring, j);
        if (!(comp[i] * xj - comp[j] * xi).is_zero()) return false;
      }
    }
    return true;
  };

  std::vector<Polynomial> cand_after_map;
  for (const Polynomial& c : candidate) cand_after_map.push_back(compose(c, map.forms));
  if (!proportional_to_identity(cand_after_map)) return false;
  std::vector<Polynomial> map_after_cand;
  for (const Polynomial& f : map.forms) map_after_cand.push_back(compose(f, candidate));
  return proportional_to_identity(map_after_cand);
}

InvariantReport full_report(const RationalMap& map, uint64_t seed) {
  require_finite_base_locus(map);
  InvariantReport rep;
  rep.characteristic = map.ring->field()->characteristic();
  rep.ext = map.ring->field()->ext_degree();
  rep.n = static_cast<uint32_t>(map.n);
  rep.delta = map.delta;
  rep.stripped_divisor = map.stripped_divisor.to_string();
  rep.tau = tjurina(map);

  // d_t and mu from one accepted draw
  std::optional<RationalMap> storage;
  uint64_t accepted_seed = seed;
  const RationalMap* final_map = &map;
  rep.dt = map_protocol(
      map, seed, [](const RationalMap& m, uint64_t s) { return fiber_degree_once(m, s); },
      &rep.seeds, &rep.ext, &accepted_seed, storage, &final_map);
  if (rep.dt == 0) fail(Errc::not_dominant, "the map is not dominant");
  rep.mu = delta_power(map) - rep.dt;

  // blowup data at the level the degree computation settled on
  BlowupModel model = build_blowup_model(final_map->ring, final_map->forms);
  TorsionReport torsion = torsion_degree(model, derive_seed(seed, 3));
  rep.torsion_deg = torsion.degree;
  for (uint64_t s : torsion.seeds) rep.seeds.push_back(s);
  rep.ext = std::max(rep.ext, torsion.ext_used);

  uint32_t naive_ext = 1;
  rep.naive_first = naive_degree_first(model, derive_seed(seed, 7), &rep.seeds, &naive_ext);
  rep.ext = std::max(rep.ext, naive_ext);
  rep.naive_second = delta_power(map) - rep.tau;

  if (map.n == 2) {
    auto [c1, c2] = chern_classes(map);
    rep.c1 = static_cast<int32_t>(c1);
    rep.c2 = static_cast<int32_t>(c2);
    rep.classification = classify_relation_bundle(map);
  }
  rep.homaloidal = rep.dt == 1;

  // local table over the rational points of the base scheme
  if (map.ring->field()->order() <= (1ull << 20)) {
    Ideal sat = saturate(final_map->base, irrelevant_ideal(final_map->ring));
    if (!sat.contains_unit()) {
      Ideal J = generic_fiber_ideal(*final_map, accepted_seed);
      std::map<std::string, long long> torsion_at;
      bool same_field_level = torsion.ext_used == final_map->ring->field()->ext_degree();
      for (size_t i = 0; i < torsion.support.size() && same_field_level; ++i) {
        if (torsion.per_point_valid)
          torsion_at[torsion.support[i].to_string(*final_map->ring->field())] = torsion.point_degree[i];
      }
      for (const PointP& z : rational_points(sat)) {
        LocalRow row;
        row.z = z;
        row.tau = local_length(final_map->base, z);
        row.mu = local_length(J, z);
        auto it = torsion_at.find(z.to_string(*final_map->ring->field()));
        row.torsion = it == torsion_at.end() ? 0 : it->second;
        rep.local_table.push_back(std::move(row));
      }
    }
  }

  // cross-identities: the artifact's core self-check
  long long dn = delta_power(map);
  auto check = [&](bool ok, const char* what) {
    if (!ok) fail(Errc::consistency_violation, what);
  };
  check(rep.naive_second == dn - rep.tau, "second naive degree must be delta^n - tau");
  check(rep.dt == dn - rep.mu, "d_t must be delta^n - mu");
  check(rep.naive_first == rep.naive_second, "the two naive degrees must agree");
  check(rep.naive_first == rep.dt + rep.torsion_deg, "naive degree must be d_t + deg T");
  check(rep.mu - rep.tau == rep.torsion_deg, "mu - tau must equal deg T");
  if (torsion.per_point_valid && torsion.ext_used == final_map->ring->field()->ext_degree()) {
    for (const LocalRow& row : rep.local_table)
      check(row.mu - row.tau == row.torsion, "local mu - tau must equal the local torsion degree");
  }
  return rep;
}

}  // namespace topdeg
