#include "topdeg/blowup.hpp"

#include <algorithm>

namespace topdeg {

uint64_t derive_seed(uint64_t base, uint64_t salt) {
  uint64_t z = base + 0x9e3779b97f4a7c15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

BlowupModel build_blowup_model(RingPtr xring, const std::vector<Polynomial>& forms) {
  BlowupModel m;
  m.xring = xring;
  m.n = xring->nvars() - 1;
  m.forms = forms;
  m.presentation = syzygy_module(xring, forms);
  m.biring = PolyRing::bigraded(xring->field(), m.n);

  // entries of (y0 .. yn) * M
  std::vector<Polynomial> gens;
  for (size_t j = 0; j < m.presentation.cols; ++j) {
    Polynomial acc = Polynomial::zero(m.biring);
    for (size_t i = 0; i <= m.n; ++i) {
      Polynomial yi = Polynomial::variable(m.biring, m.n + 1 + i);
      acc = acc + yi * m.biring->lift(m.presentation.at(i, j));
    }
    if (!acc.is_homogeneous()) fail(Errc::internal_error, "symmetric ideal generator not bihomogeneous");
    gens.push_back(std::move(acc));
  }
  m.symmetric_ideal = Ideal(m.biring, std::move(gens));

  std::vector<Polynomial> pulled;
  for (const Polynomial& f : forms) pulled.push_back(m.biring->lift(f));
  Ideal base_pullback(m.biring, std::move(pulled));
  m.rees_ideal = saturate(m.symmetric_ideal, base_pullback);
  m.linear_type = ideal_equal(m.rees_ideal, m.symmetric_ideal);
  if (m.linear_type) {
    m.torsion_ideal = Ideal(m.biring, {Polynomial::constant(m.biring, m.biring->field()->one())});
  } else {
    m.torsion_ideal = saturate(m.symmetric_ideal, m.rees_ideal);
  }
  return m;
}

Ideal pullback_to_biring(const BlowupModel& model, const Ideal& I) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens()) gens.push_back(model.biring->lift(g));
  return Ideal(model.biring, std::move(gens));
}

long long bigraded_length(const Ideal& I) {
  const RingPtr& ring = I.ring();
  if (!ring->is_bigraded()) fail(Errc::internal_error, "bigraded_length needs a bigraded ring");
  auto gb = I.groebner();
  std::vector<Monomial> lt;
  for (const ModVec& e : gb->elems) lt.push_back(e.front().m);
  HilbertData h = hilbert_series(ring, std::move(lt));
  int32_t maxdeg = 4;
  for (const Polynomial& g : I.gens()) {
    Deg d = g.degree();
    maxdeg = std::max(maxdeg, 4 * (d.a + d.b));
  }
  long long v = h.hilbert_function(maxdeg, maxdeg);
  bool stable = v == h.hilbert_function(maxdeg + 1, maxdeg) &&
                v == h.hilbert_function(maxdeg, maxdeg + 1) &&
                v == h.hilbert_function(maxdeg + 1, maxdeg + 1) &&
                v == h.hilbert_function(maxdeg + 2, maxdeg + 2);
  if (!stable)
    fail(Errc::not_zero_dimensional, "bigraded Hilbert function does not stabilize at the degree bound");
  return v;
}

long long sliced_length(const BlowupModel& model, const Ideal& I, uint64_t seed) {
  const FieldCtx& F = *model.biring->field();
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> gens = I.gens();
  for (size_t j = 0; j < model.n; ++j) {
    std::vector<Term> ts;
    for (size_t i = 0; i <= model.n; ++i) {
      ts.push_back({F.random_element(rng), mono_var(model.n + 1 + i)});
    }
    Polynomial form(model.biring, std::move(ts));
    if (form.is_zero()) fail(Errc::not_zero_dimensional, "degenerate slicing form");
    gens.push_back(std::move(form));
  }
  Ideal sliced(model.biring, std::move(gens));
  Ideal sat_x = saturate(sliced, block_irrelevant_ideal(model.biring, 0));
  if (sat_x.contains_unit()) return 0;
  Ideal sat_xy = saturate(sat_x, block_irrelevant_ideal(model.biring, 1));
  if (sat_xy.contains_unit()) return 0;
  return bigraded_length(sat_xy);
}

BlowupModel extend_model(const BlowupModel& model, uint32_t new_ext) {
  FieldPtr small = model.xring->field();
  FieldPtr big = FieldCtx::make(small->characteristic(), new_ext);
  FieldEmbedding emb = FieldEmbedding::find(small, big);
  RingPtr xbig = PolyRing::projective(big, model.n);
  std::vector<Polynomial> forms;
  for (const Polynomial& f : model.forms)
    forms.push_back(PolyRing::map_coefficients(f, emb, xbig));
  return build_blowup_model(xbig, forms);
}

namespace {

// two-seed agreement with field escalation; fn(model, seed) returns a value
// or throws NotZeroDimensional on a degenerate draw
template <typename Fn>
long long with_protocol(const BlowupModel& model_in, uint64_t seed, Fn&& fn,
                        std::vector<uint64_t>* seeds_used, uint32_t* ext_used,
                        const BlowupModel** final_model, std::optional<BlowupModel>& storage) {
  const BlowupModel* model = &model_in;
  for (int level = 0; level < 4; ++level) {
    uint64_t s1 = level == 0 ? seed : derive_seed(seed, 2 * level);
    uint64_t s2 = derive_seed(seed, 2 * level + 1);
    std::optional<long long> v1, v2;
    try {
      v1 = fn(*model, s1);
    } catch (const AlgebraError& e) {
      if (e.code() != Errc::not_zero_dimensional) throw;
    }
    try {
      v2 = fn(*model, s2);
    } catch (const AlgebraError& e) {
      if (e.code() != Errc::not_zero_dimensional) throw;
    }
    if (seeds_used) {
      seeds_used->push_back(s1);
      seeds_used->push_back(s2);
    }
    if (v1 && v2 && *v1 == *v2) {
      if (ext_used) *ext_used = model->xring->field()->ext_degree();
      if (final_model) *final_model = model;
      return *v1;
    }
    if (level < 3) {
      storage = extend_model(*model, model->xring->field()->ext_degree() * 2);
      model = &*storage;
    }
  }
  fail(Errc::genericity_failure, "seeded draws disagree after three field escalations");
}

}  // namespace

bool is_linear_type(const BlowupModel& model) { return model.linear_type; }

Ideal lci_defect(RingPtr xring, const std::vector<Polynomial>& forms) {
  PresentationMatrix M = syzygy_module(xring, forms);
  size_t n = xring->nvars() - 1;
  Ideal fit = fitting_ideal(M, static_cast<int>(n));
  if (fit.is_zero()) return fit;
  if (fit.contains_unit()) return fit;
  return saturate(fit, irrelevant_ideal(xring));
}

TorsionReport torsion_degree(const BlowupModel& model, uint64_t seed) {
  TorsionReport rep;
  rep.ext_used = model.xring->field()->ext_degree();
  if (model.linear_type) {
    rep.per_point_valid = true;
    return rep;
  }
  std::optional<BlowupModel> storage;
  const BlowupModel* final_model = &model;
  rep.degree = with_protocol(
      model, seed,
      [](const BlowupModel& m, uint64_t s) { return sliced_length(m, m.torsion_ideal, s); },
      &rep.seeds, &rep.ext_used, &final_model, storage);

  // per-point degrees over the rational support of V(Fitt_n I)
  Ideal defect = lci_defect(final_model->xring, final_model->forms);
  if (final_model->xring->field()->order() <= (1ull << 20) && !defect.contains_unit()) {
    rep.support = rational_points(defect);
    rep.per_point_valid = true;
    long long sum = 0;
    for (size_t i = 0; i < rep.support.size(); ++i) {
      Ideal isolated = final_model->torsion_ideal;
      for (size_t j = 0; j < rep.support.size(); ++j) {
        if (j == i) continue;
        Ideal mz = point_ideal(final_model->xring, rep.support[j]);
        isolated = saturate(isolated, pullback_to_biring(*final_model, mz));
      }
      long long dz = isolated.contains_unit()
                         ? 0
                         : sliced_length(*final_model, isolated, rep.seeds.empty() ? seed : rep.seeds.back());
      rep.point_degree.push_back(dz);
      sum += dz;
    }
    if (sum != rep.degree) rep.per_point_valid = false;
  }
  return rep;
}

long long naive_degree_first(const BlowupModel& model, uint64_t seed, std::vector<uint64_t>* seeds_used,
                             uint32_t* ext_used) {
  std::optional<BlowupModel> storage;
  return with_protocol(
      model, seed,
      [](const BlowupModel& m, uint64_t s) { return sliced_length(m, m.symmetric_ideal, s); },
      seeds_used, ext_used, nullptr, storage);
}

}  // namespace topdeg
