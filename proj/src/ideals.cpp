#include "topdeg/ideals.hpp"

#include <algorithm>

namespace topdeg {

PointP PointP::make(const FieldCtx& F, std::vector<FieldElement> coords) {
  size_t pivot = SIZE_MAX;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!F.is_zero(coords[i])) {
      pivot = i;
      break;
    }
  }
  if (pivot == SIZE_MAX) fail(Errc::usage_error, "projective point needs a nonzero coordinate");
  FieldElement il = F.inv(coords[pivot]);
  for (auto& c : coords) c = F.mul(c, il);
  PointP z;
  z.coords = std::move(coords);
  return z;
}

std::string PointP::to_string(const FieldCtx& F) const {
  std::string s = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ":";
    s += F.to_string(coords[i]);
  }
  return s + ")";
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_homogeneous() const {
  for (const Polynomial& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner() const { return groebner(ring_->default_order()); }

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const MonomialOrder& ord) const {
  std::string key = ord.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->by_order.find(key);
    if (it != cache_->by_order.end()) return it->second;
  }
  auto gb = std::make_shared<GroebnerBasis>(buchberger(ring_, gens_, ord));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->by_order[key] = gb;
  return gb;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (gens_.empty()) return false;
  return normal_form(f, *groebner()).is_zero();
}

bool Ideal::contains_unit() const {
  if (gens_.empty()) return false;
  return groebner()->contains_unit();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens = a.gens();
  for (const Polynomial& g : b.gens()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens())
    for (const Polynomial& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_zero() || b.is_zero()) {
    const Ideal& nz = a.is_zero() ? b : a;
    return nz.groebner()->elems.empty();
  }
  auto ga = a.groebner();
  auto gb = b.groebner();
  if (ga->elems.size() != gb->elems.size()) return false;
  for (size_t i = 0; i < ga->elems.size(); ++i) {
    const ModVec& x = ga->elems[i];
    const ModVec& y = gb->elems[i];
    if (x.size() != y.size()) return false;
    for (size_t t = 0; t < x.size(); ++t) {
      if (!(x[t].m == y[t].m) || x[t].c != y[t].c) return false;
    }
  }
  return true;
}

namespace {

// lift the generators of I into ring_big (a tag extension of I's ring)
std::vector<Polynomial> lift_all(const RingPtr& big, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const Polynomial& g : gens) out.push_back(big->lift(g));
  return out;
}

// generators of I ∩ (g) via elimination of a tag variable from t*I + (1-t)*(g)
std::vector<Polynomial> intersect_principal(const Ideal& I, const Polynomial& g) {
  RingPtr base = I.ring();
  RingPtr big = base->with_tag("t#");
  size_t tvar = big->nvars() - 1;
  Polynomial t = Polynomial::variable(big, tvar);
  Polynomial one = Polynomial::constant(big, big->field()->one());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.gens()) gens.push_back(t * big->lift(f));
  gens.push_back((one - t) * big->lift(g));
  Ideal big_ideal(big, std::move(gens));
  Ideal elim = eliminate(big_ideal, {tvar});
  std::vector<Polynomial> out;
  for (const Polynomial& h : elim.gens()) out.push_back(base->restrict_from(h));
  return out;
}

}  // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (a.is_zero() || b.is_zero()) return Ideal(a.ring(), {});
  RingPtr base = a.ring();
  RingPtr big = base->with_tag("t#");
  size_t tvar = big->nvars() - 1;
  Polynomial t = Polynomial::variable(big, tvar);
  Polynomial one = Polynomial::constant(big, big->field()->one());
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.gens()) gens.push_back(t * big->lift(f));
  for (const Polynomial& g : b.gens()) gens.push_back((one - t) * big->lift(g));
  Ideal big_ideal(big, std::move(gens));
  Ideal elim = eliminate(big_ideal, {tvar});
  std::vector<Polynomial> out;
  for (const Polynomial& h : elim.gens()) out.push_back(base->restrict_from(h));
  return Ideal(base, std::move(out));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) fail(Errc::usage_error, "quotient by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const Polynomial& g : J.gens()) {
    // (I : g) = (I ∩ (g)) / g
    std::vector<Polynomial> inter = intersect_principal(I, g);
    std::vector<Polynomial> quot;
    quot.reserve(inter.size());
    for (const Polynomial& h : inter) quot.push_back(exact_divide(h, g));
    Ideal qi(I.ring(), std::move(quot));
    if (first) {
      acc = qi;
      first = false;
    } else {
      acc = ideal_intersect(acc, qi);
    }
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (int round = 0; round < 64; ++round) {
    Ideal next = ideal_quotient(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
  fail(Errc::no_stabilization, "saturation did not stabilize within 64 rounds");
}

Ideal eliminate(const Ideal& I, const std::vector<size_t>& drop) {
  if (drop.empty()) return I;
  std::vector<uint8_t> first;
  for (size_t v : drop) first.push_back(static_cast<uint8_t>(v));
  MonomialOrder ord = MonomialOrder::elimination(I.ring()->nvars(), first);
  auto gb = I.groebner(ord);
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb->polys()) {
    bool uses_dropped = false;
    for (size_t v : drop) {
      if (g.involves(v)) {
        uses_dropped = true;
        break;
      }
    }
    if (!uses_dropped) kept.push_back(g);
  }
  return Ideal(I.ring(), std::move(kept));
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < ring->graded_vars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal block_irrelevant_ideal(const RingPtr& ring, int block) {
  if (!ring->is_bigraded()) fail(Errc::internal_error, "block irrelevant ideal needs a bigraded ring");
  size_t b1 = ring->block1_size();
  std::vector<Polynomial> gens;
  size_t lo = block == 0 ? 0 : b1;
  size_t hi = block == 0 ? b1 : ring->graded_vars();
  for (size_t i = lo; i < hi; ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal point_ideal(const RingPtr& ring, const PointP& z) {
  const FieldCtx& F = *ring->field();
  size_t n1 = z.coords.size();
  if (n1 != ring->graded_vars()) fail(Errc::usage_error, "point has the wrong number of coordinates");
  size_t pivot = 0;
  while (pivot < n1 && F.is_zero(z.coords[pivot])) ++pivot;
  std::vector<Polynomial> gens;
  for (size_t i = 0; i < n1; ++i) {
    if (i == pivot) continue;
    // z_pivot * x_i - z_i * x_pivot, with z_pivot = 1 in canonical form
    Polynomial xi = Polynomial::variable(ring, i);
    Polynomial xp = Polynomial::variable(ring, pivot);
    gens.push_back(scale(xi, z.coords[pivot]) - scale(xp, z.coords[i]));
  }
  return Ideal(ring, std::move(gens));
}

long long projective_degree(const Ideal& I) {
  const RingPtr& ring = I.ring();
  if (ring->is_bigraded()) fail(Errc::internal_error, "projective_degree needs a standard grading");
  if (!I.is_homogeneous()) fail(Errc::not_homogeneous, "projective_degree needs homogeneous generators");
  if (I.is_zero()) fail(Errc::not_zero_dimensional, "the zero ideal has positive dimension");
  Ideal sat = saturate(I, irrelevant_ideal(ring));
  if (sat.contains_unit()) return 0;  // empty scheme
  auto gb = sat.groebner();
  std::vector<Monomial> lt;
  for (const ModVec& e : gb->elems) lt.push_back(e.front().m);
  HilbertData h = hilbert_series(ring, std::move(lt));
  int dim = h.krull_dim();
  if (dim != 1) fail(Errc::not_zero_dimensional, "Hilbert polynomial is not constant (projective dimension " +
                                                     std::to_string(dim - 1) + ")");
  return h.degree();
}

long long local_length(const Ideal& I, const PointP& z) {
  long long total = projective_degree(I);
  Ideal away = saturate(I, point_ideal(I.ring(), z));
  long long rest = away.contains_unit() ? 0 : projective_degree(away);
  return total - rest;
}

namespace {

Polynomial minor_det(const PresentationMatrix& M, const std::vector<size_t>& rows,
                     const std::vector<size_t>& cols) {
  size_t n = rows.size();
  if (n == 1) return M.at(rows[0], cols[0]);
  const FieldCtx& F = *M.ring->field();
  Polynomial acc = Polynomial::zero(M.ring);
  std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < n; ++j) {
    const Polynomial& piv = M.at(rows[0], cols[j]);
    if (piv.is_zero()) continue;
    std::vector<size_t> sub_cols;
    for (size_t c = 0; c < n; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    Polynomial sub = minor_det(M, sub_rows, sub_cols);
    if (j % 2 == 0) {
      acc = acc + piv * sub;
    } else {
      acc = acc - piv * sub;
    }
  }
  (void)F;
  return acc;
}

void subsets_rec(size_t n, size_t k, size_t start, std::vector<size_t>& cur,
                 std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  subsets_rec(n, k, 0, cur, out);
  return out;
}

}  // namespace

Ideal fitting_ideal(const PresentationMatrix& M, int index) {
  int g = static_cast<int>(M.rows);
  if (index < 0 || index > g) fail(Errc::usage_error, "Fitting index out of range");
  int size = g - index;
  const FieldCtx& F = *M.ring->field();
  if (size <= 0) {
    return Ideal(M.ring, {Polynomial::constant(M.ring, F.one())});
  }
  if (size > static_cast<int>(std::min(M.rows, M.cols))) {
    return Ideal(M.ring, {});
  }
  std::vector<Polynomial> minors;
  for (const auto& rs : subsets(M.rows, size)) {
    for (const auto& cs : subsets(M.cols, size)) {
      Polynomial d = minor_det(M, rs, cs);
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  }
  return Ideal(M.ring, std::move(minors));
}

std::vector<PointP> rational_points(const Ideal& I) {
  const RingPtr& ring = I.ring();
  const FieldCtx& F = *ring->field();
  if (F.order() > (1ull << 20)) fail(Errc::field_too_large, "point enumeration needs p^k <= 2^20");
  size_t n1 = ring->graded_vars();
  std::vector<PointP> found;
  // canonical representatives: leading 1 after i zeros, free coordinates after
  std::vector<FieldElement> elems;
  for (uint64_t v = 0; v < F.order(); ++v) {
    // enumerate all field elements as base-p digit vectors
    std::vector<uint32_t> cs(F.ext_degree());
    uint64_t w = v;
    for (uint32_t i = 0; i < F.ext_degree(); ++i) {
      cs[i] = static_cast<uint32_t>(w % F.characteristic());
      w /= F.characteristic();
    }
    elems.push_back(F.from_coeffs(cs));
  }
  std::vector<FieldElement> coords(n1, F.zero());
  for (size_t lead = 0; lead < n1; ++lead) {
    for (size_t i = 0; i < lead; ++i) coords[i] = F.zero();
    coords[lead] = F.one();
    size_t free = n1 - lead - 1;
    uint64_t count = 1;
    for (size_t i = 0; i < free; ++i) {
      if (count > (1ull << 40) / F.order()) fail(Errc::field_too_large, "too many points to enumerate");
      count *= F.order();
    }
    for (uint64_t idx = 0; idx < count; ++idx) {
      uint64_t w = idx;
      for (size_t i = 0; i < free; ++i) {
        coords[lead + 1 + i] = elems[w % F.order()];
        w /= F.order();
      }
      bool on = true;
      for (const Polynomial& g : I.gens()) {
        if (!F.is_zero(evaluate(g, coords))) {
          on = false;
          break;
        }
      }
      if (on) found.push_back(PointP::make(F, coords));
    }
  }
  return found;
}

}  // namespace topdeg
