#include "topdeg/groebner.hpp"

#include <algorithm>
#include <set>

namespace topdeg {

namespace {

void sort_vec(ModVec& v, const ModuleOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return ord.compare(a, b) > 0; });
}

// collapse equal (comp, monomial) entries of a sorted vector
ModVec collapse(const FieldCtx& F, ModVec v) {
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (F.is_zero(t.c)) continue;
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = F.add(out.back().c, t.c);
      if (F.is_zero(out.back().c)) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// out = a[ia..] - c * (m * g); both inputs descending, result descending
void merge_sub(const FieldCtx& F, const ModuleOrder& ord, const ModVec& a, size_t ia,
               const FieldElement& c, const Monomial& m, const ModVec& g, ModVec& out) {
  out.clear();
  out.reserve(a.size() - ia + g.size());
  size_t j = 0;
  FieldElement nc = F.neg(c);
  while (ia < a.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(a[ia++]);
      continue;
    }
    MTerm gt{F.mul(nc, g[j].c), g[j].comp, mono_mul(g[j].m, m)};
    if (ia >= a.size()) {
      if (!F.is_zero(gt.c)) out.push_back(std::move(gt));
      ++j;
      continue;
    }
    int cmp = ord.compare(a[ia], gt);
    if (cmp > 0) {
      out.push_back(a[ia++]);
    } else if (cmp < 0) {
      if (!F.is_zero(gt.c)) out.push_back(std::move(gt));
      ++j;
    } else {
      FieldElement s = F.add(a[ia].c, gt.c);
      if (!F.is_zero(s)) out.push_back({std::move(s), a[ia].comp, a[ia].m});
      ++ia;
      ++j;
    }
  }
}

void make_monic(const FieldCtx& F, ModVec& v) {
  if (v.empty() || F.is_one(v.front().c)) return;
  FieldElement il = F.inv(v.front().c);
  for (auto& t : v) t.c = F.mul(t.c, il);
}

struct Engine {
  RingPtr ring;
  const FieldCtx& F;
  ModuleOrder ord;
  uint32_t rank;
  std::vector<Deg> twist;

  std::vector<ModVec> basis;
  std::vector<bool> redundant;  // lead divisible by a later element's lead

  struct Pair {
    uint32_t deg;
    uint32_t i, j;  // i < j
    Monomial lcm;
  };
  struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };
  std::set<Pair, PairLess> pairs;

  Engine(RingPtr r, ModuleOrder o, uint32_t rk, std::vector<Deg> tw)
      : ring(std::move(r)), F(*ring->field()), ord(std::move(o)), rank(rk), twist(std::move(tw)) {
    if (twist.empty()) twist.assign(rank, Deg{});
  }

  uint32_t pair_degree(const Monomial& lcm, uint32_t comp) const {
    return lcm.deg + static_cast<uint32_t>(std::max<int32_t>(0, twist[comp].total()));
  }

  ModVec reduce_full(ModVec w) const {
    ModVec out;
    ModVec buf;
    size_t start = 0;
    while (start < w.size()) {
      const MTerm& lt = w[start];
      size_t gi = SIZE_MAX;
      for (size_t g = 0; g < basis.size(); ++g) {
        const MTerm& gl = basis[g].front();
        if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
          gi = g;
          break;
        }
      }
      if (gi == SIZE_MAX) {
        out.push_back(w[start++]);
        continue;
      }
      Monomial q = mono_div(lt.m, basis[gi].front().m);
      merge_sub(F, ord, w, start, lt.c, q, basis[gi], buf);
      w.swap(buf);
      start = 0;
    }
    return out;
  }

  void update_pairs(uint32_t t) {
    const MTerm& lt = basis[t].front();
    // chain criterion on old pairs
    std::erase_if(pairs, [&](const Pair& p) {
      const MTerm& li = basis[p.i].front();
      const MTerm& lj = basis[p.j].front();
      if (li.comp != lt.comp) return false;
      if (!lt.m.divides(p.lcm)) return false;
      Monomial lit = mono_lcm(li.m, lt.m);
      Monomial ljt = mono_lcm(lj.m, lt.m);
      return !(lit == p.lcm) && !(ljt == p.lcm);
    });
    // candidate new pairs
    struct Cand {
      uint32_t i;
      Monomial lcm;
      bool coprime;
      bool drop = false;
    };
    std::vector<Cand> cands;
    for (uint32_t i = 0; i < t; ++i) {
      const MTerm& li = basis[i].front();
      if (li.comp != lt.comp) continue;
      Monomial l = mono_lcm(li.m, lt.m);
      bool coprime = (l.deg == li.m.deg + lt.m.deg);
      cands.push_back({i, l, coprime});
    }
    // M rule: strict divisibility
    for (auto& a : cands) {
      for (auto& b : cands) {
        if (a.drop || &a == &b || b.drop) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.drop = true;
          break;
        }
      }
    }
    // F rule: one representative per lcm value (keep smallest index)
    for (auto& a : cands) {
      if (a.drop) continue;
      for (auto& b : cands) {
        if (b.drop || &a == &b) continue;
        if (a.lcm == b.lcm && b.i < a.i) {
          a.drop = true;
          break;
        }
      }
    }
    // B rule: product criterion, valid for ideals only
    if (rank == 1) {
      for (auto& a : cands)
        if (a.coprime) a.drop = true;
    }
    for (auto& a : cands) {
      if (a.drop) continue;
      pairs.insert({pair_degree(a.lcm, lt.comp), a.i, t, a.lcm});
    }
  }

  void add_element(ModVec v) {
    make_monic(F, v);
    uint32_t t = static_cast<uint32_t>(basis.size());
    basis.push_back(std::move(v));
    update_pairs(t);
  }

  void run(std::vector<ModVec> gens) {
    for (auto& g : gens) {
      sort_vec(g, ord);
      g = collapse(F, std::move(g));
      if (g.empty()) continue;
      ModVec nf = reduce_full(std::move(g));
      if (!nf.empty()) add_element(std::move(nf));
    }
    while (!pairs.empty()) {
      Pair p = *pairs.begin();
      pairs.erase(pairs.begin());
      const ModVec& fi = basis[p.i];
      const ModVec& fj = basis[p.j];
      Monomial qi = mono_div(p.lcm, fi.front().m);
      Monomial qj = mono_div(p.lcm, fj.front().m);
      // both monic: spoly = qi*fi - qj*fj
      ModVec s;
      {
        ModVec left;
        left.reserve(fi.size());
        for (const MTerm& tm : fi) left.push_back({tm.c, tm.comp, mono_mul(tm.m, qi)});
        ModVec buf;
        merge_sub(F, ord, left, 0, F.one(), qj, fj, buf);
        s.swap(buf);
      }
      ModVec nf = reduce_full(std::move(s));
      if (!nf.empty()) add_element(std::move(nf));
    }
  }

  GroebnerBasis finish() {
    // minimalize: drop elements whose lead is divisible by another surviving lead
    size_t n = basis.size();
    std::vector<bool> keep(n, true);
    for (size_t i = 0; i < n; ++i) {
      if (!keep[i]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (i == j || !keep[j]) continue;
        const MTerm& li = basis[i].front();
        const MTerm& lj = basis[j].front();
        if (li.comp == lj.comp && lj.m.divides(li.m)) {
          if (li.m == lj.m && i < j) continue;  // equal leads: keep the earlier
          keep[i] = false;
          break;
        }
      }
    }
    std::vector<ModVec> kept;
    for (size_t i = 0; i < n; ++i)
      if (keep[i]) kept.push_back(std::move(basis[i]));
    // tail-reduce each against the others; heads are already pairwise
    // non-divisible so only tails change
    GroebnerBasis gb;
    gb.ring = ring;
    gb.order = ord;
    gb.rank = rank;
    basis = std::move(kept);
    for (size_t i = 0; i < basis.size(); ++i) {
      MTerm head = basis[i].front();
      ModVec tail(basis[i].begin() + 1, basis[i].end());
      ModVec red = reduce_tail(std::move(tail), i);
      ModVec full;
      full.reserve(red.size() + 1);
      full.push_back(std::move(head));
      for (auto& tm : red) full.push_back(std::move(tm));
      basis[i] = std::move(full);
    }
    gb.elems = std::move(basis);
    std::sort(gb.elems.begin(), gb.elems.end(),
              [&](const ModVec& a, const ModVec& b) { return ord.compare(a.front(), b.front()) < 0; });
    for (auto& e : gb.elems) make_monic(F, e);
    return gb;
  }

  ModVec reduce_tail(ModVec w, size_t skip) const {
    ModVec out;
    ModVec buf;
    size_t start = 0;
    while (start < w.size()) {
      const MTerm& lt = w[start];
      size_t gi = SIZE_MAX;
      for (size_t g = 0; g < basis.size(); ++g) {
        if (g == skip || basis[g].empty()) continue;
        const MTerm& gl = basis[g].front();
        if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
          gi = g;
          break;
        }
      }
      if (gi == SIZE_MAX) {
        out.push_back(w[start++]);
        continue;
      }
      Monomial q = mono_div(lt.m, basis[gi].front().m);
      merge_sub(F, ord, w, start, lt.c, q, basis[gi], buf);
      w.swap(buf);
      start = 0;
    }
    return out;
  }
};

}  // namespace

bool GroebnerBasis::contains_unit() const {
  for (const ModVec& e : elems) {
    if (e.front().m.is_one()) return true;
  }
  return false;
}

std::vector<Polynomial> GroebnerBasis::polys() const {
  std::vector<Polynomial> out;
  out.reserve(elems.size());
  for (const ModVec& e : elems) out.push_back(vec_to_poly(ring, e));
  return out;
}

ModVec poly_to_vec(const Polynomial& f, uint32_t comp) {
  ModVec v;
  v.reserve(f.size());
  for (const Term& t : f.terms()) v.push_back({t.c, comp, t.m});
  return v;
}

Polynomial vec_to_poly(RingPtr ring, const ModVec& v) {
  std::vector<Term> ts;
  ts.reserve(v.size());
  for (const MTerm& t : v) {
    if (t.comp != 0) fail(Errc::internal_error, "vec_to_poly on a vector with nonzero component");
    ts.push_back({t.c, t.m});
  }
  return Polynomial(std::move(ring), std::move(ts));
}

GroebnerBasis buchberger_module(RingPtr ring, std::vector<ModVec> gens, ModuleOrder order,
                                uint32_t rank, const std::vector<Deg>& comp_twist) {
  Engine eng(std::move(ring), std::move(order), rank, comp_twist);
  eng.run(std::move(gens));
  return eng.finish();
}

GroebnerBasis buchberger(RingPtr ring, const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<ModVec> vs;
  vs.reserve(gens.size());
  for (const Polynomial& g : gens) vs.push_back(poly_to_vec(g));
  ModuleOrder mo;
  mo.mono = order;
  return buchberger_module(std::move(ring), std::move(vs), std::move(mo), 1);
}

ModVec normal_form_vec(ModVec f, const GroebnerBasis& gb) {
  const FieldCtx& F = *gb.ring->field();
  sort_vec(f, gb.order);
  f = collapse(F, std::move(f));
  ModVec out, buf;
  size_t start = 0;
  while (start < f.size()) {
    const MTerm& lt = f[start];
    size_t gi = SIZE_MAX;
    for (size_t g = 0; g < gb.elems.size(); ++g) {
      const MTerm& gl = gb.elems[g].front();
      if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
        gi = g;
        break;
      }
    }
    if (gi == SIZE_MAX) {
      out.push_back(f[start++]);
      continue;
    }
    Monomial q = mono_div(lt.m, gb.elems[gi].front().m);
    merge_sub(F, gb.order, f, start, lt.c, q, gb.elems[gi], buf);
    f.swap(buf);
    start = 0;
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  ModVec nf = normal_form_vec(poly_to_vec(f), gb);
  // re-canonicalize under the ring default order
  return vec_to_poly(gb.ring, nf);
}

// ---- presentation matrices, syzygies, resolutions ----

std::vector<ModVec> PresentationMatrix::columns() const {
  std::vector<ModVec> out(cols);
  for (size_t j = 0; j < cols; ++j) {
    ModVec v;
    for (size_t i = 0; i < rows; ++i) {
      for (const Term& t : at(i, j).terms()) v.push_back({t.c, static_cast<uint32_t>(i), t.m});
    }
    out[j] = std::move(v);
  }
  return out;
}

PresentationMatrix PresentationMatrix::from_columns(RingPtr ring, const std::vector<ModVec>& cols,
                                                    size_t rows, std::vector<Deg> row_deg) {
  PresentationMatrix m;
  m.ring = ring;
  m.rows = rows;
  m.cols = cols.size();
  m.row_deg = std::move(row_deg);
  m.entries.assign(m.rows * m.cols, Polynomial::zero(ring));
  for (size_t j = 0; j < m.cols; ++j) {
    std::vector<std::vector<Term>> per_row(rows);
    for (const MTerm& t : cols[j]) {
      if (t.comp >= rows) fail(Errc::internal_error, "column component out of range");
      per_row[t.comp].push_back({t.c, t.m});
    }
    for (size_t i = 0; i < rows; ++i) m.at(i, j) = Polynomial(ring, std::move(per_row[i]));
  }
  // column degrees from any nonzero entry
  m.col_deg.assign(m.cols, Deg{});
  for (size_t j = 0; j < m.cols; ++j) {
    bool found = false;
    for (size_t i = 0; i < rows && !found; ++i) {
      if (!m.at(i, j).is_zero()) {
        m.col_deg[j] = m.at(i, j).degree() + m.row_deg[i];
        found = true;
      }
    }
  }
  m.validate_grading();
  return m;
}

void PresentationMatrix::validate_grading() const {
  for (size_t j = 0; j < cols; ++j) {
    for (size_t i = 0; i < rows; ++i) {
      const Polynomial& e = at(i, j);
      if (e.is_zero()) continue;
      if (!e.is_homogeneous() || !(e.degree() + row_deg[i] == col_deg[j]))
        fail(Errc::not_homogeneous, "presentation matrix entry breaks the declared twists");
    }
  }
}

PresentationMatrix syzygy_raw(RingPtr ring, const std::vector<ModVec>& cols, size_t rows,
                              const std::vector<Deg>& row_deg) {
  size_t m = cols.size();
  uint32_t big_rank = static_cast<uint32_t>(rows + m);
  std::vector<Deg> twist(big_rank);
  for (size_t i = 0; i < rows; ++i) twist[i] = row_deg[i];
  std::vector<ModVec> gens(m);
  std::vector<Deg> col_deg(m);
  for (size_t j = 0; j < m; ++j) {
    ModVec v = cols[j];
    if (!v.empty()) col_deg[j] = ring->degree_of(v.front().m) + row_deg[v.front().comp];
    v.push_back({ring->field()->one(), static_cast<uint32_t>(rows + j), mono_one()});
    twist[rows + j] = col_deg[j];
    gens[j] = std::move(v);
  }
  ModuleOrder ord;
  ord.mono = ring->default_order();
  GroebnerBasis gb = buchberger_module(ring, std::move(gens), std::move(ord), big_rank, twist);
  std::vector<ModVec> syz;
  for (const ModVec& e : gb.elems) {
    bool pure_tag = true;
    for (const MTerm& t : e)
      if (t.comp < rows) {
        pure_tag = false;
        break;
      }
    if (!pure_tag) continue;
    ModVec s;
    s.reserve(e.size());
    for (const MTerm& t : e) s.push_back({t.c, t.comp - static_cast<uint32_t>(rows), t.m});
    syz.push_back(std::move(s));
  }
  return PresentationMatrix::from_columns(ring, syz, m, col_deg);
}

GradedResolution resolve_matrix(PresentationMatrix m0, int max_steps) {
  GradedResolution res;
  res.steps.push_back(std::move(m0));
  for (int s = 0; s < max_steps; ++s) {
    const PresentationMatrix& cur = res.steps.back();
    if (cur.cols == 0) break;
    PresentationMatrix next = syzygy_raw(cur.ring, cur.columns(), cur.rows, cur.row_deg);
    if (next.cols == 0) break;
    res.steps.push_back(std::move(next));
  }
  return minimize_resolution(std::move(res));
}

GradedResolution resolve_ideal(RingPtr ring, const std::vector<Polynomial>& gens, int max_steps) {
  PresentationMatrix m0;
  m0.ring = ring;
  m0.rows = 1;
  m0.cols = gens.size();
  m0.entries = gens;
  m0.row_deg = {Deg{}};
  m0.col_deg.clear();
  for (const Polynomial& g : gens) m0.col_deg.push_back(g.degree());
  m0.validate_grading();
  return resolve_matrix(std::move(m0), max_steps);
}

namespace {

bool is_nonzero_constant(const Polynomial& p) {
  return !p.is_zero() && p.leading().m.is_one();
}

void drop_row(PresentationMatrix& m, size_t i) {
  PresentationMatrix n = m;
  n.rows = m.rows - 1;
  n.entries.clear();
  n.row_deg.clear();
  for (size_t r = 0; r < m.rows; ++r) {
    if (r == i) continue;
    n.row_deg.push_back(m.row_deg[r]);
    for (size_t c = 0; c < m.cols; ++c) n.entries.push_back(m.at(r, c));
  }
  m = std::move(n);
}

void drop_col(PresentationMatrix& m, size_t j) {
  PresentationMatrix n = m;
  n.cols = m.cols - 1;
  n.entries.clear();
  n.col_deg.clear();
  for (size_t c = 0; c < m.cols; ++c)
    if (c != j) n.col_deg.push_back(m.col_deg[c]);
  for (size_t r = 0; r < m.rows; ++r)
    for (size_t c = 0; c < m.cols; ++c)
      if (c != j) n.entries.push_back(m.at(r, c));
  m = std::move(n);
}

HilbertData coker_hilbert(const PresentationMatrix& m) {
  GroebnerBasis gb = buchberger_module(m.ring, m.columns(), ModuleOrder{m.ring->default_order(), {}},
                                       static_cast<uint32_t>(std::max<size_t>(m.rows, 1)), m.row_deg);
  return hilbert_numerator_module(m.ring, gb, m.row_deg, m.rows);
}

}  // namespace

GradedResolution minimize_resolution(GradedResolution res) {
  std::vector<HilbertData> before;
  bool standard = !res.steps.empty() && !res.steps[0].ring->is_bigraded();
  if (standard) {
    for (const auto& st : res.steps) before.push_back(coker_hilbert(st));
  }

  const FieldCtx& F = *res.steps[0].ring->field();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t s = 1; s < res.steps.size() && !changed; ++s) {
      PresentationMatrix& N = res.steps[s];
      for (size_t i = 0; i < N.rows && !changed; ++i) {
        for (size_t j = 0; j < N.cols && !changed; ++j) {
          if (!is_nonzero_constant(N.at(i, j))) continue;
          FieldElement u_inv = F.inv(N.at(i, j).leading().c);
          // clear row i by column operations; keep the next step consistent
          for (size_t j2 = 0; j2 < N.cols; ++j2) {
            if (j2 == j || N.at(i, j2).is_zero()) continue;
            Polynomial lam = scale(N.at(i, j2), u_inv);
            for (size_t r = 0; r < N.rows; ++r) N.at(r, j2) = N.at(r, j2) - lam * N.at(r, j);
            if (s + 1 < res.steps.size()) {
              PresentationMatrix& nxt = res.steps[s + 1];
              for (size_t c = 0; c < nxt.cols; ++c)
                nxt.at(j, c) = nxt.at(j, c) + lam * nxt.at(j2, c);
            }
          }
          // clear column j by row operations; keep the previous step consistent
          for (size_t i2 = 0; i2 < N.rows; ++i2) {
            if (i2 == i || N.at(i2, j).is_zero()) continue;
            Polynomial mu = scale(N.at(i2, j), u_inv);
            for (size_t c = 0; c < N.cols; ++c) N.at(i2, c) = N.at(i2, c) - mu * N.at(i, c);
            PresentationMatrix& prv = res.steps[s - 1];
            for (size_t r = 0; r < prv.rows; ++r)
              prv.at(r, i) = prv.at(r, i) + prv.at(r, i2) * mu;
          }
          drop_row(res.steps[s], i);
          drop_col(res.steps[s], j);
          if (s + 1 < res.steps.size()) drop_row(res.steps[s + 1], j);
          drop_col(res.steps[s - 1], i);
          changed = true;
        }
      }
    }
  }
  // cancellation can leave an all-zero column; it is only droppable when the
  // next step has nothing mapping onto it
  for (size_t s = 1; s < res.steps.size(); ++s) {
    for (size_t j = res.steps[s].cols; j-- > 0;) {
      bool zero = true;
      for (size_t i = 0; i < res.steps[s].rows; ++i)
        if (!res.steps[s].at(i, j).is_zero()) zero = false;
      if (!zero) continue;
      if (s + 1 < res.steps.size()) {
        for (size_t c = 0; c < res.steps[s + 1].cols; ++c)
          if (!res.steps[s + 1].at(j, c).is_zero())
            fail(Errc::internal_error, "zero column with incoming relations");
        drop_row(res.steps[s + 1], j);
      }
      drop_col(res.steps[s], j);
    }
  }
  // trailing steps may have become empty
  while (res.steps.size() > 1 && res.steps.back().cols == 0) res.steps.pop_back();

  if (standard) {
    for (size_t s = 0; s < res.steps.size(); ++s) {
      HilbertData after = coker_hilbert(res.steps[s]);
      if (after.numer != before[s].numer)
        fail(Errc::internal_error, "minimization changed a cokernel Hilbert series");
    }
  }
  res.minimal = true;
  for (size_t s = 1; s < res.steps.size(); ++s) {
    for (const Polynomial& e : res.steps[s].entries) {
      if (is_nonzero_constant(e)) res.minimal = false;
    }
  }
  for (auto& st : res.steps) st.validate_grading();
  return res;
}

PresentationMatrix syzygy_module(RingPtr ring, const std::vector<Polynomial>& gens) {
  std::vector<ModVec> vecs;
  vecs.reserve(gens.size());
  for (const Polynomial& g : gens) vecs.push_back(poly_to_vec(g));
  PresentationMatrix raw = syzygy_raw(ring, vecs, 1, {Deg{}});
  if (raw.cols == 0) return raw;
  // minimize with the syzygy matrix as the head of the chain, so rows (the
  // input generators) are never cancelled
  GradedResolution res = resolve_matrix(std::move(raw), 1);
  return res.steps[0];
}

}  // namespace topdeg
