#pragma once

// Degree-by-degree linear-algebra oracles, independent of the Groebner
// reduction path: ideal/syzygy component dimensions via Gaussian elimination
// on monomial-indexed coefficient matrices.

#include <map>
#include <vector>

#include "topdeg/groebner.hpp"
#include "topdeg/ideals.hpp"

namespace topdeg::oracle {

inline void monomials_of_degree(const PolyRing& ring, uint32_t d, std::vector<Monomial>& out) {
  out.clear();
  size_t n = ring.nvars();
  Monomial cur;
  // lexicographic enumeration of exponent vectors summing to d
  std::vector<uint32_t> e(n, 0);
  size_t i = 0;
  (void)i;
  // simple recursive fill
  struct Rec {
    size_t n;
    uint32_t d;
    std::vector<Monomial>& out;
    void go(Monomial m, size_t v, uint32_t left) {
      if (v + 1 == n) {
        m.e[v] = static_cast<uint16_t>(left);
        m.deg += left;
        out.push_back(m);
        return;
      }
      for (uint32_t k = 0; k <= left; ++k) {
        Monomial mm = m;
        mm.e[v] = static_cast<uint16_t>(k);
        mm.deg += k;
        go(mm, v + 1, left - k);
      }
    }
  } rec{n, d, out};
  rec.go(cur, 0, d);
}

// rank of a dense matrix over the coefficient field
inline size_t rank_of(const FieldCtx& F, std::vector<std::vector<FieldElement>> rows) {
  size_t rank = 0;
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t piv = SIZE_MAX;
    for (size_t r = rank; r < rows.size(); ++r) {
      if (!F.is_zero(rows[r][col])) {
        piv = r;
        break;
      }
    }
    if (piv == SIZE_MAX) continue;
    std::swap(rows[rank], rows[piv]);
    FieldElement il = F.inv(rows[rank][col]);
    for (size_t c = col; c < ncols; ++c) rows[rank][c] = F.mul(rows[rank][c], il);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || F.is_zero(rows[r][col])) continue;
      FieldElement f = rows[r][col];
      for (size_t c = col; c < ncols; ++c)
        rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
    }
    ++rank;
  }
  return rank;
}

// dim of the degree-d component of ideal(gens), gens homogeneous
inline long long ideal_component_dim(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                     uint32_t d) {
  const FieldCtx& F = *ring->field();
  std::vector<Monomial> basis;
  monomials_of_degree(*ring, d, basis);
  std::map<Monomial, size_t, bool (*)(const Monomial&, const Monomial&)> index(
      +[](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<FieldElement>> rows;
  std::vector<Monomial> shifts;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    uint32_t dg = static_cast<uint32_t>(g.degree().total());
    if (dg > d) continue;
    monomials_of_degree(*ring, d - dg, shifts);
    for (const Monomial& m : shifts) {
      std::vector<FieldElement> row(basis.size(), F.zero());
      for (const Term& t : g.terms()) row[index.at(mono_mul(t.m, m))] = t.c;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<long long>(rank_of(F, std::move(rows)));
}

inline long long monomial_count(const PolyRing& ring, uint32_t d) {
  std::vector<Monomial> basis;
  monomials_of_degree(ring, d, basis);
  return static_cast<long long>(basis.size());
}

// Hilbert function of R/ideal(gens) at degree d, by linear algebra
inline long long quotient_dim(const RingPtr& ring, const std::vector<Polynomial>& gens, uint32_t d) {
  return monomial_count(*ring, d) - ideal_component_dim(ring, gens, d);
}

// dim of the degree-d component of the syzygy module of homogeneous gens,
// as the kernel of (q_i) -> sum q_i g_i
inline long long syzygy_component_dim(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                      uint32_t d) {
  const FieldCtx& F = *ring->field();
  std::vector<Monomial> target;
  uint32_t maxd = 0;
  for (const Polynomial& g : gens) maxd = std::max(maxd, static_cast<uint32_t>(g.degree().total()));
  if (d < maxd && d < maxd) {
    // still fine: columns with deg g > d contribute nothing
  }
  monomials_of_degree(*ring, d, target);
  std::map<Monomial, size_t, bool (*)(const Monomial&, const Monomial&)> index(
      +[](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  for (size_t i = 0; i < target.size(); ++i) index[target[i]] = i;
  std::vector<std::vector<FieldElement>> rows;
  long long domain_dim = 0;
  std::vector<Monomial> shifts;
  for (const Polynomial& g : gens) {
    uint32_t dg = static_cast<uint32_t>(g.degree().total());
    if (dg > d) continue;
    monomials_of_degree(*ring, d - dg, shifts);
    domain_dim += static_cast<long long>(shifts.size());
    for (const Monomial& m : shifts) {
      std::vector<FieldElement> row(target.size(), F.zero());
      for (const Term& t : g.terms()) row[index.at(mono_mul(t.m, m))] = t.c;
      rows.push_back(std::move(row));
    }
  }
  return domain_dim - static_cast<long long>(rank_of(F, std::move(rows)));
}

// component dim of the module generated by the columns of M at degree d
// (column degrees from M.col_deg), counted through the staircase of its GB
inline long long module_component_dim_from_gb(const PresentationMatrix& M, uint32_t d) {
  GroebnerBasis gb = buchberger_module(M.ring, M.columns(), ModuleOrder{M.ring->default_order(), {}},
                                       static_cast<uint32_t>(M.rows), M.row_deg);
  long long free_dim = 0;
  long long standard = 0;
  for (size_t i = 0; i < M.rows; ++i) {
    int32_t di = M.row_deg[i].total();
    if (static_cast<int32_t>(d) < di) continue;
    std::vector<Monomial> ms;
    monomials_of_degree(*M.ring, d - di, ms);
    free_dim += static_cast<long long>(ms.size());
    for (const Monomial& m : ms) {
      bool divisible = false;
      for (const ModVec& e : gb.elems) {
        if (e.front().comp == i && e.front().m.divides(m)) {
          divisible = true;
          break;
        }
      }
      if (!divisible) ++standard;
    }
  }
  return free_dim - standard;
}

}  // namespace topdeg::oracle
