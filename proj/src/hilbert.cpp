#include <algorithm>

#include "topdeg/groebner.hpp"

namespace topdeg {

namespace {

// keep only minimal generators under divisibility
void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& h : out) {
      if (h.divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(g);
  }
  gens = std::move(out);
}

using Numer = std::map<std::pair<int32_t, int32_t>, long long>;

void add_term(Numer& n, Deg d, long long c) {
  auto key = std::make_pair(d.a, d.b);
  n[key] += c;
  if (n[key] == 0) n.erase(key);
}

void acc_shifted(Numer& dst, const Numer& src, Deg shift, long long sign) {
  for (const auto& [k, c] : src) {
    add_term(dst, Deg{k.first + shift.a, k.second + shift.b}, sign * c);
  }
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (mono_gcd(gens[i], gens[j]).deg != 0) return false;
  return true;
}

Numer numerator_rec(const PolyRing& ring, std::vector<Monomial> gens) {
  minimalize(gens);
  if (!gens.empty() && gens[0].deg == 0) return {};  // unit ideal: zero quotient
  Numer out;
  if (gens.empty()) {
    add_term(out, Deg{}, 1);
    return out;
  }
  if (pairwise_coprime(gens)) {
    add_term(out, Deg{}, 1);
    for (const Monomial& g : gens) {
      Numer next;
      acc_shifted(next, out, Deg{}, 1);
      acc_shifted(next, out, ring.degree_of(g), -1);
      out = std::move(next);
    }
    return out;
  }
  // pivot on the most frequent variable
  std::array<uint32_t, kMaxVars> freq{};
  for (const Monomial& g : gens)
    for (size_t v = 0; v < ring.nvars(); ++v)
      if (g.e[v]) ++freq[v];
  size_t pivot = 0;
  uint32_t best = 0;
  for (size_t v = 0; v < ring.nvars(); ++v) {
    if (freq[v] > best) {
      best = freq[v];
      pivot = v;
    }
  }
  Monomial pv = mono_var(pivot);
  // N(I) = N(I + (x)) + t^deg(x) * N(I : x)
  std::vector<Monomial> plus = {pv};
  for (const Monomial& g : gens)
    if (!g.e[pivot]) plus.push_back(g);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const Monomial& g : gens) {
    if (g.e[pivot]) {
      Monomial h = g;
      h.e[pivot] -= 1;
      h.deg -= 1;
      colon.push_back(h);
    } else {
      colon.push_back(g);
    }
  }
  Numer a = numerator_rec(ring, std::move(plus));
  Numer b = numerator_rec(ring, std::move(colon));
  acc_shifted(a, b, ring.degree_of(pv), 1);
  return a;
}

long long binom(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return static_cast<long long>(r);
}

}  // namespace

HilbertData hilbert_series(const RingPtr& ring, std::vector<Monomial> lt_gens) {
  if (ring->nvars() != ring->graded_vars())
    fail(Errc::internal_error, "Hilbert series in a tagged ring");
  HilbertData h;
  if (ring->is_bigraded()) {
    h.v1 = static_cast<uint32_t>(ring->block1_size());
    h.v2 = static_cast<uint32_t>(ring->nvars() - ring->block1_size());
  } else {
    h.v1 = static_cast<uint32_t>(ring->nvars());
    h.v2 = 0;
  }
  h.numer = numerator_rec(*ring, std::move(lt_gens));
  return h;
}

HilbertData hilbert_numerator_module(const RingPtr& ring, const GroebnerBasis& gb,
                                     const std::vector<Deg>& row_deg, size_t rows) {
  std::vector<std::vector<Monomial>> per_comp(std::max<size_t>(rows, 1));
  for (const ModVec& e : gb.elems) {
    const MTerm& lt = e.front();
    per_comp[lt.comp].push_back(lt.m);
  }
  HilbertData total;
  bool first = true;
  for (size_t i = 0; i < rows; ++i) {
    HilbertData hi = hilbert_series(ring, std::move(per_comp[i]));
    if (first) {
      total = hi;
      total.numer.clear();
      first = false;
    }
    for (const auto& [k, c] : hi.numer) {
      auto key = std::make_pair(k.first + row_deg[i].a, k.second + row_deg[i].b);
      total.numer[key] += c;
      if (total.numer[key] == 0) total.numer.erase(key);
    }
  }
  if (first) {
    // zero-row matrix: zero module
    total = hilbert_series(ring, {mono_one()});
  }
  return total;
}

long long HilbertData::hilbert_function(int64_t a, int64_t b) const {
  __int128 acc = 0;
  for (const auto& [k, c] : numer) {
    long long f1 = v1 ? binom(a - k.first + v1 - 1, static_cast<int64_t>(v1) - 1)
                      : (a == k.first ? 1 : 0);
    long long f2 = v2 ? binom(b - k.second + v2 - 1, static_cast<int64_t>(v2) - 1) : 1;
    acc += static_cast<__int128>(c) * f1 * f2;
  }
  return static_cast<long long>(acc);
}

bool HilbertData::is_zero_quotient() const { return numer.empty(); }

namespace {

// dense coefficients of the standard-grading numerator
std::vector<long long> dense_numer(const HilbertData& h) {
  int32_t maxd = 0;
  for (const auto& [k, c] : h.numer) maxd = std::max(maxd, k.first);
  std::vector<long long> v(maxd + 1, 0);
  for (const auto& [k, c] : h.numer) v[k.first] += c;
  return v;
}

// divide by (1 - t); caller guarantees divisibility
std::vector<long long> divide_one_minus_t(const std::vector<long long>& n) {
  // q_i = sum_{j<=i} n_j and the final partial sum must be zero
  std::vector<long long> q(n.size() ? n.size() - 1 : 0, 0);
  long long run = 0;
  for (size_t i = 0; i + 1 < n.size(); ++i) {
    run += n[i];
    q[i] = run;
  }
  return q;
}

long long eval_at_one(const std::vector<long long>& n) {
  long long s = 0;
  for (long long c : n) s += c;
  return s;
}

}  // namespace

int HilbertData::krull_dim() const {
  if (v2 != 0) fail(Errc::internal_error, "krull_dim is standard-grading only");
  if (numer.empty()) return -1;  // zero quotient
  std::vector<long long> n = dense_numer(*this);
  uint32_t e = 0;
  while (eval_at_one(n) == 0 && !n.empty()) {
    n = divide_one_minus_t(n);
    ++e;
  }
  return static_cast<int>(v1 - e);
}

long long HilbertData::degree() const {
  if (v2 != 0) fail(Errc::internal_error, "degree is standard-grading only");
  if (numer.empty()) return 0;
  std::vector<long long> n = dense_numer(*this);
  while (eval_at_one(n) == 0 && !n.empty()) n = divide_one_minus_t(n);
  return eval_at_one(n);
}

}  // namespace topdeg
