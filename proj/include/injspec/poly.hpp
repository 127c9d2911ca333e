#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "injspec/fp.hpp"

namespace injspec {

// Univariate polynomial over F_p.  Coefficients are stored lowest-degree
// first and normalized: the zero polynomial has an empty vector and degree -1.
struct Poly {
  std::vector<int> c;
  bool operator==(const Poly&) const = default;
};

inline int p_deg(const Poly& f) { return static_cast<int>(f.c.size()) - 1; }
inline bool p_is_zero(const Poly& f) { return f.c.empty(); }

inline Poly p_norm(const PrimeField& F, std::vector<int> c) {
  for (int& x : c) x = F.norm(x);
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Poly{std::move(c)};
}

inline Poly p_zero() { return Poly{}; }
inline Poly p_const(const PrimeField& F, int a) { return p_norm(F, {a}); }
inline Poly p_one() { return Poly{{1}}; }
inline Poly p_x() { return Poly{{0, 1}}; }

// x^k * f
inline Poly p_shift(const Poly& f, int k) {
  if (p_is_zero(f)) return f;
  Poly g;
  g.c.assign(static_cast<size_t>(k), 0);
  g.c.insert(g.c.end(), f.c.begin(), f.c.end());
  return g;
}

inline Poly p_add(const PrimeField& F, const Poly& a, const Poly& b) {
  std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int v = 0;
    if (i < a.c.size()) v = F.add(v, a.c[i]);
    if (i < b.c.size()) v = F.add(v, b.c[i]);
    c[i] = v;
  }
  return p_norm(F, std::move(c));
}

inline Poly p_scale(const PrimeField& F, int s, const Poly& a) {
  std::vector<int> c = a.c;
  for (int& x : c) x = F.mul(s, x);
  return p_norm(F, std::move(c));
}

inline Poly p_sub(const PrimeField& F, const Poly& a, const Poly& b) {
  return p_add(F, a, p_scale(F, F.neg(1), b));
}

inline Poly p_mul(const PrimeField& F, const Poly& a, const Poly& b) {
  if (p_is_zero(a) || p_is_zero(b)) return p_zero();
  std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = F.norm(c[i + j] + static_cast<long long>(a.c[i]) * b.c[j]);
  }
  return p_norm(F, std::move(c));
}

inline std::pair<Poly, Poly> p_divmod(const PrimeField& F, const Poly& a, const Poly& b) {
  require(!p_is_zero(b), errc::zero_polynomial, "division by the zero polynomial");
  Poly r = a;
  std::vector<int> q(std::max<size_t>(1, a.c.size()), 0);
  int db = p_deg(b);
  int lead_inv = F.inv(b.c.back());
  while (p_deg(r) >= db) {
    int k = p_deg(r) - db;
    int s = F.mul(r.c.back(), lead_inv);
    q[k] = s;
    // r -= s * x^k * b
    for (int i = 0; i <= db; ++i) r.c[k + i] = F.sub(r.c[k + i], F.mul(s, b.c[i]));
    r = p_norm(F, std::move(r.c));
  }
  return {p_norm(F, std::move(q)), r};
}

inline Poly p_mod(const PrimeField& F, const Poly& a, const Poly& b) { return p_divmod(F, a, b).second; }
inline Poly p_div(const PrimeField& F, const Poly& a, const Poly& b) { return p_divmod(F, a, b).first; }
inline bool p_divides(const PrimeField& F, const Poly& d, const Poly& a) {
  if (p_is_zero(d)) return p_is_zero(a);
  return p_is_zero(p_mod(F, a, d));
}

inline Poly p_monic(const PrimeField& F, const Poly& a) {
  if (p_is_zero(a)) return a;
  return p_scale(F, F.inv(a.c.back()), a);
}

inline Poly p_gcd(const PrimeField& F, Poly a, Poly b) {
  while (!p_is_zero(b)) {
    Poly r = p_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return p_monic(F, a);
}

inline Poly p_lcm(const PrimeField& F, const Poly& a, const Poly& b) {
  if (p_is_zero(a) || p_is_zero(b)) return p_zero();
  return p_monic(F, p_div(F, p_mul(F, a, b), p_gcd(F, a, b)));
}

inline Poly p_pow_mod(const PrimeField& F, Poly base, unsigned long long e, const Poly& mod) {
  Poly r = p_mod(F, p_one(), mod);
  base = p_mod(F, base, mod);
  while (e > 0) {
    if (e & 1ULL) r = p_mod(F, p_mul(F, r, base), mod);
    base = p_mod(F, p_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

inline Poly p_derivative(const PrimeField& F, const Poly& f) {
  std::vector<int> c;
  for (size_t i = 1; i < f.c.size(); ++i) c.push_back(F.mul(static_cast<int>(i % F.p), f.c[i]));
  return p_norm(F, std::move(c));
}

// Canonical order: by degree, then coefficient vectors lexicographically
// from the constant term upward.
inline int p_cmp(const Poly& a, const Poly& b) {
  if (p_deg(a) != p_deg(b)) return p_deg(a) < p_deg(b) ? -1 : 1;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
  return 0;
}

inline bool p_less(const Poly& a, const Poly& b) { return p_cmp(a, b) < 0; }

inline std::string p_to_string(const Poly& f) {
  if (p_is_zero(f)) return "0";
  std::string s;
  for (int i = p_deg(f); i >= 0; --i) {
    int c = f.c[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += (i == 1) ? "x" : ("x^" + std::to_string(i));
    }
  }
  return s;
}

namespace detail {

// Deterministic pseudo-random stream for equal-degree splitting (fixed seed,
// xorshift64*): factorization output is reproducible bit for bit.
struct SplitRng {
  unsigned long long s = 0x9E3779B97F4A7C15ULL;
  unsigned long long next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1DULL;
  }
  int next_mod(int p) { return static_cast<int>(next() % static_cast<unsigned long long>(p)); }
};

inline Poly random_poly(const PrimeField& F, SplitRng& rng, int max_deg) {
  std::vector<int> c(static_cast<size_t>(max_deg) + 1);
  for (int& x : c) x = rng.next_mod(F.p);
  return p_norm(F, std::move(c));
}

}  // namespace detail

// Squarefree decomposition in characteristic p; returns pairwise coprime
// monic squarefree parts with multiplicities (product reconstructs the monic
// associate of f).
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const PrimeField& F, const Poly& f0) {
  std::vector<std::pair<Poly, int>> out;
  struct Item {
    Poly f;
    int mult;
  };
  std::vector<Item> work{{p_monic(F, f0), 1}};
  while (!work.empty()) {
    auto [f, mult] = work.back();
    work.pop_back();
    if (p_deg(f) <= 0) continue;
    Poly fp = p_derivative(F, f);
    if (p_is_zero(fp)) {
      // f = g(x^p); over F_p the coefficients are their own p-th roots.
      std::vector<int> g;
      for (size_t i = 0; i < f.c.size(); i += F.p) g.push_back(f.c[i]);
      work.push_back({p_norm(F, std::move(g)), mult * F.p});
      continue;
    }
    Poly g = p_gcd(F, f, fp);
    Poly w = p_div(F, f, g);  // product of squarefree factors of multiplicity not divisible by p
    int i = 1;
    while (p_deg(w) > 0) {
      Poly y = p_gcd(F, w, g);
      Poly part = p_div(F, w, y);
      if (p_deg(part) > 0) out.push_back({p_monic(F, part), mult * i});
      g = p_div(F, g, y);
      w = std::move(y);
      ++i;
    }
    if (p_deg(g) > 0) work.push_back({g, mult});
  }
  // merge equal parts, canonical order
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int c = p_cmp(a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& pr : out) {
    if (!merged.empty() && merged.back().first == pr.first)
      merged.back().second += pr.second;
    else
      merged.push_back(pr);
  }
  return merged;
}

// Distinct-degree split of a monic squarefree polynomial: (product, d) pairs.
inline std::vector<std::pair<Poly, int>> distinct_degree(const PrimeField& F, Poly f) {
  std::vector<std::pair<Poly, int>> out;
  Poly h = p_mod(F, p_x(), f);
  int d = 0;
  while (p_deg(f) >= 2 * (d + 1)) {
    ++d;
    h = p_pow_mod(F, h, static_cast<unsigned long long>(F.p), f);
    Poly g = p_gcd(F, f, p_sub(F, h, p_x()));
    if (p_deg(g) > 0) {
      out.push_back({g, d});
      f = p_div(F, f, g);
      h = p_mod(F, h, f);
    }
  }
  if (p_deg(f) > 0) out.push_back({f, p_deg(f)});
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic 2)
// with the deterministic stream above.
inline void equal_degree_split(const PrimeField& F, const Poly& f, int d, detail::SplitRng& rng,
                               std::vector<Poly>& out) {
  if (p_deg(f) == d) {
    out.push_back(p_monic(F, f));
    return;
  }
  while (true) {
    Poly r = detail::random_poly(F, rng, p_deg(f) - 1);
    if (p_deg(r) < 1) continue;
    Poly s;
    if (F.p == 2) {
      s = p_zero();
      Poly t = p_mod(F, r, f);
      for (int i = 0; i < d; ++i) {
        s = p_add(F, s, t);
        t = p_mod(F, p_mul(F, t, t), f);
      }
    } else {
      unsigned long long e = 1;
      for (int i = 0; i < d; ++i) e *= static_cast<unsigned long long>(F.p);
      s = p_sub(F, p_pow_mod(F, r, (e - 1) / 2, f), p_one());
    }
    Poly g = p_gcd(F, f, s);
    if (p_deg(g) > 0 && p_deg(g) < p_deg(f)) {
      equal_degree_split(F, g, d, rng, out);
      equal_degree_split(F, p_div(F, f, g), d, rng, out);
      return;
    }
  }
}

// Full factorization into monic irreducibles with multiplicities, sorted by
// (degree, coefficients).  The product of the factors reconstructs the monic
// associate of the input.
inline std::vector<std::pair<Poly, int>> poly_factor(const PrimeField& F, const Poly& f) {
  require(!p_is_zero(f), errc::zero_polynomial, "cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  detail::SplitRng rng;
  for (auto& [sqf, mult] : squarefree_decomposition(F, f)) {
    for (auto& [prod, d] : distinct_degree(F, sqf)) {
      std::vector<Poly> irr;
      equal_degree_split(F, prod, d, rng, irr);
      for (Poly& q : irr) out.push_back({std::move(q), mult});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return p_cmp(a.first, b.first) < 0; });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& pr : out) {
    if (!merged.empty() && merged.back().first == pr.first)
      merged.back().second += pr.second;
    else
      merged.push_back(pr);
  }
  return merged;
}

inline bool p_is_irreducible(const PrimeField& F, const Poly& f) {
  if (p_deg(f) < 1) return false;
  auto fac = poly_factor(F, f);
  return fac.size() == 1 && fac[0].second == 1;
}

// All monic polynomials of exact degree d, in canonical order.
inline std::vector<Poly> enumerate_monic(const PrimeField& F, int d) {
  std::vector<Poly> out;
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= F.p;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> c(static_cast<size_t>(d) + 1, 0);
    long long x = code;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<int>(x % F.p);
      x /= F.p;
    }
    c[d] = 1;
    out.push_back(Poly{std::move(c)});
  }
  return out;
}

inline std::vector<Poly> monic_irreducibles_up_to(const PrimeField& F, int max_deg) {
  std::vector<Poly> out;
  for (int d = 1; d <= max_deg; ++d)
    for (const Poly& f : enumerate_monic(F, d))
      if (p_is_irreducible(F, f)) out.push_back(f);
  return out;
}

}  // namespace injspec
