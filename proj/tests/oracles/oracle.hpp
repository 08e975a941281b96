#pragma once

// Independent reference implementations used to cross-check the library.
// Nothing here includes hawaii headers: polynomials are plain coefficient
// vectors (lowest degree first) over mpq_class, and every algorithm is the
// textbook one: Euclid for gcd, Gaussian elimination on the Sylvester matrix
// for resultants, Descartes' rule with Vincent bisection for root counting.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;
using P = std::vector<Q>;

inline Q frac(long n, long d) {
  Q q(n, d);
  q.canonicalize();
  return q;
}

inline void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const P& p) { return static_cast<int>(p.size()) - 1; }

inline P add(P a, const P& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline P scale(P a, const Q& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

inline P sub(const P& a, const P& b) { return add(a, scale(b, -1)); }

inline P mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline P deriv(const P& a) {
  P r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

inline Q eval(const P& a, const Q& x) {
  Q r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

inline std::pair<P, P> divmod(P a, const P& b) {
  if (b.empty()) throw std::domain_error("oracle: division by zero polynomial");
  P q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Q c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline P monic(P a) {
  if (a.empty()) return a;
  const Q lc = a.back();
  for (auto& x : a) x /= lc;
  return a;
}

inline P gcd(P a, P b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    P r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Naive expansion of k (p')^2 - p p''.
inline P h_naive(const P& p, const Q& k) {
  const P d1 = deriv(p);
  const P d2 = deriv(d1);
  return sub(scale(mul(d1, d1), k), mul(p, d2));
}

/// Determinant by Gaussian elimination over Q.
inline Q det(std::vector<std::vector<Q>> m) {
  const std::size_t n = m.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

/// Determinant of the Sylvester matrix of a (degree m) and b (degree n).
inline Q sylvester_resultant(const P& a, const P& b) {
  const int m = deg(a);
  const int n = deg(b);
  const int size = m + n;
  std::vector<std::vector<Q>> s(static_cast<std::size_t>(size), std::vector<Q>(static_cast<std::size_t>(size), 0));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + i] = a[static_cast<std::size_t>(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + i] = b[static_cast<std::size_t>(n - i)];
  return det(s);
}

inline P taylor_shift(const P& a, const Q& t) {
  // Horner in the shifted variable.
  P r;
  const P lin = {t, 1};
  for (std::size_t i = a.size(); i-- > 0;) r = add(mul(r, lin), P{a[i]});
  return r;
}

inline P reverse(P a) {
  trim(a);
  return P(a.rbegin(), a.rend());
}

inline int sign_variations(const P& a) {
  int v = 0;
  int last = 0;
  for (const auto& c : a) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Roots in (0, inf) of a square-free polynomial, by Descartes' rule of signs
/// and Vincent's bisection.
inline int positive_roots(P q) {
  trim(q);
  if (q.empty()) throw std::domain_error("oracle: zero polynomial");
  std::size_t lead_zeros = 0;
  while (q[lead_zeros] == 0) ++lead_zeros;
  q.erase(q.begin(), q.begin() + static_cast<long>(lead_zeros));
  const int v = sign_variations(q);
  if (v <= 1) return v;
  const int at_one = eval(q, 1) == 0 ? 1 : 0;
  return positive_roots(taylor_shift(q, 1)) + at_one + positive_roots(taylor_shift(reverse(q), 1));
}

/// (1 + t)^n p((a + b t)/(1 + t)): maps the roots of p in (a, b) to (0, inf).
inline P mobius(const P& p, const Q& a, const Q& b) {
  const int n = deg(p);
  P out;
  for (int i = 0; i <= n; ++i) {
    P term = {p[static_cast<std::size_t>(i)]};
    for (int j = 0; j < i; ++j) term = mul(term, P{a, b});
    for (int j = i; j < n; ++j) term = mul(term, P{1, 1});
    out = add(out, term);
  }
  return out;
}

inline P squarefree(const P& p) { return divmod(p, gcd(p, deriv(p))).first; }

/// Distinct real roots in the open interval (lo, hi); nullopt ends are infinite.
inline int distinct_roots(const P& p, const std::optional<Q>& lo = std::nullopt,
                          const std::optional<Q>& hi = std::nullopt) {
  P s = squarefree(p);
  if (deg(s) <= 0) return 0;
  if (lo && hi) return positive_roots(mobius(s, *lo, *hi));
  if (lo) return positive_roots(taylor_shift(s, *lo));
  if (hi) {
    P mirrored = taylor_shift(s, *hi);
    for (std::size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
    return positive_roots(mirrored);
  }
  P mirrored = s;
  for (std::size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
  return positive_roots(s) + positive_roots(mirrored) + (s[0] == 0 ? 1 : 0);
}

/// Real roots with multiplicity in (lo, hi): a root of multiplicity m is a
/// root of each of g_1 = p, g_{j+1} = gcd(g_j, g_j') for j < m.
inline int roots_with_multiplicity(const P& p, const std::optional<Q>& lo = std::nullopt,
                                   const std::optional<Q>& hi = std::nullopt) {
  int total = 0;
  P g = p;
  trim(g);
  while (deg(g) >= 1) {
    total += distinct_roots(g, lo, hi);
    g = gcd(g, deriv(g));
  }
  return total;
}

/// Exact complex value of p at x + iy as (re, im).
inline std::pair<Q, Q> eval_complex(const P& p, const Q& x, const Q& y) {
  Q re = 0, im = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Q nr = re * x - im * y + p[i];
    const Q ni = re * y + im * x;
    re = nr;
    im = ni;
  }
  return {re, im};
}

}  // namespace oracle
