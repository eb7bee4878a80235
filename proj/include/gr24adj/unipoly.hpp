#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gr24adj/rat.hpp"

namespace gr24 {

// Univariate polynomial, coefficients lowest degree first.
template <class F>
struct UniPoly {
  std::vector<F> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<F> coeffs) : c(std::move(coeffs)) { normalize(); }
  static UniPoly constant(const F& x) { return UniPoly(std::vector<F>{x}); }

  void normalize() {
    while (!c.empty() && c.back() == F(0)) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const F& leading() const { return c.back(); }
  F coeff(std::size_t k) const { return k < c.size() ? c[k] : F(0); }

  F eval(const F& x) const {
    F v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  }

  UniPoly derivative() const {
    if (c.size() <= 1) return {};
    std::vector<F> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * F(static_cast<int>(k));
    return UniPoly(std::move(d));
  }

  bool operator==(const UniPoly& o) const { return c == o.c; }
};

template <class F>
UniPoly<F> operator+(const UniPoly<F>& a, const UniPoly<F>& b) {
  std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
  return UniPoly<F>(std::move(r));
}

template <class F>
UniPoly<F> operator-(const UniPoly<F>& a, const UniPoly<F>& b) {
  std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
  return UniPoly<F>(std::move(r));
}

template <class F>
UniPoly<F> operator*(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<F> r(a.c.size() + b.c.size() - 1, F(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
  return UniPoly<F>(std::move(r));
}

template <class F>
UniPoly<F> operator*(const F& s, const UniPoly<F>& a) {
  std::vector<F> r = a.c;
  for (auto& x : r) x = x * s;
  return UniPoly<F>(std::move(r));
}

// Quotient and remainder; divisor must be nonzero.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(UniPoly<F> a, const UniPoly<F>& b) {
  if (b.zero()) throw std::domain_error("division by zero polynomial");
  std::vector<F> q(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 0, F(0));
  F inv = F(1) / b.leading();
  while (!a.zero() && a.degree() >= b.degree()) {
    std::size_t shift = a.degree() - b.degree();
    F f = a.leading() * inv;
    q[shift] = f;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      a.c[shift + i] = a.c[shift + i] - f * b.c[i];
    a.normalize();
  }
  return {UniPoly<F>(std::move(q)), std::move(a)};
}

template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.zero()) {
    F inv = F(1) / a.leading();
    for (auto& x : a.c) x = x * inv;
  }
  return a;
}

template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
  if (p.zero()) return p;
  auto g = gcd(p, p.derivative());
  return divmod(p, g).first;
}

// Exact division; throws when b does not divide a.
template <class F>
UniPoly<F> exact_div(const UniPoly<F>& a, const UniPoly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

template <class F>
int sign_of(const F& x);

template <>
inline int sign_of<Rat>(const Rat& x) {
  return x.sign();
}

template <class F>
struct SturmChain {
  std::vector<UniPoly<F>> seq;

  explicit SturmChain(const UniPoly<F>& p) {
    seq.push_back(p);
    auto d = p.derivative();
    if (!d.zero()) seq.push_back(d);
    while (seq.size() >= 2 && !seq.back().zero()) {
      auto r = divmod(seq[seq.size() - 2], seq.back()).second;
      if (r.zero()) break;
      for (auto& x : r.c) x = -x;
      seq.push_back(std::move(r));
    }
  }

  int variations(const F& x) const {
    int v = 0, prev = 0;
    for (const auto& s : seq) {
      int sg = sign_of<F>(s.eval(x));
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++v;
      prev = sg;
    }
    return v;
  }

  // Number of distinct real roots in (a, b]; requires squarefree head.
  int count(const F& a, const F& b) const { return variations(a) - variations(b); }
};

// Isolating interval for a real root: lo == hi encodes an exact rational root,
// otherwise the open interval (lo, hi) contains exactly one root.
template <class F>
struct RootInterval {
  F lo, hi;
  bool exact() const { return lo == hi; }
};

// Disjoint isolating intervals for the distinct real roots of p in (lo, hi).
template <class F>
std::vector<RootInterval<F>> sturm_isolate(const UniPoly<F>& p, const F& lo, const F& hi) {
  if (p.zero()) throw std::domain_error("zero polynomial");
  UniPoly<F> q = squarefree_part(p);
  std::vector<RootInterval<F>> out;
  // Exact roots at the open-interval endpoints are excluded up front.
  auto strip_root = [&q](const F& x) {
    UniPoly<F> lin(std::vector<F>{-x, F(1)});
    while (!q.zero() && q.eval(x) == F(0)) q = exact_div(q, lin);
  };
  strip_root(lo);
  strip_root(hi);
  if (q.degree() <= 0) return out;

  // Exact rational roots hit by bisection midpoints are peeled off q as they
  // are found; counts are always taken against the current chain, and every
  // subdivision endpoint is a verified non-root of the current q.
  SturmChain<F> chain(q);
  std::vector<std::pair<F, F>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (q.degree() <= 0) break;
    int n = chain.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({a, b});
      continue;
    }
    F mid = (a + b) / F(2);
    if (q.eval(mid) == F(0)) {
      out.push_back({mid, mid});
      UniPoly<F> lin(std::vector<F>{-mid, F(1)});
      q = exact_div(q, lin);
      chain = SturmChain<F>(q);
      if (q.degree() <= 0) continue;
    }
    stack.push_back({a, mid});
    stack.push_back({mid, b});
  }

  // Peeled rational roots may sit at the endpoints of other intervals; shrink
  // those so the full squarefree part is nonzero at every open endpoint. The
  // lone root inside each interval is a root of the final q, so q-signs steer
  // the halving.
  UniPoly<F> sf = squarefree_part(p);
  for (auto& iv : out) {
    if (iv.exact()) continue;
    while (sf.eval(iv.lo) == F(0) || sf.eval(iv.hi) == F(0)) {
      F mid = (iv.lo + iv.hi) / F(2);
      if (sign_of<F>(q.eval(mid)) == sign_of<F>(q.eval(iv.lo)))
        iv.lo = mid;
      else
        iv.hi = mid;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval<F>& x, const RootInterval<F>& y) { return x.lo < y.lo; });
  return out;
}

// Halve the width of an isolating interval (no-op for exact roots).
template <class F>
void refine_root(const UniPoly<F>& squarefree, RootInterval<F>& iv) {
  if (iv.exact()) return;
  F mid = (iv.lo + iv.hi) / F(2);
  F vm = squarefree.eval(mid);
  if (vm == F(0)) {
    iv.lo = iv.hi = mid;
    return;
  }
  F va = squarefree.eval(iv.lo);
  if (sign_of<F>(va) != 0 && sign_of<F>(va) == sign_of<F>(vm))
    iv.lo = mid;
  else
    iv.hi = mid;
}

template <class F>
void refine_to_width(const UniPoly<F>& squarefree, RootInterval<F>& iv, const F& width) {
  while (!iv.exact() && iv.hi - iv.lo >= width) refine_root(squarefree, iv);
}

}  // namespace gr24
