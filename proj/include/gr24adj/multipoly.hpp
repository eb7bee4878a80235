#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "gr24adj/matrix.hpp"
#include "gr24adj/rat.hpp"
#include "gr24adj/unipoly.hpp"

namespace gr24 {

using Expo = std::vector<int>;

inline int total_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic, higher terms first.
struct GrLexDesc {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial over F in a fixed number of variables.
template <class F>
struct MultiPoly {
  std::size_t nvars = 0;
  std::map<Expo, F, GrLexDesc> terms;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t n) : nvars(n) {}

  static MultiPoly constant(std::size_t n, const F& v) {
    MultiPoly p(n);
    if (!(v == F(0))) p.terms[Expo(n, 0)] = v;
    return p;
  }
  static MultiPoly variable(std::size_t n, std::size_t i, const F& coef = F(1)) {
    MultiPoly p(n);
    Expo e(n, 0);
    e[i] = 1;
    if (!(coef == F(0))) p.terms[e] = coef;
    return p;
  }
  static MultiPoly linear_form(const std::vector<F>& coeffs) {
    MultiPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == F(0)) continue;
      Expo e(coeffs.size(), 0);
      e[i] = 1;
      p.terms[e] = coeffs[i];
    }
    return p;
  }

  bool zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : total_degree(terms.begin()->first); }

  bool homogeneous() const {
    if (terms.empty()) return true;
    int d = degree();
    for (auto& [e, c] : terms)
      if (total_degree(e) != d) return false;
    return true;
  }

  void add_term(const Expo& e, const F& v) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (!(v == F(0))) terms.emplace(e, v);
    } else {
      it->second = it->second + v;
      if (it->second == F(0)) terms.erase(it);
    }
  }

  F coeff(const Expo& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? F(0) : it->second;
  }

  F eval(const std::vector<F>& x) const {
    F s(0);
    for (auto& [e, c] : terms) {
      F t = c;
      for (std::size_t i = 0; i < nvars; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * x[i];
      s = s + t;
    }
    return s;
  }

  bool operator==(const MultiPoly& o) const { return nvars == o.nvars && terms == o.terms; }
};

template <class F>
MultiPoly<F> operator+(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  MultiPoly<F> r = a;
  for (auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

template <class F>
MultiPoly<F> operator-(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  MultiPoly<F> r = a;
  for (auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

template <class F>
MultiPoly<F> operator*(const F& s, const MultiPoly<F>& a) {
  MultiPoly<F> r(a.nvars);
  if (s == F(0)) return r;
  for (auto& [e, c] : a.terms) r.terms[e] = s * c;
  return r;
}

template <class F>
MultiPoly<F> operator*(const MultiPoly<F>& a, const MultiPoly<F>& b) {
  MultiPoly<F> r(a.nvars);
  for (auto& [ea, ca] : a.terms)
    for (auto& [eb, cb] : b.terms) {
      Expo e(a.nvars);
      for (std::size_t i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

template <class F>
MultiPoly<F> pow(const MultiPoly<F>& a, int k) {
  MultiPoly<F> r = MultiPoly<F>::constant(a.nvars, F(1));
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

// Substitute variable i by images[i]; all images share a variable count.
template <class F>
MultiPoly<F> compose(const MultiPoly<F>& f, const std::vector<MultiPoly<F>>& images) {
  std::size_t m = images.empty() ? 0 : images[0].nvars;
  MultiPoly<F> r(m);
  for (auto& [e, c] : f.terms) {
    MultiPoly<F> t = MultiPoly<F>::constant(m, c);
    for (std::size_t i = 0; i < f.nvars; ++i)
      if (e[i] > 0) t = t * pow(images[i], e[i]);
    r = r + t;
  }
  return r;
}

// Restriction of f along a linear parametrization x = sum_j t_j * basis[j].
template <class F>
MultiPoly<F> restrict_linear(const MultiPoly<F>& f, const std::vector<std::vector<F>>& basis) {
  std::size_t m = basis.size();
  std::vector<MultiPoly<F>> images;
  for (std::size_t i = 0; i < f.nvars; ++i) {
    MultiPoly<F> xi(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (basis[j][i] == F(0)) continue;
      Expo e(m, 0);
      e[j] = 1;
      xi.add_term(e, basis[j][i]);
    }
    images.push_back(std::move(xi));
  }
  return compose(f, images);
}

template <class F>
UniPoly<F> to_unipoly(const MultiPoly<F>& f) {
  std::vector<F> c;
  for (auto& [e, v] : f.terms) {
    for (std::size_t i = 1; i < f.nvars; ++i)
      if (e[i] != 0) throw std::domain_error("to_unipoly: not univariate");
    std::size_t k = f.nvars == 0 ? 0 : static_cast<std::size_t>(e[0]);
    if (c.size() <= k) c.resize(k + 1, F(0));
    c[k] = v;
  }
  return UniPoly<F>(std::move(c));
}

// Dehomogenize a binary form at u = 1 (variables t, u).
template <class F>
UniPoly<F> binary_dehom(const MultiPoly<F>& f) {
  std::vector<F> c;
  for (auto& [e, v] : f.terms) {
    std::size_t k = static_cast<std::size_t>(e[0]);
    if (c.size() <= k) c.resize(k + 1, F(0));
    c[k] = v;
  }
  return UniPoly<F>(std::move(c));
}

// All exponent vectors of total degree d in n variables, grlex-descending.
inline std::vector<Expo> monomials_of_degree(std::size_t n, int d) {
  std::vector<Expo> out;
  Expo e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
    if (i + 1 == n) {
      e[i] = rem;
      out.push_back(e);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, rem - k);
    }
    e[i] = 0;
  };
  if (n == 0) return out;
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrLexDesc{});
  return out;
}

// Coefficient vector of f on monomials_of_degree(n, d).
template <class F>
std::vector<F> coeff_vector(const MultiPoly<F>& f, const std::vector<Expo>& basis) {
  std::vector<F> v;
  v.reserve(basis.size());
  for (auto& e : basis) v.push_back(f.coeff(e));
  return v;
}

template <class F>
MultiPoly<F> from_coeff_vector(std::size_t n, const std::vector<Expo>& basis,
                               const std::vector<F>& v) {
  MultiPoly<F> f(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(v[i] == F(0))) f.terms[basis[i]] = v[i];
  return f;
}

template <class F>
std::string poly_to_string(const MultiPoly<F>& f, const std::vector<std::string>& names,
                           std::string (*fmt)(const F&)) {
  if (f.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : f.terms) {
    std::string cs = fmt(c);
    if (!first) os << (cs[0] == '-' ? " - " : " + ");
    else if (cs[0] == '-') os << "-";
    std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
    std::string mono;
    for (std::size_t i = 0; i < f.nvars; ++i) {
      for (int k = 0; k < e[i]; ++k) {
        if (!mono.empty()) mono += "*";
        mono += names[i];
      }
    }
    if (mono.empty()) os << mag;
    else if (mag == "1") os << mono;
    else os << mag << "*" << mono;
    first = false;
  }
  return os.str();
}

}  // namespace gr24
