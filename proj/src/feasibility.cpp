#include "gr24adj/feasibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gr24 {

namespace {

// Affine constraint a . x + b >= 0.
struct AffRow {
  std::vector<Rat> a;
  Rat b;
};

void normalize_row(AffRow& r) {
  Rat scale(0);
  for (const auto& x : r.a)
    if (x != 0) {
      scale = abs(x);
      break;
    }
  if (scale == 0 && r.b != 0) scale = abs(r.b);
  if (scale == 0) return;
  for (auto& x : r.a) x /= scale;
  r.b /= scale;
}

// Fourier-Motzkin elimination of variable k from a system of >= 0 rows.
std::vector<AffRow> fm_eliminate(const std::vector<AffRow>& rows, std::size_t k) {
  std::vector<const AffRow*> pos, neg;
  std::vector<AffRow> out;
  std::set<std::pair<std::vector<Rat>, Rat>> seen;
  auto keep = [&](AffRow r) {
    normalize_row(r);
    if (seen.insert({r.a, r.b}).second) out.push_back(std::move(r));
  };
  for (const auto& r : rows) {
    int s = r.a[k].sign();
    if (s > 0) pos.push_back(&r);
    else if (s < 0) neg.push_back(&r);
    else keep(r);
  }
  for (const auto* p : pos)
    for (const auto* n : neg) {
      AffRow r;
      r.a.resize(p->a.size());
      Rat cp = p->a[k], cn = -n->a[k];
      for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = cn * p->a[j] + cp * n->a[j];
      r.b = cn * p->b + cp * n->b;
      r.a[k] = 0;
      keep(std::move(r));
    }
  return out;
}

// Minimum of l^T G l over the standard simplex, with a minimizer.
std::pair<Rat, std::vector<Rat>> simplex_quadratic_argmin(const Mat<Rat>& G) {
  std::size_t k = G.rows;
  Rat best;
  std::vector<Rat> arg;
  bool have = false;
  auto offer = [&](const Rat& v, std::vector<Rat> l) {
    if (!have || v < best) {
      best = v;
      arg = std::move(l);
      have = true;
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rat> e(k, Rat(0));
    e[i] = 1;
    offer(G(i, i), std::move(e));
  }
  std::vector<std::size_t> supp;
  auto try_support = [&](const std::vector<std::size_t>& S) {
    std::size_t s = S.size();
    Mat<Rat> A(s + 1, s + 1);
    std::vector<Rat> rhs(s + 1, Rat(0));
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) A(i, j) = G(S[i], S[j]);
      A(i, s) = -1;
    }
    for (std::size_t j = 0; j < s; ++j) A(s, j) = 1;
    rhs[s] = 1;
    // Singular stationarity systems are skipped: their minima are also
    // attained with smaller support.
    if (rank(A) != s + 1) return;
    auto sol = solve(A, rhs);
    if (!sol) return;
    for (std::size_t i = 0; i < s; ++i)
      if ((*sol)[i] < 0) return;
    std::vector<Rat> l(k, Rat(0));
    for (std::size_t i = 0; i < s; ++i) l[S[i]] = (*sol)[i];
    offer((*sol)[s], std::move(l));
  };
  // Supports beyond rank(G)+1 give singular systems; do not enumerate them.
  std::size_t cap = std::min(k, rank(G) + 1);
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (supp.size() >= 2) try_support(supp);
    if (supp.size() >= cap) return;
    for (std::size_t i = start; i < k; ++i) {
      supp.push_back(i);
      self(self, i + 1);
      supp.pop_back();
    }
  };
  rec(rec, 0);
  return {have ? best : Rat(0), std::move(arg)};
}

}  // namespace

LinFeas strict_feasible(const std::vector<std::vector<Rat>>& rows, std::size_t dim) {
  // max t subject to rows.x >= t, |x_i| <= 1; strictly feasible iff max > 0.
  std::size_t n = dim + 1;
  std::vector<AffRow> sys;
  for (const auto& r : rows) {
    AffRow ar;
    ar.a.assign(n, Rat(0));
    for (std::size_t j = 0; j < dim; ++j) ar.a[j] = r[j];
    ar.a[dim] = -1;
    ar.b = 0;
    sys.push_back(std::move(ar));
  }
  for (std::size_t j = 0; j < dim; ++j) {
    AffRow lo, hi;
    lo.a.assign(n, Rat(0));
    hi.a.assign(n, Rat(0));
    lo.a[j] = 1;
    lo.b = 1;
    hi.a[j] = -1;
    hi.b = 1;
    sys.push_back(std::move(lo));
    sys.push_back(std::move(hi));
  }

  std::vector<std::vector<AffRow>> stages;
  stages.push_back(std::move(sys));
  for (std::size_t k = 0; k < dim; ++k) stages.push_back(fm_eliminate(stages.back(), k));

  bool unbounded_above = true;
  Rat best_t;
  bool have = false;
  for (const auto& r : stages.back()) {
    int s = r.a[dim].sign();
    if (s == 0) {
      if (r.b < 0) return {};
      continue;
    }
    if (s < 0) {
      Rat ub = r.b / (-r.a[dim]);
      if (!have || ub < best_t) best_t = ub, have = true;
      unbounded_above = false;
    }
  }
  if (!unbounded_above && best_t <= 0) return {};
  Rat tstar = unbounded_above ? Rat(1) : best_t / 2;

  std::vector<Rat> x(n, Rat(0));
  x[dim] = tstar;
  for (std::size_t k = dim; k-- > 0;) {
    bool lo_set = false, hi_set = false;
    Rat lo, hi;
    for (const auto& r : stages[k]) {
      int s = r.a[k].sign();
      if (s == 0) continue;
      Rat rest = r.b;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k && r.a[j] != 0) rest += r.a[j] * x[j];
      Rat bound = -rest / r.a[k];
      if (s > 0) {
        if (!lo_set || bound > lo) lo = bound, lo_set = true;
      } else {
        if (!hi_set || bound < hi) hi = bound, hi_set = true;
      }
    }
    if (lo_set && hi_set) x[k] = (lo + hi) / 2;
    else if (lo_set) x[k] = lo + 1;
    else if (hi_set) x[k] = hi - 1;
  }
  LinFeas out;
  out.feasible = true;
  out.witness.assign(x.begin(), x.begin() + dim);
  return out;
}

std::vector<std::vector<Rat>> cone_generators(const std::vector<std::vector<Rat>>& rows,
                                              std::size_t dim) {
  std::vector<std::vector<Rat>> gens;
  std::set<std::vector<Rat>> seen;
  auto push = [&](std::vector<Rat> v) {
    Rat scale(0);
    for (const auto& x : v)
      if (x != 0) {
        scale = abs(x);
        break;
      }
    if (scale == 0) return;
    for (auto& x : v) x /= scale;
    if (seen.insert(v).second) gens.push_back(std::move(v));
  };

  Mat<Rat> A(0, dim);
  A.cols = dim;
  for (const auto& r : rows) A.append_row(r);
  std::vector<std::vector<Rat>> lineality;
  if (rows.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Rat> e(dim, Rat(0));
      e[i] = 1;
      lineality.push_back(e);
    }
  } else {
    lineality = nullspace(A);
  }
  for (const auto& v : lineality) {
    push(v);
    std::vector<Rat> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    push(std::move(neg));
  }

  auto satisfied = [&](const std::vector<Rat>& v) {
    for (const auto& r : rows) {
      Rat s(0);
      for (std::size_t j = 0; j < dim; ++j) s += r[j] * v[j];
      if (s < 0) return false;
    }
    return true;
  };
  auto consider = [&](const std::vector<std::size_t>& subset) {
    Mat<Rat> S(0, dim);
    S.cols = dim;
    for (auto i : subset) S.append_row(rows[i]);
    for (const auto& v : lineality) S.append_row(v);
    auto ker = nullspace(S);
    if (ker.size() != 1) return;
    const auto& v = ker[0];
    std::vector<Rat> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    if (satisfied(v)) push(v);
    if (satisfied(neg)) push(std::move(neg));
  };
  std::size_t m = rows.size();
  std::size_t want = dim == 0 ? 0 : dim - 1;
  if (want > m) want = m;
  std::vector<std::size_t> subset;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (subset.size() == want) {
      consider(subset);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
  return gens;
}

QFeas quadric_strict_feasible(const Mat<Rat>& M, const std::vector<std::vector<Rat>>& rows) {
  std::size_t dim = M.cols;
  QFeas out;
  auto lin = strict_feasible(rows, dim);
  if (!lin.feasible) {
    out.reason = "open cone empty";
    return out;
  }
  bool mzero = true;
  for (const auto& x : M.a)
    if (x != 0) {
      mzero = false;
      break;
    }
  auto qval = [&](const std::vector<Rat>& x) {
    Rat s(0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) s += M(i, j) * x[i] * x[j];
    return s;
  };
  if (mzero || qval(lin.witness) == 0) {
    out.feasible = true;
    out.point = lin.witness;
    return out;
  }

  auto gens = cone_generators(rows, dim);
  auto in_open_cone = [&](const std::vector<Rat>& x) {
    for (const auto& r : rows) {
      Rat s(0);
      for (std::size_t j = 0; j < dim; ++j) s += r[j] * x[j];
      if (s <= 0) return false;
    }
    return true;
  };
  auto combine = [&](const std::vector<Rat>& l) {
    std::vector<Rat> x(dim, Rat(0));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t a = 0; a < dim; ++a) x[a] += l[i] * gens[i][a];
    return x;
  };

  // Quick sign evidence on the closed cone.
  std::vector<Rat> negpt, pospt;
  auto note = [&](const std::vector<Rat>& x) {
    int s = qval(x).sign();
    if (s < 0 && negpt.empty()) negpt = x;
    if (s > 0 && pospt.empty()) pospt = x;
  };
  note(lin.witness);
  for (std::size_t i = 0; i < gens.size() && (negpt.empty() || pospt.empty()); ++i) {
    note(gens[i]);
    std::vector<Rat> s(dim);
    for (std::size_t a = 0; a < dim; ++a) s[a] = gens[i][a] + lin.witness[a];
    note(s);
    for (std::size_t j = i + 1; j < gens.size() && (negpt.empty() || pospt.empty()); ++j) {
      std::vector<Rat> t(dim);
      for (std::size_t a = 0; a < dim; ++a) t[a] = gens[i][a] + gens[j][a];
      note(t);
    }
  }

  // Kernel points of M inside the cone settle the sign-definite cases.
  auto kernel_point = [&]() -> std::optional<std::vector<Rat>> {
    Mat<Rat> MM = M;
    auto ker = nullspace(MM);
    if (ker.empty()) return std::nullopt;
    std::vector<std::vector<Rat>> krows;
    for (const auto& r : rows) {
      std::vector<Rat> kr(ker.size(), Rat(0));
      for (std::size_t j = 0; j < ker.size(); ++j)
        for (std::size_t a = 0; a < dim; ++a) kr[j] += r[a] * ker[j][a];
      krows.push_back(std::move(kr));
    }
    auto kin = strict_feasible(krows, ker.size());
    if (!kin.feasible) return std::nullopt;
    std::vector<Rat> x(dim, Rat(0));
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (std::size_t a = 0; a < dim; ++a) x[a] += kin.witness[j] * ker[j][a];
    return x;
  };

  if (negpt.empty() || pospt.empty()) {
    std::size_t k = gens.size();
    Mat<Rat> G(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        Rat s(0);
        for (std::size_t a = 0; a < dim; ++a)
          for (std::size_t b = 0; b < dim; ++b) s += gens[i][a] * M(a, b) * gens[j][b];
        G(i, j) = s;
      }
    if (negpt.empty()) {
      auto [mn, arg] = simplex_quadratic_argmin(G);
      if (mn >= 0) {
        if (auto x = kernel_point()) {
          out.feasible = true;
          out.point = *x;
          return out;
        }
        out.reason = "quadric positive on open cone";
        return out;
      }
      negpt = combine(arg);
    }
    if (pospt.empty()) {
      Mat<Rat> G2 = G;
      for (auto& x : G2.a) x = -x;
      auto [mn, arg] = simplex_quadratic_argmin(G2);
      if (mn >= 0) {
        if (auto x = kernel_point()) {
          out.feasible = true;
          out.point = *x;
          return out;
        }
        out.reason = "quadric negative on open cone";
        return out;
      }
      pospt = combine(arg);
    }
  }

  // Both signs occur on the closed cone; mix with the interior witness to get
  // a bracket strictly inside the open cone.
  auto pull_inside = [&](std::vector<Rat> x, int want_sign) {
    if (in_open_cone(x) && qval(x).sign() == want_sign) return x;
    Rat eps(1);
    for (int iter = 0; iter < 256; ++iter) {
      std::vector<Rat> y(dim);
      for (std::size_t a = 0; a < dim; ++a) y[a] = x[a] + eps * lin.witness[a];
      if (in_open_cone(y) && qval(y).sign() == want_sign) return y;
      eps /= 2;
    }
    throw std::runtime_error("quadric_strict_feasible: bracket recovery failed");
  };
  auto a = pull_inside(std::move(negpt), -1);
  auto b = pull_inside(std::move(pospt), +1);
  out.feasible = true;

  // An exact rational zero on the segment when the discriminant is square.
  Rat qa = qval(a), qb = qval(b), bab(0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) bab += a[i] * M(i, j) * b[j];
  Rat A = qa - 2 * bab + qb, B = 2 * bab - 2 * qa, C = qa, root;
  if (A != 0 && is_square(B * B - 4 * A * C, &root)) {
    for (Rat s : {(-B + root) / (2 * A), (-B - root) / (2 * A)}) {
      if (s > 0 && s < 1) {
        std::vector<Rat> x(dim);
        for (std::size_t i = 0; i < dim; ++i) x[i] = (1 - s) * a[i] + s * b[i];
        if (in_open_cone(x) && qval(x) == 0) {
          out.point = x;
          return out;
        }
      }
    }
  }
  out.bracket = {std::move(a), std::move(b)};
  return out;
}

Rat simplex_quadratic_min(const Mat<Rat>& G) { return simplex_quadratic_argmin(G).first; }

}  // namespace gr24
