#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "gr24adj/rat.hpp"
#include "gr24adj/unipoly.hpp"

namespace gr24 {

// A fixed real root theta of an irreducible monic rational quadratic
// t^2 + c1 t + c0, selected by an isolating interval.
struct QuadCtx {
  Rat c1, c0;
  mutable Rat lo, hi;  // isolating interval, refined on demand

  QuadCtx(Rat c1_, Rat c0_, Rat lo_, Rat hi_)
      : c1(std::move(c1_)), c0(std::move(c0_)), lo(std::move(lo_)), hi(std::move(hi_)) {
    if (eval(lo).sign() == 0 || eval(hi).sign() == 0 || eval(lo).sign() == eval(hi).sign())
      throw std::invalid_argument("QuadCtx: not an isolating interval");
  }

  Rat eval(const Rat& t) const { return t * t + c1 * t + c0; }

  void refine() const {
    Rat mid = (lo + hi) / 2;
    // theta is irrational, so the minimal polynomial cannot vanish at mid
    if (eval(mid).sign() == eval(lo).sign()) lo = mid;
    else hi = mid;
  }

  // Exact position of theta relative to a rational r.
  int compare_root(const Rat& r) const {
    while (lo < r && r < hi) refine();
    if (r <= lo) return 1;
    return -1;
  }

  bool same(const QuadCtx& o) const { return c1 == o.c1 && c0 == o.c0 && !(hi <= o.lo) && !(o.hi <= lo); }
};

// Element a + b*theta of the real quadratic field Q(theta).
class QuadExt {
 public:
  Rat a, b;
  std::shared_ptr<const QuadCtx> ctx;

  QuadExt() : a(0), b(0) {}
  QuadExt(int v) : a(v), b(0) {}  // NOLINT: implicit by design
  QuadExt(Rat v) : a(std::move(v)), b(0) {}
  QuadExt(Rat a_, Rat b_, std::shared_ptr<const QuadCtx> c)
      : a(std::move(a_)), b(std::move(b_)), ctx(b == 0 ? nullptr : std::move(c)) {}

  static QuadExt theta(std::shared_ptr<const QuadCtx> c) { return QuadExt(Rat(0), Rat(1), std::move(c)); }

  bool rational() const { return b == 0; }

  QuadExt conj() const {
    if (rational()) return *this;
    return QuadExt(a - b * ctx->c1, -b, ctx);
  }
  Rat norm() const {  // product with the conjugate
    if (rational()) return a * a;
    return a * a - a * b * ctx->c1 + b * b * ctx->c0;
  }
  Rat trace_half_sum() const {  // this + conj, as a rational
    if (rational()) return a + a;
    return a + a - b * ctx->c1;
  }

  int sgn() const {
    if (b == 0) return a.sign();
    int cmp = ctx->compare_root(-a / b);  // sign of (theta - (-a/b))
    return b.sign() * cmp;
  }

  friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b, x.ctx); }
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a + y.a, x.b + y.b, merged(x, y));
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    return QuadExt(x.a - y.a, x.b - y.b, merged(x, y));
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    auto c = merged(x, y);
    Rat prod_bb = x.b * y.b;
    if (prod_bb == 0) return QuadExt(x.a * y.a, x.a * y.b + x.b * y.a, c);
    // theta^2 = -c1 theta - c0
    return QuadExt(x.a * y.a - prod_bb * c->c0, x.a * y.b + x.b * y.a - prod_bb * c->c1, c);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.a == 0 && y.b == 0) throw std::domain_error("QuadExt division by zero");
    if (y.rational()) return QuadExt(x.a / y.a, x.b / y.a, x.ctx);
    QuadExt inv = y.conj();
    Rat n = y.norm();
    inv.a /= n;
    inv.b /= n;
    return x * inv;
  }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sgn() < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sgn() > 0; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sgn() <= 0; }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sgn() >= 0; }

  double to_double() const {
    if (rational()) return gr24::to_double(a);
    while (ctx->hi - ctx->lo > Rat(1, 1000000)) ctx->refine();
    return gr24::to_double(a) + gr24::to_double(b) * gr24::to_double((ctx->lo + ctx->hi) / 2);
  }

  std::string str() const {
    if (rational()) return rat_to_string(a);
    return rat_to_string(a) + (b.sign() < 0 ? "-" : "+") + rat_to_string(abs(b)) + "*th";
  }

 private:
  static std::shared_ptr<const QuadCtx> merged(const QuadExt& x, const QuadExt& y) {
    if (!x.ctx) return y.ctx;
    if (!y.ctx) return x.ctx;
    if (x.ctx != y.ctx && !x.ctx->same(*y.ctx))
      throw std::domain_error("QuadExt: mixing distinct extensions");
    return x.ctx;
  }
};

template <>
inline int sign_of<QuadExt>(const QuadExt& x) {
  return x.sgn();
}

}  // namespace gr24
