#include "artri/poly.hpp"

#include <algorithm>

#include "artri/linalg.hpp"

namespace artri {

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Fp& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b, const Fp& f) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  return poly_trim(std::move(r));
}

namespace {

// quotient and remainder in one pass
std::pair<Poly, Poly> divmod(const Poly& a0, const Poly& b0, const Fp& f) {
  Poly a = poly_trim(a0);
  Poly b = poly_trim(b0);
  if (b.empty()) throw Error(ErrorCode::DimensionMismatch, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  Scalar lead_inv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar c = f.mul(a[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = f.sub(a[k + j], f.mul(c, b[j]));
  }
  return {poly_trim(std::move(q)), poly_trim(std::move(a))};
}

Poly monic(Poly a, const Fp& f) {
  a = poly_trim(std::move(a));
  if (a.empty()) return a;
  Scalar inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  return a;
}

// x^e mod m by square-and-multiply, with base polynomial b
Poly powmod(Poly b, std::uint64_t e, const Poly& m, const Fp& f) {
  Poly r{1};
  b = poly_mod(b, m, f);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, b, f), m, f);
    b = poly_mod(poly_mul(b, b, f), m, f);
    e >>= 1;
  }
  return r;
}

void split_roots(const Poly& g, const Fp& f, std::mt19937_64& rng, std::vector<Scalar>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    // g = g0 + g1 x
    out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p() - 1);
  for (;;) {
    Scalar a = static_cast<Scalar>(dist(rng));
    Poly h = powmod(Poly{a, 1}, (f.p() - 1) / 2, g, f);
    h = poly_sub(h, Poly{1}, f);
    Poly d = monic(poly_gcd(g, h, f), f);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, f, rng, out);
      split_roots(poly_div(g, d, f), f, rng, out);
      return;
    }
  }
}

}  // namespace

Poly poly_mod(const Poly& a, const Poly& b, const Fp& f) { return divmod(a, b, f).second; }
Poly poly_div(const Poly& a, const Poly& b, const Fp& f) { return divmod(a, b, f).first; }

Poly poly_gcd(Poly a, Poly b, const Fp& f) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), f);
}

Scalar poly_eval(const Poly& a, Scalar x, const Fp& f) {
  Scalar r = 0;
  for (std::size_t k = a.size(); k-- > 0;) r = f.add(f.mul(r, x), a[k]);
  return r;
}

Poly minimal_polynomial(const Mat& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const Fp& f = m.field();
  const std::size_t n = m.rows();
  Coordinates powers(n * n, f);
  Mat cur = Mat::identity(n, f);
  for (std::size_t k = 0;; ++k) {
    if (auto c = powers.push(std::span<const Scalar>(cur.data().data(), n * n))) {
      Poly q(k + 1, 0);
      for (std::size_t i = 0; i < k; ++i) q[i] = f.neg((*c)[i]);
      q[k] = 1;
      return q;
    }
    cur = cur * m;
  }
}

std::vector<Scalar> poly_roots(const Poly& a0, const Fp& f, std::mt19937_64& rng) {
  Poly a = poly_trim(a0);
  std::vector<Scalar> roots;
  if (a.size() <= 1) return roots;
  if (f.p() <= 4096) {
    for (Scalar x = 0; x < f.p(); ++x)
      if (poly_eval(a, x, f) == 0) roots.push_back(x);
    return roots;
  }
  // product of the distinct linear factors: gcd(a, x^p - x)
  Poly a_monic = monic(a, f);
  Poly xp = powmod(Poly{0, 1}, f.p(), a_monic, f);
  Poly g = poly_gcd(a_monic, poly_sub(xp, Poly{0, 1}, f), f);
  split_roots(g, f, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::size_t root_multiplicity(const Poly& a0, Scalar r, const Fp& f) {
  Poly a = poly_trim(a0);
  std::size_t m = 0;
  const Poly lin{f.neg(r), 1};
  while (a.size() > 1 && poly_eval(a, r, f) == 0) {
    a = poly_div(a, lin, f);
    ++m;
  }
  return m;
}

}  // namespace artri
