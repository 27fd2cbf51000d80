#include "artri/splitting.hpp"

#include "artri/linalg.hpp"
#include "artri/poly.hpp"

namespace artri {

Mat mat_pow(Mat m, std::size_t e) {
  Mat r = Mat::identity(m.rows(), m.field());
  while (e) {
    if (e & 1) r = r * m;
    e >>= 1;
    if (e) m = m * m;
  }
  return r;
}

namespace {

std::vector<Scalar> flat(const Mat& m) { return m.data(); }

Mat combine(const std::vector<Mat>& basis, const std::vector<Scalar>& c) {
  Mat r(basis[0].rows(), basis[0].cols(), basis[0].field());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i]) r = r + basis[i].scaled(c[i]);
  return r;
}

// Power chain of a set of square matrices; returns the index k with N^k = 0,
// or 0 if the chain stalls before reaching zero.
std::size_t nilpotency_index(const std::vector<Mat>& gens) {
  if (gens.empty()) return 1;
  const std::size_t n = gens[0].rows();
  const Fp& f = gens[0].field();
  if (n == 0) return 1;
  RowSpace first(n * n, f);
  for (const auto& g : gens) first.add(flat(g));
  std::vector<Mat> cur;
  auto unflat = [&](const Mat& b, std::size_t r) {
    Mat m(n, n, f);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = b(r, i);
    return m;
  };
  Mat fb = first.basis();
  std::vector<Mat> base;
  for (std::size_t r = 0; r < fb.rows(); ++r) base.push_back(unflat(fb, r));
  cur = base;
  std::size_t k = 1;
  std::size_t prev = cur.size() + 1;
  while (!cur.empty()) {
    if (cur.size() >= prev || k > n + 1) return 0;
    prev = cur.size();
    RowSpace next(n * n, f);
    for (const auto& a : base)
      for (const auto& b : cur) next.add(flat(a * b));
    Mat nb = next.basis();
    cur.clear();
    for (std::size_t r = 0; r < nb.rows(); ++r) cur.push_back(unflat(nb, r));
    ++k;
  }
  return k;
}

struct Spectrum {
  std::vector<Scalar> roots;
  bool single = false;  // min poly is (x - root)^k
};

Spectrum spectrum(const Mat& top, std::mt19937_64& rng) {
  Spectrum s;
  if (top.rows() == 0) return s;
  Poly mp = minimal_polynomial(top);
  s.roots = poly_roots(mp, top.field(), rng);
  s.single = s.roots.size() == 1 && root_multiplicity(mp, s.roots[0], top.field()) + 1 == mp.size();
  return s;
}

}  // namespace

SplitResult analyze_endomorphisms(const EndoAlgebra& e, std::mt19937_64& rng, int trials) {
  SplitResult res;
  if (e.basis.empty()) throw Error(ErrorCode::ZeroModule, "empty endomorphism algebra");
  const Fp& f = e.basis[0].field();
  const std::size_t n = e.basis[0].rows();

  auto split_with = [&](const Mat& phi, Scalar lambda) {
    Mat shifted = phi - Mat::identity(n, f).scaled(lambda);
    res.local = false;
    res.fitting = mat_pow(shifted, n);
  };

  std::vector<Scalar> lambdas;
  bool all_single = true;
  for (std::size_t i = 0; i < e.basis.size(); ++i) {
    Spectrum s = spectrum(e.tops[i], rng);
    if (s.roots.size() >= 2 || (s.roots.size() == 1 && !s.single)) {
      split_with(e.basis[i], s.roots[0]);
      return res;
    }
    if (s.roots.empty()) {
      all_single = false;
      lambdas.push_back(0);
    } else {
      lambdas.push_back(s.roots[0]);
    }
  }
  if (all_single) {
    LocalityCert cert;
    cert.lambdas = lambdas;
    if (verify_locality(e, cert)) {
      std::vector<Mat> nbar;
      for (std::size_t i = 0; i < e.tops.size(); ++i)
        nbar.push_back(e.tops[i] - Mat::identity(e.tops[i].rows(), f).scaled(lambdas[i]));
      cert.radical_dim = e.basis.size() - 1;
      cert.nilpotency_index = nilpotency_index(nbar);
      res.local = true;
      res.cert = cert;
      return res;
    }
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p() - 1);
  for (int t = 0; t < trials; ++t) {
    std::vector<Scalar> c(e.basis.size());
    for (auto& x : c) x = static_cast<Scalar>(dist(rng));
    Spectrum s = spectrum(combine(e.tops, c), rng);
    if (s.roots.size() >= 2 || (s.roots.size() == 1 && !s.single)) {
      split_with(combine(e.basis, c), s.roots[0]);
      return res;
    }
  }
  throw Error(ErrorCode::SplitnessViolation,
              "no Fitting split and no locality certificate after " + std::to_string(trials) + " trials");
}

bool verify_locality(const EndoAlgebra& e, const LocalityCert& cert) {
  if (cert.lambdas.size() != e.basis.size() || e.basis.empty()) return false;
  const Fp& f = e.basis[0].field();
  const std::size_t n = e.basis[0].rows();
  // codimension one in the algebra
  RowSpace span(n * n, f);
  for (std::size_t i = 0; i < e.basis.size(); ++i)
    span.add(flat(e.basis[i] - Mat::identity(n, f).scaled(cert.lambdas[i])));
  if (span.dim() + 1 != e.basis.size()) return false;
  std::vector<Mat> nbar;
  for (std::size_t i = 0; i < e.tops.size(); ++i)
    nbar.push_back(e.tops[i] - Mat::identity(e.tops[i].rows(), f).scaled(cert.lambdas[i]));
  return nilpotency_index(nbar) != 0;
}

}  // namespace artri
