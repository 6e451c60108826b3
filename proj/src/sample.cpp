#include "sp1/sample.hpp"

namespace sp1::sample {

Rational small_rational(Rng& rng, long n) {
  Rational q(rng.uniform(-n, n), rng.uniform(1, n));
  q.canonicalize();
  return q;
}

FieldElem element(const FieldSpec& spec, Rng& rng) {
  const long k = rng.uniform(-3, 3);
  if (spec.kind() == "padic") {
    long u = 0;
    while (u == 0) u = rng.uniform(-20, 20);
    Rational q(u, rng.uniform(1, 20));
    q.canonicalize();
    Rational scale = 1;
    const Rational p(spec.p());
    for (long i = 0; i < (k < 0 ? -k : k); ++i) scale *= p;
    return FieldElem(k < 0 ? Rational(q / scale) : Rational(q * scale));
  }
  long u = 0;
  while (u == 0) u = rng.uniform(-5, 5);
  FieldElem t = FieldElem::t();
  FieldElem a = FieldElem(u) + FieldElem(rng.uniform(-5, 5)) * t;
  a = a / (FieldElem(1) + FieldElem(rng.uniform(-3, 3)) * t);
  for (long i = 0; i < (k < 0 ? -k : k); ++i) a = k < 0 ? a / t : a * t;
  return a;
}

FieldElem element_or_zero(const FieldSpec& spec, Rng& rng) {
  return rng.uniform(0, 7) == 0 ? FieldElem(0) : element(spec, rng);
}

PLinePoint simple(const FieldSpec& spec, Rng& rng) {
  const long pick = rng.uniform(0, 15);
  if (pick == 0) return point_at_infinity();
  if (pick == 1) return simple_point(spec, FieldElem(0));
  return simple_point(spec, element(spec, rng));
}

GammaValue radius(Rng& rng) { return GammaValue(make_rational(rng.uniform(0, 8), 2)); }

PLinePoint point(const FieldSpec& spec, Rng& rng) {
  if (rng.coin()) return simple(spec, rng);
  const long r = rng.uniform(-8, 8);
  const Chart chart = rng.uniform(0, 3) == 0 ? Chart::Inv : Chart::Std;
  return normalize_point(spec, chart, element_or_zero(spec, rng), GammaValue(make_rational(r, 2)));
}

Poly poly(const FieldSpec& spec, Rng& rng, long max_degree) {
  std::vector<FieldElem> c;
  const long d = rng.uniform(0, max_degree);
  for (long i = 0; i <= d; ++i) c.push_back(element_or_zero(spec, rng));
  if (c.back().is_zero()) c.back() = element(spec, rng);
  return Poly(std::move(c));
}

}  // namespace sp1::sample
