#pragma once

#include "sp1/pline.hpp"
#include "sp1/random.hpp"
#include "sp1/valfield.hpp"

// Random instances for invariant checks and property tests.
namespace sp1::sample {

/// Small rational with numerator in [-n, n] and denominator in [1, n].
Rational small_rational(Rng& rng, long n = 9);

/// Nonzero element with valuation roughly in [-3, 3]; p-adic draws are
/// p^k·u/v, t-adic draws are t^k·(u + v·t)/(1 + w·t).
FieldElem element(const FieldSpec& spec, Rng& rng);

/// Element or zero.
FieldElem element_or_zero(const FieldSpec& spec, Rng& rng);

/// Simple point (occasionally ∞), normalized.
PLinePoint simple(const FieldSpec& spec, Rng& rng);

/// Simple or ball point, normalized.
PLinePoint point(const FieldSpec& spec, Rng& rng);

/// Radius in {0, 1/2, 1, ..., 4}.
GammaValue radius(Rng& rng);

Poly poly(const FieldSpec& spec, Rng& rng, long max_degree);

}  // namespace sp1::sample
