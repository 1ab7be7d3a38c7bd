#pragma once

#include <utility>

#include "hlp/four_manifold.hpp"
#include "hlp/matrix.hpp"

namespace hlp {

// Ground-truth cohomology ring of the two-sphere bundle over N associated to
// the class e, presented by Leray-Hirsch: H*(N)[x] / (x^2 + e x) with x the
// degree-2 fiber class. Sign convention: x restricts to 0 on the minimum
// section and to -e on the maximum section, so pi*w0 + x restricts to w0 and
// w0 - e at the two sections. This module never touches the equivariant
// machinery; independence is the point.
class BundleRing {
 public:
  BundleRing(ModelPtr base, CohClass e);

  const ModelPtr& base() const { return base_; }
  const CohClass& euler() const { return e_; }

  ModelPtr base_;
  CohClass e_;
};

// pi*a + x * pi*b, reduced: every power of x above the first has been folded
// through x^2 = -e x.
struct BundleElement {
  CohClass base_part;   // a
  CohClass fiber_part;  // b

  bool operator==(const BundleElement& o) const {
    return base_part == o.base_part && fiber_part == o.fiber_part;
  }
};

BundleElement pullback(const BundleRing& ring, const CohClass& a);
BundleElement fiber_class(const BundleRing& ring);  // x

// (pi*a + x pi*b)(pi*c + x pi*d) = pi*(ac) + x pi*(ad + bc - e bd).
BundleElement ring_mul(const BundleRing& ring, const BundleElement& p,
                       const BundleElement& q);

BundleElement ring_add(const BundleRing& ring, const BundleElement& p,
                       const BundleElement& q);

// Integration over the 6-manifold: pushes x down once and integrates over N.
Rational bundle_integrate(const BundleRing& ring, const BundleElement& p);

// Hodge-Riemann matrices computed as honest cup products in the ring, with
// the symplectic class pi*w0 + x. Returned in the basis
// {pi*a_1, ..., pi*a_b2, x} for hr2 and {pi*g_i} for hr1.
std::pair<QMatrix, QMatrix> oracle_hr_matrices(const BundleRing& ring,
                                               const SymplecticClass& w0);

// integral over the bundle of (pi*w0 + x)^3.
Rational oracle_top_integral(const BundleRing& ring, const SymplecticClass& w0);

// Transition from the oracle hr2 basis {pi*a_1..pi*a_b2, x} to the engine
// basis {canonical classes, canonical max unit}: the identity, recorded
// explicitly because the equality test depends on this convention.
QMatrix oracle_basis_transition(const BundleRing& ring);

// Middle-degree (H^3 x H^3) Poincare pairing of the 6-manifold, in the basis
// {pi* of the degree-3 basis} followed by {x * pi* of the degree-1 basis};
// non-singular for every valid base.
QMatrix bundle_middle_pairing(const BundleRing& ring);

}  // namespace hlp
