#include "hlp/bundle.hpp"

#include <stdexcept>

namespace hlp {

BundleRing::BundleRing(ModelPtr base, CohClass e)
    : base_(std::move(base)), e_(std::move(e)) {
  if (e_.model() != base_)
    throw std::invalid_argument("e belongs to a different base model");
  auto deg = e_.homogeneous_degree();
  if (deg.has_value() && *deg != 2)
    throw std::invalid_argument("e must be concentrated in degree 2");
}

BundleElement pullback(const BundleRing& ring, const CohClass& a) {
  if (a.model() != ring.base_)
    throw std::invalid_argument("class belongs to a different base model");
  return {a, CohClass(ring.base_)};
}

BundleElement fiber_class(const BundleRing& ring) {
  return {CohClass(ring.base_), CohClass::unit(ring.base_)};
}

namespace {
void check_ring(const BundleRing& ring, const BundleElement& p) {
  if (p.base_part.model() != ring.base_ || p.fiber_part.model() != ring.base_)
    throw std::invalid_argument("element belongs to a different bundle ring");
}
}  // namespace

BundleElement ring_mul(const BundleRing& ring, const BundleElement& p,
                       const BundleElement& q) {
  check_ring(ring, p);
  check_ring(ring, q);
  const CohClass &a = p.base_part, &b = p.fiber_part;
  const CohClass &c = q.base_part, &d = q.fiber_part;
  CohClass base = cup(a, c);
  CohClass fiber = cup(a, d) + cup(b, c) - cup(ring.e_, cup(b, d));
  return {std::move(base), std::move(fiber)};
}

BundleElement ring_add(const BundleRing& ring, const BundleElement& p,
                       const BundleElement& q) {
  check_ring(ring, p);
  check_ring(ring, q);
  return {p.base_part + q.base_part, p.fiber_part + q.fiber_part};
}

Rational bundle_integrate(const BundleRing& ring, const BundleElement& p) {
  check_ring(ring, p);
  // The base part has degree <= 4 < 6 and integrates to zero; one power of x
  // integrates to 1 over the fiber.
  return p.fiber_part.integrate();
}

std::pair<QMatrix, QMatrix> oracle_hr_matrices(const BundleRing& ring,
                                               const SymplecticClass& w0) {
  const ModelPtr& base = ring.base_;
  if (w0.cls().model() != base)
    throw std::invalid_argument("w0 belongs to a different base model");
  const std::size_t b1 = base->b1, b2 = base->b2;

  BundleElement omega = ring_add(ring, pullback(ring, w0.cls()), fiber_class(ring));
  BundleElement omega2 = ring_mul(ring, omega, omega);

  std::vector<BundleElement> basis2;
  basis2.reserve(b2 + 1);
  for (std::size_t k = 0; k < b2; ++k)
    basis2.push_back(pullback(ring, CohClass::two_basis(base, k)));
  basis2.push_back(fiber_class(ring));

  QMatrix hr2(b2 + 1, b2 + 1);
  for (std::size_t i = 0; i <= b2; ++i)
    for (std::size_t j = i; j <= b2; ++j) {
      Rational v = bundle_integrate(
          ring, ring_mul(ring, ring_mul(ring, basis2[i], basis2[j]), omega));
      hr2.at(i, j) = v;
      hr2.at(j, i) = v;
    }

  QMatrix hr1(b1, b1);
  for (std::size_t i = 0; i < b1; ++i)
    for (std::size_t j = 0; j < b1; ++j) {
      BundleElement gi = pullback(ring, CohClass::one_basis(base, i));
      BundleElement gj = pullback(ring, CohClass::one_basis(base, j));
      hr1.at(i, j) = bundle_integrate(
          ring, ring_mul(ring, ring_mul(ring, gi, gj), omega2));
    }

  return {hr1, hr2};
}

Rational oracle_top_integral(const BundleRing& ring, const SymplecticClass& w0) {
  BundleElement omega = ring_add(ring, pullback(ring, w0.cls()), fiber_class(ring));
  return bundle_integrate(
      ring, ring_mul(ring, ring_mul(ring, omega, omega), omega));
}

QMatrix oracle_basis_transition(const BundleRing& ring) {
  // f* of the canonical max-unit class equals the fiber class x under this
  // ring's sign convention, so the bases match index by index.
  return QMatrix::identity(ring.base_->b2 + 1);
}

QMatrix bundle_middle_pairing(const BundleRing& ring) {
  const ModelPtr& base = ring.base_;
  const std::size_t b1 = base->b1;
  std::vector<BundleElement> basis;
  basis.reserve(2 * b1);
  for (std::size_t j = 0; j < b1; ++j)
    basis.push_back(pullback(ring, CohClass::three_class(
                                       base, [&] {
                                         std::vector<Rational> v(b1, Rational(0));
                                         v[j] = 1;
                                         return v;
                                       }())));
  for (std::size_t i = 0; i < b1; ++i)
    basis.push_back(ring_mul(ring, fiber_class(ring),
                             pullback(ring, CohClass::one_basis(base, i))));

  QMatrix pairing(2 * b1, 2 * b1);
  for (std::size_t i = 0; i < 2 * b1; ++i)
    for (std::size_t j = 0; j < 2 * b1; ++j)
      pairing.at(i, j) =
          bundle_integrate(ring, ring_mul(ring, basis[i], basis[j]));
  return pairing;
}

}  // namespace hlp
