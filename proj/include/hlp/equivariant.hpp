#pragma once

#include <map>
#include <utility>

#include "hlp/four_manifold.hpp"
#include "hlp/laurent.hpp"

namespace hlp {

// One fixed component of the circle action: its cohomology model, moment
// value, the weight of the normal representation (semi-free, so +1 or -1),
// and the first Chern class of the normal bundle as seen from the component.
struct FixedComponentData {
  ModelPtr model;
  Rational moment_value;
  int normal_weight = +1;  // +1 at the minimum, -1 at the maximum
  CohClass normal_euler;

  FixedComponentData(ModelPtr m, Rational moment, int weight, CohClass euler);
};

// The simple Hamiltonian S^1-manifold with two 4-dimensional fixed
// components, identified along the gradient flow so both share one
// cohomology model. The constructor enforces the structure:
// weights (+1, -1), normal Euler classes (e, -e), moment(min) < moment(max),
// and w1 = w0 - e (Duistermaat-Heckman).
struct SimpleHamiltonianModel {
  ModelPtr base;
  FixedComponentData zmin, zmax;
  CohClass euler_e;
  SymplecticClass w0, w1;

  SimpleHamiltonianModel(ModelPtr base_, FixedComponentData zmin_,
                         FixedComponentData zmax_, CohClass e,
                         SymplecticClass w0_, SymplecticClass w1_);
};

// Finite Laurent polynomial in u with CohClass coefficients: the restriction
// of an equivariant class to one fixed component. Kirwan injectivity is what
// justifies storing classes purely by restrictions; there is no global
// cochain model anywhere in this library.
class EquivariantRestriction {
 public:
  explicit EquivariantRestriction(ModelPtr model) : model_(std::move(model)) {}

  static EquivariantRestriction from_class(const CohClass& c) {
    EquivariantRestriction r(c.model());
    r.add_term(0, c);
    return r;
  }
  static EquivariantRestriction monomial(const CohClass& c, int upow) {
    EquivariantRestriction r(c.model());
    r.add_term(upow, c);
    return r;
  }

  const ModelPtr& model() const { return model_; }
  const std::map<int, CohClass>& terms() const { return coef_; }
  CohClass coeff(int upow) const;
  bool is_zero() const { return coef_.empty(); }

  void add_term(int upow, const CohClass& c);

  EquivariantRestriction operator+(const EquivariantRestriction& o) const;
  EquivariantRestriction operator-(const EquivariantRestriction& o) const;
  EquivariantRestriction operator*(const EquivariantRestriction& o) const;
  friend EquivariantRestriction operator*(const Rational& s,
                                          const EquivariantRestriction& r);

  bool operator==(const EquivariantRestriction& o) const {
    return model_ == o.model_ && coef_ == o.coef_;
  }

  // Integrate every coefficient over the component; u-powers survive.
  LaurentU integrate_coefficients() const;

 private:
  ModelPtr model_;
  std::map<int, CohClass> coef_;  // zero coefficients never stored
};

// An equivariant class, stored by its two fixed-point restrictions.
struct EquivariantElement {
  EquivariantRestriction at_min, at_max;

  EquivariantElement(EquivariantRestriction mn, EquivariantRestriction mx);

  EquivariantElement operator+(const EquivariantElement& o) const {
    return {at_min + o.at_min, at_max + o.at_max};
  }
  EquivariantElement operator*(const EquivariantElement& o) const {
    return {at_min * o.at_min, at_max * o.at_max};
  }
  friend EquivariantElement operator*(const Rational& s,
                                      const EquivariantElement& e) {
    return {s * e.at_min, s * e.at_max};
  }
  bool operator==(const EquivariantElement& o) const {
    return at_min == o.at_min && at_max == o.at_max;
  }
};

// Equivariant first Chern class of a line bundle with fiberwise weight:
// c1 tensor 1 + weight * u. Any integer weight is accepted here; the
// pipeline itself only ever passes +-1.
EquivariantRestriction equivariant_chern_class(const CohClass& c1, int weight);

// Equivariant Euler class of the normal bundle of one fixed component:
// its first Chern class plus weight * u. At the minimum (weight +1, Chern
// class e) this is u + e; at the maximum (weight -1, Chern class -e) it is
// -u - e.
EquivariantRestriction euler_class(const FixedComponentData& fc);

// Exact inverse of a class s*u^k + nilpotent (s = +-1, geometric series
// terminates because positive-degree classes on a 4-manifold are nilpotent).
// Throws on zero scalar leading term ("non-invertible Euler class").
EquivariantRestriction invert_euler(const EquivariantRestriction& el);

// Restrictions of the equivariant symplectic class:
// w|_F tensor 1 - H(F) tensor u at each component.
EquivariantElement equivariant_symplectic(const SimpleHamiltonianModel& model);

// Canonical class of a degree-1 or degree-2 class on the minimum component.
// Under the gradient-flow identification both restrictions equal the class
// itself. Degree > 2 sources are unsupported (not needed for HR1/HR2).
EquivariantElement canonical_from_min(const SimpleHamiltonianModel& model,
                                      const CohClass& y);

// Canonical class of the unit on the maximum component: restriction 0 at the
// minimum and the Euler class of the normal bundle at the maximum.
EquivariantElement canonical_max_unit(const SimpleHamiltonianModel& model);

// The two summands of the localization formula, per fixed component:
// integral over F of (el|_F) / e_F, as Laurent polynomials in u.
std::pair<LaurentU, LaurentU> abbv_contributions(
    const SimpleHamiltonianModel& model, const EquivariantElement& el);

// Atiyah-Bott-Berline-Vergne sum. Exact; a genuine class of total degree 6
// yields a u-free value and anything of lower degree yields exactly zero.
LaurentU abbv_integrate(const SimpleHamiltonianModel& model,
                        const EquivariantElement& el);

}  // namespace hlp
