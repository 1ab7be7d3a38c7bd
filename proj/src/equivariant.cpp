#include "hlp/equivariant.hpp"

#include <stdexcept>

namespace hlp {

FixedComponentData::FixedComponentData(ModelPtr m, Rational moment, int weight,
                                       CohClass euler)
    : model(std::move(m)),
      moment_value(std::move(moment)),
      normal_weight(weight),
      normal_euler(std::move(euler)) {
  if (weight != 1 && weight != -1)
    throw std::invalid_argument("semi-free action: normal weight must be +1 or -1");
  if (normal_euler.model() != model)
    throw std::invalid_argument("normal Euler class belongs to a different model");
  auto deg = normal_euler.homogeneous_degree();
  if (deg.has_value() && *deg != 2)
    throw std::invalid_argument("normal Euler class must be concentrated in degree 2");
}

SimpleHamiltonianModel::SimpleHamiltonianModel(ModelPtr base_,
                                               FixedComponentData zmin_,
                                               FixedComponentData zmax_,
                                               CohClass e, SymplecticClass w0_,
                                               SymplecticClass w1_)
    : base(std::move(base_)),
      zmin(std::move(zmin_)),
      zmax(std::move(zmax_)),
      euler_e(std::move(e)),
      w0(std::move(w0_)),
      w1(std::move(w1_)) {
  if (zmin.model != base || zmax.model != base || euler_e.model() != base ||
      w0.cls().model() != base || w1.cls().model() != base)
    throw std::invalid_argument("fixed components must share the base model");
  if (!(zmin.moment_value < zmax.moment_value))
    throw std::invalid_argument("moment values must satisfy min < max");
  if (zmin.normal_weight != 1 || zmax.normal_weight != -1)
    throw std::invalid_argument("weights must be +1 at the minimum and -1 at the maximum");
  if (zmin.normal_euler != euler_e || zmax.normal_euler != Rational(-1) * euler_e)
    throw std::invalid_argument("normal Euler classes must be e and -e");
  if (w1.cls() != w0.cls() - euler_e)
    throw std::invalid_argument("w1 = w0 - e must hold");
}

CohClass EquivariantRestriction::coeff(int upow) const {
  auto it = coef_.find(upow);
  return it == coef_.end() ? CohClass(model_) : it->second;
}

void EquivariantRestriction::add_term(int upow, const CohClass& c) {
  if (c.model() != model_)
    throw std::invalid_argument("coefficient belongs to a different model");
  if (c.is_zero()) return;
  auto [it, fresh] = coef_.emplace(upow, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) coef_.erase(it);
  }
}

EquivariantRestriction EquivariantRestriction::operator+(
    const EquivariantRestriction& o) const {
  EquivariantRestriction out = *this;
  for (const auto& [p, c] : o.coef_) out.add_term(p, c);
  return out;
}

EquivariantRestriction EquivariantRestriction::operator-(
    const EquivariantRestriction& o) const {
  EquivariantRestriction out = *this;
  for (const auto& [p, c] : o.coef_) out.add_term(p, Rational(-1) * c);
  return out;
}

EquivariantRestriction EquivariantRestriction::operator*(
    const EquivariantRestriction& o) const {
  if (model_ != o.model_)
    throw std::invalid_argument("restrictions belong to different models");
  EquivariantRestriction out(model_);
  for (const auto& [pa, ca] : coef_)
    for (const auto& [pb, cb] : o.coef_) out.add_term(pa + pb, cup(ca, cb));
  return out;
}

EquivariantRestriction operator*(const Rational& s,
                                 const EquivariantRestriction& r) {
  EquivariantRestriction out(r.model_);
  for (const auto& [p, c] : r.coef_) out.add_term(p, s * c);
  return out;
}

LaurentU EquivariantRestriction::integrate_coefficients() const {
  LaurentU out;
  for (const auto& [p, c] : coef_) out.add_term(p, c.integrate());
  return out;
}

EquivariantElement::EquivariantElement(EquivariantRestriction mn,
                                       EquivariantRestriction mx)
    : at_min(std::move(mn)), at_max(std::move(mx)) {
  if (at_min.model() != at_max.model())
    throw std::invalid_argument("fixed components must share one model");
}

EquivariantRestriction equivariant_chern_class(const CohClass& c1, int weight) {
  EquivariantRestriction out(c1.model());
  out.add_term(1, CohClass::scalar(c1.model(), Rational(weight)));
  out.add_term(0, c1);
  return out;
}

EquivariantRestriction euler_class(const FixedComponentData& fc) {
  return equivariant_chern_class(fc.normal_euler, fc.normal_weight);
}

EquivariantRestriction invert_euler(const EquivariantRestriction& el) {
  if (el.is_zero()) throw std::invalid_argument("non-invertible Euler class");
  const int top = el.terms().rbegin()->first;
  const CohClass& lead = el.terms().rbegin()->second;
  const Rational s = lead.deg0();
  if (s == 0) throw std::invalid_argument("non-invertible Euler class");

  // el = s*u^top * (1 + n) with n = (el - s*u^top~scalar)/s shifted by u^-top;
  // n has no scalar part, so n^5 = 0 on a 4-manifold and the geometric
  // series is finite.
  const ModelPtr& model = el.model();
  EquivariantRestriction n(model);
  for (const auto& [p, c] : el.terms()) {
    CohClass scaled = Rational(1) / s * c;
    if (p == top) {
      CohClass rest = scaled - CohClass::scalar(model, 1);
      n.add_term(p - top, rest);
    } else {
      n.add_term(p - top, scaled);
    }
  }
  for (const auto& [p, c] : n.terms())
    if (c.deg0() != 0)
      throw std::invalid_argument(
          "non-invertible Euler class: remainder is not nilpotent");

  EquivariantRestriction unit =
      EquivariantRestriction::from_class(CohClass::unit(model));
  EquivariantRestriction series(model);
  EquivariantRestriction power = unit;
  for (int k = 0; k < 6 && !power.is_zero(); ++k) {
    series = (k % 2 == 0) ? series + power : series - power;
    power = power * n;
  }

  EquivariantRestriction out(model);
  for (const auto& [p, c] : series.terms())
    out.add_term(p - top, Rational(1) / s * c);
  return out;
}

EquivariantElement equivariant_symplectic(const SimpleHamiltonianModel& model) {
  EquivariantRestriction mn(model.base), mx(model.base);
  mn.add_term(0, model.w0.cls());
  mn.add_term(1, CohClass::scalar(model.base, -model.zmin.moment_value));
  mx.add_term(0, model.w1.cls());
  mx.add_term(1, CohClass::scalar(model.base, -model.zmax.moment_value));
  return {mn, mx};
}

EquivariantElement canonical_from_min(const SimpleHamiltonianModel& model,
                                      const CohClass& y) {
  if (y.model() != model.base)
    throw std::invalid_argument("class belongs to a different model");
  auto deg = y.homogeneous_degree();
  if (!deg.has_value() || (*deg != 1 && *deg != 2))
    throw std::invalid_argument(
        "canonical classes are supported for homogeneous degree 1 or 2 sources");
  return {EquivariantRestriction::from_class(y),
          EquivariantRestriction::from_class(y)};
}

EquivariantElement canonical_max_unit(const SimpleHamiltonianModel& model) {
  return {EquivariantRestriction(model.base), euler_class(model.zmax)};
}

std::pair<LaurentU, LaurentU> abbv_contributions(
    const SimpleHamiltonianModel& model, const EquivariantElement& el) {
  EquivariantRestriction min_term =
      el.at_min * invert_euler(euler_class(model.zmin));
  EquivariantRestriction max_term =
      el.at_max * invert_euler(euler_class(model.zmax));
  return {min_term.integrate_coefficients(), max_term.integrate_coefficients()};
}

LaurentU abbv_integrate(const SimpleHamiltonianModel& model,
                        const EquivariantElement& el) {
  auto [mn, mx] = abbv_contributions(model, el);
  return mn + mx;
}

}  // namespace hlp
