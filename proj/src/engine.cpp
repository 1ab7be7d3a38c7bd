#include "hlp/engine.hpp"

#include <sstream>

namespace hlp {
namespace {

Rational u_free_value(const SimpleHamiltonianModel& model,
                      const EquivariantElement& el, LocalizationStats* stats) {
  LaurentU sum = abbv_integrate(model, el);
  if (stats) ++stats->integrals;
  if (!sum.is_u_free())
    throw InternalInconsistencyError("localization sum is not u-free: " +
                                     sum.str());
  if (stats) ++stats->u_free;
  return sum.coeff(0);
}

std::optional<std::vector<Rational>> first_kernel_vector(const QMatrix& m) {
  if (m.rows() == 0) return std::nullopt;
  auto basis = m.nullspace();
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

}  // namespace

SimpleHamiltonianModel build_model(ModelPtr base, const CohClass& e,
                                   const SymplecticClass& w0,
                                   std::pair<Rational, Rational> moment_values,
                                   std::vector<std::string>* warnings) {
  if (e.model() != base || w0.cls().model() != base)
    throw BuildError("e and w0 must live on the given base model");
  auto edeg = e.homogeneous_degree();
  if (edeg.has_value() && *edeg != 2)
    throw BuildError("e must be concentrated in degree 2");

  std::vector<std::string> local;
  std::vector<std::string>& warn = warnings ? *warnings : local;
  for (const auto& x : e.deg2())
    if (!is_integral(x)) {
      warn.push_back("e has non-integral coordinates; proceeding exactly, but "
                     "no circle bundle realizes it");
      break;
    }

  if (moment_values.first >= moment_values.second)
    throw BuildError("moment values must satisfy min < max");
  if (moment_values.second - moment_values.first != 1) {
    warn.push_back("moment interval rescaled to unit length to match the "
                   "Duistermaat-Heckman slope convention w1 = w0 - e");
    moment_values.second = moment_values.first + 1;
  }

  CohClass w1_class = w0.cls() - e;
  Rational w1_square = cup(w1_class, w1_class).integrate();
  if (w1_square == 0 || sign_of(w1_square) != sign_of(w0.square()))
    throw BuildError("max-level class fails symplectic proxy");
  SymplecticClass w1(w1_class);

  FixedComponentData zmin(base, moment_values.first, +1, e);
  FixedComponentData zmax(base, moment_values.second, -1, Rational(-1) * e);
  return SimpleHamiltonianModel{std::move(base), std::move(zmin),
                                std::move(zmax), e, w0, std::move(w1)};
}

QMatrix hr2_matrix(const SimpleHamiltonianModel& model,
                   LocalizationStats* stats) {
  const std::size_t b2 = model.base->b2;
  std::vector<EquivariantElement> basis;
  basis.reserve(b2 + 1);
  for (std::size_t k = 0; k < b2; ++k)
    basis.push_back(
        canonical_from_min(model, CohClass::two_basis(model.base, k)));
  basis.push_back(canonical_max_unit(model));

  EquivariantElement omega = equivariant_symplectic(model);
  QMatrix out(b2 + 1, b2 + 1);
  for (std::size_t i = 0; i <= b2; ++i)
    for (std::size_t j = i; j <= b2; ++j) {
      Rational v = u_free_value(model, basis[i] * basis[j] * omega, stats);
      out.at(i, j) = v;
      out.at(j, i) = v;
    }
  return out;
}

QMatrix hr1_matrix(const SimpleHamiltonianModel& model,
                   LocalizationStats* stats) {
  const std::size_t b1 = model.base->b1;
  std::vector<EquivariantElement> basis;
  basis.reserve(b1);
  for (std::size_t i = 0; i < b1; ++i)
    basis.push_back(
        canonical_from_min(model, CohClass::one_basis(model.base, i)));

  EquivariantElement omega = equivariant_symplectic(model);
  EquivariantElement omega2 = omega * omega;
  QMatrix out(b1, b1);
  for (std::size_t i = 0; i < b1; ++i)
    for (std::size_t j = 0; j < b1; ++j)
      out.at(i, j) = u_free_value(model, basis[i] * basis[j] * omega2, stats);
  return out;
}

Rational sanity_top_integral(const SimpleHamiltonianModel& model,
                             LocalizationStats* stats) {
  EquivariantElement omega = equivariant_symplectic(model);
  return u_free_value(model, omega * omega * omega, stats);
}

bool HlpReport::operator==(const HlpReport& o) const {
  return hr1 == o.hr1 && hr2 == o.hr2 && det_hr1 == o.det_hr1 &&
         det_hr2 == o.det_hr2 && rank_hr1 == o.rank_hr1 &&
         rank_hr2 == o.rank_hr2 && sanity_top == o.sanity_top &&
         criterion_pairing == o.criterion_pairing &&
         criterion_hlp_base == o.criterion_hlp_base && verdict == o.verdict &&
         hr1_kernel == o.hr1_kernel && hr2_kernel == o.hr2_kernel &&
         localization == o.localization && interpretation == o.interpretation;
}

HlpReport hlp_verdict(const SimpleHamiltonianModel& model) {
  HlpReport r;
  r.hr1 = hr1_matrix(model, &r.localization);
  r.hr2 = hr2_matrix(model, &r.localization);
  r.det_hr1 = r.hr1.det();
  r.det_hr2 = r.hr2.det();
  r.rank_hr1 = r.hr1.rank();
  r.rank_hr2 = r.hr2.rank();
  r.sanity_top = sanity_top_integral(model, &r.localization);
  r.hr1_kernel = r.det_hr1 == 0 ? first_kernel_vector(r.hr1) : std::nullopt;
  r.hr2_kernel = r.det_hr2 == 0 ? first_kernel_vector(r.hr2) : std::nullopt;

  r.criterion_pairing = cup(model.w0.cls(), model.w1.cls()).integrate();
  FourManifoldHlp base =
      hlp_check_4mfd(model.base, model.w0.cls() + model.w1.cls());
  r.criterion_hlp_base = base.holds;

  const bool via_matrices =
      r.det_hr1 != 0 && r.det_hr2 != 0 && r.sanity_top != 0;
  const bool via_criterion = r.criterion_hlp_base && r.criterion_pairing != 0;
  if (via_matrices != via_criterion) {
    std::ostringstream os;
    os << "verdict routes disagree: matrices say "
       << (via_matrices ? "holds" : "fails") << " (det hr1 = "
       << to_string(r.det_hr1) << ", det hr2 = " << to_string(r.det_hr2)
       << ", top integral = " << to_string(r.sanity_top)
       << ") but the criterion says " << (via_criterion ? "holds" : "fails")
       << " (pairing = " << to_string(r.criterion_pairing) << ", base "
       << (r.criterion_hlp_base ? "holds" : "fails")
       << "); the input has no realizable family w0 - t*e on [0,1]";
    throw InternalInconsistencyError(os.str());
  }
  r.verdict = via_matrices;

  r.interpretation =
      std::string("h_k = b_k for all k > 0 iff the form is of hard Lefschetz "
                  "type (Mathieu/Yan); here ") +
      (r.verdict ? "every symplectic-harmonic dimension matches the Betti "
                   "number"
                 : "some symplectic-harmonic dimension differs from the Betti "
                   "number") +
      ". k=3: automatic (the middle pairing is Poincare duality).";
  return r;
}

bool BettiProfile::operator==(const BettiProfile& o) const {
  return dim_min == o.dim_min && dim_max == o.dim_max &&
         impossible == o.impossible && reason == o.reason && betti == o.betti &&
         hlp_automatic == o.hlp_automatic && warnings == o.warnings;
}

namespace {

bool component_data_ok(int dim, const std::vector<long>& betti,
                       std::string* why) {
  if (betti.size() != static_cast<std::size_t>(dim) + 1) {
    *why = "component Betti vector must have length dim+1";
    return false;
  }
  if (betti.front() != 1 || betti.back() != 1) {
    *why = "component must be connected and closed oriented: b_0 = b_dim = 1";
    return false;
  }
  for (int k = 0; k <= dim; ++k)
    if (betti[k] != betti[dim - k]) {
      *why = "component Betti data violates Poincare duality";
      return false;
    }
  for (long b : betti)
    if (b < 0) {
      *why = "negative Betti number";
      return false;
    }
  return true;
}

BettiProfile impossible_profile(int dmin, int dmax, std::string reason) {
  BettiProfile p;
  p.dim_min = dmin;
  p.dim_max = dmax;
  p.impossible = true;
  p.reason = std::move(reason);
  return p;
}

}  // namespace

BettiProfile betti_profile(int dim_min, int dim_max,
                           const std::vector<long>& betti_min,
                           const std::vector<long>& betti_max) {
  if ((dim_min != 0 && dim_min != 2 && dim_min != 4) ||
      (dim_max != 0 && dim_max != 2 && dim_max != 4))
    throw std::invalid_argument("fixed components have dimension 0, 2 or 4");
  if (dim_min > dim_max)
    throw std::invalid_argument("dim_min must be <= dim_max");

  std::string why;
  if (!component_data_ok(dim_min, betti_min, &why))
    return impossible_profile(dim_min, dim_max, "minimum component: " + why);
  if (!component_data_ok(dim_max, betti_max, &why))
    return impossible_profile(dim_min, dim_max, "maximum component: " + why);

  BettiProfile p;
  p.dim_min = dim_min;
  p.dim_max = dim_max;

  if (dim_min == 0 && dim_max == 0) {
    // P_t(M) = 1 + t^6 leaves H^2(M) = 0.
    return impossible_profile(0, 0,
                              "H^2(M) = H^4(M) = 0 contradicts that [omega] != "
                              "0 in H^2(M)");
  }
  if (dim_min == 0 && dim_max == 2) {
    // P_t(M) = 1 + t^4 + b1 t^5 + t^6 has b_2 != b_4.
    return impossible_profile(0, 2, "impossible by Poincare duality of M");
  }
  if (dim_min == 2 && dim_max == 2) {
    if (betti_min[1] != betti_max[1])
      return impossible_profile(
          2, 2, "b_1(M) = b_5(M) forces equal component genera");
    p.betti = {1, 0, 1, 0, 1, 0, 1};
    p.hlp_automatic = true;
    if (betti_min[1] != 0)
      p.warnings.push_back(
          "a minimal fixed set forces genus-zero components; the surface "
          "Betti input was overridden (M has the cohomology of CP^3)");
    return p;
  }
  if (dim_min == 0 && dim_max == 4) {
    // P_t(M) = 1 + t^2 + b1 t^3 + b2 t^4 + b3 t^5 + t^6 with Poincare duality
    // forcing b1 = b3 = 0 and b2 = 1.
    if (betti_max[1] != 0)
      return impossible_profile(
          0, 4, "Poincare duality of M forces b_1(Z_max) = b_3(Z_max) = 0");
    if (betti_max[2] != 1)
      return impossible_profile(0, 4,
                                "Poincare duality of M forces b_2(Z_max) = 1");
    p.betti = {1, 0, 1, 0, 1, 0, 1};
    p.hlp_automatic = true;  // b_2(M) = 1
    return p;
  }
  if (dim_min == 2 && dim_max == 4) {
    // P_t(M) = 1 + b1(min) t + 2 t^2 + b1(max) t^3 + b2(max) t^4
    //          + b3(max) t^5 + t^6.
    if (betti_max[2] != 2)
      return impossible_profile(2, 4,
                                "Poincare duality of M forces b_2(Z_max) = 2");
    if (betti_max[1] != betti_min[1])
      return impossible_profile(
          2, 4,
          "Poincare duality of M forces b_3(Z_max) = b_1(Z_min) (= b_1(Z_max))");
    const long g2 = betti_min[1];
    p.betti = {1, g2, 2, betti_max[1], 2, g2, 1};
    p.hlp_automatic = true;
    return p;
  }
  // (4,4): both components are identified along the gradient flow.
  if (betti_min != betti_max)
    return impossible_profile(
        4, 4,
        "the two components are identified along the gradient flow and must "
        "have equal Betti numbers");
  std::vector<long> n = betti_min;  // b_0..b_4 of N
  p.betti = {n[0],        n[1],        n[2] + n[0], n[3] + n[1],
             n[4] + n[2], n[3],        n[4]};
  p.hlp_automatic = std::nullopt;  // decided by the Hodge-Riemann matrices
  return p;
}

bool FamilyReport::operator==(const FamilyReport& o) const {
  return c2 == o.c2 && c1 == o.c1 && c0 == o.c0 && t_range == o.t_range &&
         roots == o.roots && constant_sign == o.constant_sign &&
         sign == o.sign && samples == o.samples;
}

FamilyReport family_check(const SymplecticClass& w_start, const CohClass& e,
                          std::size_t samples,
                          std::pair<Rational, Rational> t_range) {
  if (samples < 2) throw std::invalid_argument("family_check needs samples >= 2");
  if (t_range.first >= t_range.second)
    throw std::invalid_argument("family_check needs a non-empty t interval");
  auto edeg = e.homogeneous_degree();
  if (edeg.has_value() && *edeg != 2)
    throw std::invalid_argument("e must be concentrated in degree 2");

  const CohClass& w = w_start.cls();
  FamilyReport r;
  r.c0 = cup(w, w).integrate();
  r.c1 = Rational(-2) * cup(w, e).integrate();
  r.c2 = cup(e, e).integrate();
  r.t_range = t_range;

  auto q = [&r](const Rational& t) { return r.c2 * t * t + r.c1 * t + r.c0; };

  // rational roots, when they exist
  if (r.c2 != 0) {
    Rational disc = r.c1 * r.c1 - 4 * r.c2 * r.c0;
    if (auto root = rational_sqrt(disc)) {
      Rational r1 = (-r.c1 - *root) / (2 * r.c2);
      Rational r2 = (-r.c1 + *root) / (2 * r.c2);
      if (r1 > r2) std::swap(r1, r2);
      r.roots = std::vector<Rational>{r1, r2};
    }
  } else if (r.c1 != 0) {
    r.roots = std::vector<Rational>{-r.c0 / r.c1};
  }

  // exact constant-sign analysis on [lo, hi]
  const Rational lo = t_range.first, hi = t_range.second;
  const Rational qlo = q(lo), qhi = q(hi);
  bool zero_free;
  if (r.c2 == 0 && r.c1 == 0) {
    zero_free = r.c0 != 0;
  } else if (r.c2 == 0) {
    Rational root = -r.c0 / r.c1;
    zero_free = root < lo || root > hi;
  } else if (qlo == 0 || qhi == 0 || sign_of(qlo) != sign_of(qhi)) {
    zero_free = false;
  } else {
    // same nonzero sign at both ends; a zero exists inside iff the vertex
    // lies in the interval, real roots exist, and the parabola opens toward
    // the endpoint sign
    Rational vertex = -r.c1 / (2 * r.c2);
    Rational disc = r.c1 * r.c1 - 4 * r.c2 * r.c0;
    zero_free = !(disc >= 0 && lo <= vertex && vertex <= hi &&
                  sign_of(qlo) == sign_of(r.c2));
  }
  r.constant_sign = zero_free;
  r.sign = zero_free ? sign_of(qlo != 0 ? qlo : qhi) : 0;

  const Rational step = (hi - lo) / Rational(samples - 1);
  for (std::size_t j = 0; j < samples; ++j) {
    Rational t = lo + Rational(j) * step;
    r.samples.emplace_back(t, q(t));
  }
  return r;
}

}  // namespace hlp
