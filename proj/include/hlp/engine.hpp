#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hlp/equivariant.hpp"

namespace hlp {

// Input rejected before any computation (symplectic proxy failures,
// malformed data). CLI exit code 2.
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The two evaluation routes disagreed, or a localization sum failed
// u-freeness. Either an implementation bug or an input outside the
// geometrically realizable range. CLI exit code 3.
class InternalInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LocalizationStats {
  std::size_t integrals = 0;
  std::size_t u_free = 0;

  bool operator==(const LocalizationStats& o) const {
    return integrals == o.integrals && u_free == o.u_free;
  }
};

// Builds the simple Hamiltonian model over (N, e, w0) with w1 = w0 - e.
// Rejects when w1 fails the symplectic proxy or flips orientation sign.
// Non-integral e and non-unit moment intervals are accepted with warnings;
// a non-unit interval is rescaled to unit length (the slope convention
// behind w1 = w0 - e).
SimpleHamiltonianModel build_model(
    ModelPtr base, const CohClass& e, const SymplecticClass& w0,
    std::pair<Rational, Rational> moment_values = {Rational(0), Rational(1)},
    std::vector<std::string>* warnings = nullptr);

// Hodge-Riemann matrices, assembled entry by entry through the localization
// sum (never from the closed forms; those live in the test oracle).
// hr2 basis: canonical classes over the H^2 basis of the minimum, then the
// canonical class of the maximum unit. hr1 basis: canonical classes over the
// H^1 basis. Input order throughout.
QMatrix hr2_matrix(const SimpleHamiltonianModel& model,
                   LocalizationStats* stats = nullptr);
QMatrix hr1_matrix(const SimpleHamiltonianModel& model,
                   LocalizationStats* stats = nullptr);

// Top-power sanity value integral(omega~^3) by localization.
Rational sanity_top_integral(const SimpleHamiltonianModel& model,
                             LocalizationStats* stats = nullptr);

struct HlpReport {
  QMatrix hr1, hr2;
  Rational det_hr1, det_hr2;
  std::size_t rank_hr1 = 0, rank_hr2 = 0;
  Rational sanity_top;              // integral(omega~^3), must be nonzero
  Rational criterion_pairing;       // integral(w0 * w1)
  bool criterion_hlp_base = false;  // hard Lefschetz of (N, w0 + w1)
  bool verdict = false;
  std::optional<std::vector<Rational>> hr1_kernel, hr2_kernel;
  LocalizationStats localization;
  std::string interpretation;

  bool operator==(const HlpReport& o) const;
};

// Full verdict with both routes evaluated and cross-checked:
//   matrices:  det hr1 != 0 and det hr2 != 0 and sanity != 0
//   criterion: hard Lefschetz of (N, w0+w1) and integral(w0*w1) != 0
// A disagreement raises InternalInconsistencyError.
HlpReport hlp_verdict(const SimpleHamiltonianModel& model);

// Betti-number case analysis over the dimensions of the two fixed
// components. Impossible configurations are first-class outputs, not errors.
struct BettiProfile {
  int dim_min = 0, dim_max = 0;
  bool impossible = false;
  std::string reason;             // set when impossible
  std::vector<long> betti;        // b_0..b_6 of M when possible
  // true when the case forces the hard Lefschetz property; unset for (4,4),
  // where the verdict is the engine's job.
  std::optional<bool> hlp_automatic;
  std::vector<std::string> warnings;

  bool operator==(const BettiProfile& o) const;
};

BettiProfile betti_profile(int dim_min, int dim_max,
                           const std::vector<long>& betti_min,
                           const std::vector<long>& betti_max);

// Exact sign analysis of q(t) = integral((w - t e)^2) over a rational
// interval: the quadratic itself, its rational roots when the discriminant
// is a rational square, sample values, and whether the symplectic proxy
// holds on the whole interval (by sign analysis, not sampling).
struct FamilyReport {
  Rational c2, c1, c0;  // q(t) = c2 t^2 + c1 t + c0
  std::pair<Rational, Rational> t_range;
  std::optional<std::vector<Rational>> roots;  // rational roots, ascending
  bool constant_sign = false;  // q nonzero with one sign on [t_lo, t_hi]
  int sign = 0;                // that sign when constant_sign
  std::vector<std::pair<Rational, Rational>> samples;  // (t, q(t))

  bool operator==(const FamilyReport& o) const;
};

FamilyReport family_check(const SymplecticClass& w_start, const CohClass& e,
                          std::size_t samples,
                          std::pair<Rational, Rational> t_range = {Rational(0),
                                                                   Rational(1)});

}  // namespace hlp
