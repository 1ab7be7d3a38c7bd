#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hlp/matrix.hpp"
#include "hlp/rational.hpp"

namespace hlp {

// Finite presentation of the cohomology ring of a closed oriented symplectic
// 4-manifold N. Only linear-algebra data is stored:
//   - intersection: the pairing on H^2 against the fundamental class
//     (symmetric, non-singular by Poincare duality),
//   - cup11: coordinates of a_i u a_j in the chosen H^2 basis
//     (antisymmetric in i, j).
// The H^3 basis is taken dual to the H^1 basis, so the H^1 x H^3 pairing is
// the identity matrix. Nothing downstream depends on another choice.
struct FourManifoldCohomology {
  std::string label;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  QMatrix intersection;  // b2 x b2
  std::vector<std::vector<std::vector<Rational>>> cup11;  // b1 x b1 x b2
  std::vector<std::string> warnings;
};

using ModelPtr = std::shared_ptr<const FourManifoldCohomology>;

// Validates and freezes a model. Throws std::invalid_argument on a singular
// intersection matrix ("Poincare duality violated"), a non-symmetric Q, or a
// non-antisymmetric cup tensor. Odd b1 is only a warning: the container is
// purely linear-algebraic and symplectic realizability is the caller's claim.
ModelPtr make_four_manifold(std::size_t b1, QMatrix intersection,
                            std::vector<std::vector<std::vector<Rational>>> cup11,
                            std::string label);

// Graded cohomology element of N with rational coordinates per degree.
// Everything above degree 4 is truncated to zero (forced by dimension).
class CohClass {
 public:
  explicit CohClass(ModelPtr model);

  static CohClass scalar(ModelPtr model, const Rational& c);
  static CohClass unit(ModelPtr model) { return scalar(std::move(model), 1); }
  static CohClass one_class(ModelPtr model, std::vector<Rational> coords);
  static CohClass two_class(ModelPtr model, std::vector<Rational> coords);
  static CohClass three_class(ModelPtr model, std::vector<Rational> coords);
  static CohClass top_class(ModelPtr model, const Rational& c);
  static CohClass two_basis(ModelPtr model, std::size_t k);
  static CohClass one_basis(ModelPtr model, std::size_t i);

  const ModelPtr& model() const { return model_; }
  const Rational& deg0() const { return deg0_; }
  const std::vector<Rational>& deg1() const { return deg1_; }
  const std::vector<Rational>& deg2() const { return deg2_; }
  const std::vector<Rational>& deg3() const { return deg3_; }
  const Rational& deg4() const { return deg4_; }

  bool is_zero() const;
  // Degree when concentrated in a single grading; nullopt for 0 or mixed.
  std::optional<int> homogeneous_degree() const;

  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator-() const;
  friend CohClass operator*(const Rational& s, const CohClass& c);
  bool operator==(const CohClass& o) const;
  bool operator!=(const CohClass& o) const { return !(*this == o); }

  // Evaluation against the fundamental class: the degree-4 coordinate.
  Rational integrate() const { return deg4_; }

  std::string str() const;

 private:
  ModelPtr model_;
  Rational deg0_;
  std::vector<Rational> deg1_, deg2_, deg3_;
  Rational deg4_;

  friend CohClass cup(const CohClass& a, const CohClass& b);
};

// Graded-commutative product, truncated above degree 4. Throws on mismatched
// owning models.
CohClass cup(const CohClass& a, const CohClass& b);

inline Rational integrate(const CohClass& c) { return c.integrate(); }

// Degree-2 class whose self-intersection is nonzero: the class-level proxy
// for a symplectic form. Pointwise non-degeneracy is not visible here.
class SymplecticClass {
 public:
  explicit SymplecticClass(CohClass cls);
  const CohClass& cls() const { return cls_; }
  Rational square() const { return square_; }

 private:
  CohClass cls_;
  Rational square_;
};

// Hard Lefschetz check for the 4-manifold (N, w):
//   k=0: integral(w^2) != 0,
//   k=1: the b1 x b1 matrix M_ij = integral(a_i a_j w) is non-singular,
//   k=2: identity, always passes.
struct FourManifoldHlp {
  bool holds = false;
  Rational w_square;
  QMatrix h1_matrix;
  Rational h1_det;
  // Kernel vector of the k=1 matrix when it is singular.
  std::optional<std::vector<Rational>> h1_kernel;
};

FourManifoldHlp hlp_check_4mfd(const ModelPtr& model, const CohClass& w);

}  // namespace hlp
