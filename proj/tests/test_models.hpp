#pragma once

// Shared test fixtures: hand-built cohomology models and the randomized
// corpus used by the oracle-equality and criterion tests.

#include <random>
#include <vector>

#include "hlp/engine.hpp"
#include "hlp/four_manifold.hpp"

namespace hlp::testing {

// The four-torus: H^1 basis dx1..dx4, H^2 basis
// {e12, e13, e14, e23, e24, e34}, exterior products, integral normalized by
// integral(dx1 dx2 dx3 dx4) = 1.
inline ModelPtr make_t4() {
  QMatrix q(6, 6);
  q.at(0, 5) = 1;
  q.at(5, 0) = 1;
  q.at(1, 4) = -1;
  q.at(4, 1) = -1;
  q.at(2, 3) = 1;
  q.at(3, 2) = 1;
  std::vector<std::vector<std::vector<Rational>>> cup(
      4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(6, Rational(0))));
  auto set = [&cup](int i, int j, int k) {
    cup[i][j][k] = 1;
    cup[j][i][k] = -1;
  };
  set(0, 1, 0);  // dx1 dx2 = e12
  set(0, 2, 1);
  set(0, 3, 2);
  set(1, 2, 3);
  set(1, 3, 4);
  set(2, 3, 5);
  return make_four_manifold(4, q, cup, "t4");
}

// Rank-2 slice of the quartic K3 surface, basis {s, f} with
// s^2 = f^2 = 4 and s*f = 0.
inline ModelPtr make_k3_slice() {
  QMatrix q(2, 2);
  q.at(0, 0) = 4;
  q.at(1, 1) = 4;
  return make_four_manifold(0, q, {}, "k3-slice");
}

// T^2 x S^2: H^1 = {dx, dy}, H^2 = {[dx dy], [area of S^2]}, hyperbolic
// intersection, dx u dy = first basis vector.
inline ModelPtr make_t2s2() {
  QMatrix q(2, 2);
  q.at(0, 1) = 1;
  q.at(1, 0) = 1;
  std::vector<std::vector<std::vector<Rational>>> cup(
      2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, Rational(0))));
  cup[0][1][0] = 1;
  cup[1][0][0] = -1;
  return make_four_manifold(2, q, cup, "t2s2");
}

struct CorpusEntry {
  SimpleHamiltonianModel model;
};

// Fixed pool of non-singular symmetric integer matrices, sizes 2..6.
inline std::vector<QMatrix> intersection_pool() {
  auto diag = [](std::initializer_list<int> entries) {
    QMatrix m(entries.size(), entries.size());
    std::size_t i = 0;
    for (int d : entries) {
      m.at(i, i) = d;
      ++i;
    }
    return m;
  };
  auto hyperbolic = [](std::size_t pairs) {
    QMatrix m(2 * pairs, 2 * pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
      m.at(2 * p, 2 * p + 1) = 1;
      m.at(2 * p + 1, 2 * p) = 1;
    }
    return m;
  };
  std::vector<QMatrix> pool;
  pool.push_back(diag({1, 1}));
  pool.push_back(diag({1, -1}));
  pool.push_back(hyperbolic(1));
  pool.push_back(diag({4, 4}));
  pool.push_back(diag({1, 1, -1}));
  pool.push_back(diag({2, 3, -5}));
  pool.push_back(hyperbolic(2));
  pool.push_back(diag({1, 1, 1, -1}));
  QMatrix a4(4, 4);  // A4 Cartan matrix, det 5
  for (std::size_t i = 0; i < 4; ++i) {
    a4.at(i, i) = 2;
    if (i + 1 < 4) {
      a4.at(i, i + 1) = -1;
      a4.at(i + 1, i) = -1;
    }
  }
  pool.push_back(a4);
  pool.push_back(diag({1, 2, 3, 4, 5}));
  pool.push_back(diag({1, 1, -1, -1, -1}));
  pool.push_back(hyperbolic(3));
  pool.push_back(diag({1, 1, 1, -1, -1, -1}));
  return pool;
}

// Random integral (w0, e) over a base, rejection-sampled so the whole
// segment w0 - t*e, t in [0,1], keeps integral(w_t^2) nonzero of one sign —
// the class-level shadow of a genuine symplectic family.
inline std::optional<SimpleHamiltonianModel> try_random_model(
    const ModelPtr& base, std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(-3, 3);
  const std::size_t b2 = base->b2;
  std::vector<Rational> w0c(b2), ec(b2);
  for (std::size_t k = 0; k < b2; ++k) w0c[k] = coord(rng);
  for (std::size_t k = 0; k < b2; ++k) ec[k] = coord(rng);
  CohClass w0_class = CohClass::two_class(base, w0c);
  CohClass e_class = CohClass::two_class(base, ec);
  if (cup(w0_class, w0_class).integrate() == 0) return std::nullopt;
  SymplecticClass w0(w0_class);
  FamilyReport family = family_check(w0, e_class, 2);
  if (!family.constant_sign) return std::nullopt;
  try {
    return build_model(base, e_class, w0);
  } catch (const BuildError&) {
    return std::nullopt;
  }
}

// Deterministic corpus of at least `count` models: every pool matrix with
// b1 = 0, plus T^4 and T^2 x S^2 bases so the H^1 machinery is exercised.
inline std::vector<SimpleHamiltonianModel> make_corpus(std::size_t count,
                                                       std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<ModelPtr> bases;
  for (const QMatrix& q : intersection_pool())
    bases.push_back(make_four_manifold(0, q, {}, "pool"));
  bases.push_back(make_t4());
  bases.push_back(make_t2s2());

  std::vector<SimpleHamiltonianModel> corpus;
  std::size_t next_base = 0;
  while (corpus.size() < count) {
    const ModelPtr& base = bases[next_base % bases.size()];
    ++next_base;
    for (int attempt = 0; attempt < 200; ++attempt) {
      auto model = try_random_model(base, rng);
      if (model.has_value()) {
        corpus.push_back(std::move(*model));
        break;
      }
    }
  }
  return corpus;
}

}  // namespace hlp::testing
