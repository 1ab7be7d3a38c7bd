#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hlp/engine.hpp"

namespace hlp {

// One family block: the line w(t) = w_start - t*e checked over t_range.
struct FamilySpec {
  std::optional<std::vector<Rational>> w0;  // defaults to the model's w0
  std::vector<Rational> e;
  std::pair<Rational, Rational> t_range{Rational(0), Rational(1)};
  std::size_t samples = 9;

  bool operator==(const FamilySpec& o) const {
    return w0 == o.w0 && e == o.e && t_range == o.t_range &&
           samples == o.samples;
  }
};

// The input document. Rationals are written "p/q" (or plain integers);
// floats are rejected. cup11 is sparse: rows [i, j, k, c] with i < j give the
// coordinate of a_i u a_j on the k-th degree-2 basis element; the
// antisymmetric counterpart is implied.
struct ModelSpec {
  std::string label;
  std::size_t b1 = 0;
  QMatrix intersection;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>
      cup11_entries;
  std::vector<Rational> w0, e;
  std::pair<Rational, Rational> moment_values{Rational(0), Rational(1)};
  std::optional<FamilySpec> family;
};

// Parses the JSON dialect; errors carry the offending position
// ("Q[2][3]: ...", "cup11[4]: ...").
ModelSpec parse_model_spec(const std::string& json_text);

// Named fixtures: "t4", "k3", "trivial-e0".
ModelSpec fixture_spec(const std::string& name);
std::vector<std::string> fixture_names();

struct AssembledModel {
  ModelPtr base;
  SimpleHamiltonianModel model;
  std::vector<std::string> warnings;
};

// Validates the parsed document into a live model. Throws BuildError on data
// that fails the model invariants or the symplectic proxies.
AssembledModel assemble_model(const ModelSpec& spec);

}  // namespace hlp
