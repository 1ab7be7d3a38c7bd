#include "hlp/model_spec.hpp"

#include <json.hpp>

#include <sstream>

namespace hlp {
namespace {

using nlohmann::json;

Rational rational_field(const json& v, const std::string& where) {
  if (v.is_number_integer())
    return Rational(Integer(v.get<long long>()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& ex) {
      throw std::invalid_argument(where + ": " + ex.what());
    }
  }
  if (v.is_number_float())
    throw std::invalid_argument(
        where + ": floats are not accepted; write rationals as \"p/q\"");
  throw std::invalid_argument(where + ": expected a rational (integer or \"p/q\")");
}

std::vector<Rational> rational_vector(const json& v, std::size_t want,
                                      const std::string& where) {
  if (!v.is_array())
    throw std::invalid_argument(where + ": expected an array");
  if (v.size() != want) {
    std::ostringstream os;
    os << where << ": expected length " << want << ", got " << v.size();
    throw std::invalid_argument(os.str());
  }
  std::vector<Rational> out;
  out.reserve(want);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::ostringstream os;
    os << where << "[" << i << "]";
    out.push_back(rational_field(v[i], os.str()));
  }
  return out;
}

}  // namespace

ModelSpec parse_model_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw std::invalid_argument(std::string("not valid JSON: ") + ex.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("top level: expected a JSON object");

  ModelSpec spec;
  spec.label = doc.value("label", std::string("unnamed"));

  if (!doc.contains("b1") || !doc["b1"].is_number_integer() ||
      doc["b1"].get<long long>() < 0)
    throw std::invalid_argument("b1: expected a non-negative integer");
  spec.b1 = doc["b1"].get<std::size_t>();

  if (!doc.contains("Q") || !doc["Q"].is_array())
    throw std::invalid_argument("Q: expected an array of rows");
  const json& q = doc["Q"];
  const std::size_t b2 = q.size();
  if (b2 == 0) throw std::invalid_argument("Q: must have at least one row");
  spec.intersection = QMatrix(b2, b2);
  for (std::size_t i = 0; i < b2; ++i) {
    std::ostringstream row;
    row << "Q[" << i << "]";
    if (!q[i].is_array() || q[i].size() != b2) {
      std::ostringstream os;
      os << row.str() << ": expected a row of length " << b2;
      throw std::invalid_argument(os.str());
    }
    for (std::size_t j = 0; j < b2; ++j) {
      std::ostringstream os;
      os << "Q[" << i << "][" << j << "]";
      spec.intersection.at(i, j) = rational_field(q[i][j], os.str());
    }
  }
  for (std::size_t i = 0; i < b2; ++i)
    for (std::size_t j = i + 1; j < b2; ++j)
      if (spec.intersection.at(i, j) != spec.intersection.at(j, i)) {
        std::ostringstream os;
        os << "Q[" << i << "][" << j << "]: intersection matrix must be "
           << "symmetric";
        throw std::invalid_argument(os.str());
      }

  if (doc.contains("cup11")) {
    const json& cup = doc["cup11"];
    if (!cup.is_array())
      throw std::invalid_argument("cup11: expected an array of [i, j, k, c] rows");
    for (std::size_t n = 0; n < cup.size(); ++n) {
      std::ostringstream where;
      where << "cup11[" << n << "]";
      const json& row = cup[n];
      if (!row.is_array() || row.size() != 4)
        throw std::invalid_argument(where.str() + ": expected [i, j, k, c]");
      for (int f = 0; f < 3; ++f)
        if (!row[f].is_number_integer() || row[f].get<long long>() < 0)
          throw std::invalid_argument(where.str() +
                                      ": indices must be non-negative integers");
      std::size_t i = row[0].get<std::size_t>();
      std::size_t j = row[1].get<std::size_t>();
      std::size_t k = row[2].get<std::size_t>();
      if (i >= spec.b1 || j >= spec.b1) {
        std::ostringstream os;
        os << where.str() << ": degree-1 index out of range [0," << spec.b1 << ")";
        throw std::invalid_argument(os.str());
      }
      if (k >= b2) {
        std::ostringstream os;
        os << where.str() << ": degree-2 index out of range [0," << b2 << ")";
        throw std::invalid_argument(os.str());
      }
      if (i >= j)
        throw std::invalid_argument(
            where.str() +
            ": indices must satisfy i < j (the antisymmetric counterpart is implied)");
      spec.cup11_entries.emplace_back(i, j, k,
                                      rational_field(row[3], where.str() + "[3]"));
    }
  }

  if (!doc.contains("w0"))
    throw std::invalid_argument("w0: required field is missing");
  spec.w0 = rational_vector(doc["w0"], b2, "w0");
  if (!doc.contains("e"))
    throw std::invalid_argument("e: required field is missing");
  spec.e = rational_vector(doc["e"], b2, "e");

  if (doc.contains("moment_values")) {
    auto mv = rational_vector(doc["moment_values"], 2, "moment_values");
    spec.moment_values = {mv[0], mv[1]};
  }

  if (doc.contains("family") && !doc["family"].is_null()) {
    const json& fam = doc["family"];
    if (!fam.is_object())
      throw std::invalid_argument("family: expected an object");
    FamilySpec fs;
    if (!fam.contains("e"))
      throw std::invalid_argument("family.e: required field is missing");
    fs.e = rational_vector(fam["e"], b2, "family.e");
    if (fam.contains("w0"))
      fs.w0 = rational_vector(fam["w0"], b2, "family.w0");
    if (fam.contains("t_range")) {
      auto tr = rational_vector(fam["t_range"], 2, "family.t_range");
      fs.t_range = {tr[0], tr[1]};
    }
    if (fam.contains("samples")) {
      if (!fam["samples"].is_number_integer() ||
          fam["samples"].get<long long>() < 2)
        throw std::invalid_argument("family.samples: expected an integer >= 2");
      fs.samples = fam["samples"].get<std::size_t>();
    }
    spec.family = std::move(fs);
  }

  return spec;
}

namespace {

json t4_fixture_json() {
  // The four-torus with coordinate one-forms and the six two-forms
  // e12, e13, e14, e23, e24, e34; w0 and w1 = w0 - e are the two standard
  // orthogonal symplectic forms of square 8, with vanishing product.
  return json{
      {"label", "t4"},
      {"b1", 4},
      {"Q",
       {{0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, -1, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {0, -1, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0}}},
      {"cup11",
       {{0, 1, 0, 1},
        {0, 2, 1, 1},
        {0, 3, 2, 1},
        {1, 2, 3, 1},
        {1, 3, 4, 1},
        {2, 3, 5, 1}}},
      {"w0", {2, 0, 0, 0, 0, 2}},
      {"e", {2, 0, -2, -2, 0, 2}},
  };
}

json k3_fixture_json() {
  // Rank-2 slice of a quartic K3 surface: the span of a holomorphic-plus-
  // conjugate form s and the quartic hyperplane class f, with s^2 = f^2 = 4
  // and s*f = 0. The family block carries w(t) = s - t*f over [-1, 1].
  return json{
      {"label", "k3"},
      {"b1", 0},
      {"Q", {{4, 0}, {0, 4}}},
      {"w0", {1, 1}},
      {"e", {0, 2}},
      {"family",
       {{"w0", {1, 0}}, {"e", {0, 1}}, {"t_range", {-1, 1}}, {"samples", 9}}},
  };
}

json trivial_e0_fixture_json() {
  json doc = t4_fixture_json();
  doc["label"] = "trivial-e0";
  doc["w0"] = {1, 0, 0, 0, 0, 1};
  doc["e"] = {0, 0, 0, 0, 0, 0};
  return doc;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"t4", "k3", "trivial-e0"}; }

ModelSpec fixture_spec(const std::string& name) {
  json doc;
  if (name == "t4")
    doc = t4_fixture_json();
  else if (name == "k3")
    doc = k3_fixture_json();
  else if (name == "trivial-e0")
    doc = trivial_e0_fixture_json();
  else
    throw std::invalid_argument("unknown example '" + name +
                                "'; available: t4, k3, trivial-e0");
  return parse_model_spec(doc.dump());
}

AssembledModel assemble_model(const ModelSpec& spec) {
  const std::size_t b2 = spec.intersection.rows();
  std::vector<std::vector<std::vector<Rational>>> cup11(
      spec.b1, std::vector<std::vector<Rational>>(
                   spec.b1, std::vector<Rational>(b2, Rational(0))));
  for (const auto& [i, j, k, c] : spec.cup11_entries) {
    cup11[i][j][k] += c;
    cup11[j][i][k] -= c;
  }

  ModelPtr base;
  try {
    base = make_four_manifold(spec.b1, spec.intersection, std::move(cup11),
                              spec.label);
  } catch (const std::invalid_argument& ex) {
    throw BuildError(std::string("model: ") + ex.what());
  }
  std::vector<std::string> warnings = base->warnings;

  CohClass w0_class = CohClass::two_class(base, spec.w0);
  CohClass e_class = CohClass::two_class(base, spec.e);
  std::optional<SymplecticClass> w0;
  try {
    w0.emplace(w0_class);
  } catch (const std::invalid_argument& ex) {
    throw BuildError(std::string("w0: ") + ex.what());
  }

  SimpleHamiltonianModel model =
      build_model(base, e_class, *w0, spec.moment_values, &warnings);
  return AssembledModel{base, std::move(model), std::move(warnings)};
}

}  // namespace hlp
