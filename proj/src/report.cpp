#include "hlp/report.hpp"

#include <json.hpp>

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace hlp {

using nlohmann::json;

bool RunReport::operator==(const RunReport& o) const {
  return label == o.label && b1 == o.b1 && b2 == o.b2 &&
         moment_values == o.moment_values && w0_square == o.w0_square &&
         w1_square == o.w1_square && betti == o.betti && hlp == o.hlp &&
         family == o.family && warnings == o.warnings;
}

RunReport run_model(const ModelSpec& spec) {
  AssembledModel assembled = assemble_model(spec);
  const SimpleHamiltonianModel& model = assembled.model;

  RunReport r;
  r.label = spec.label;
  r.b1 = model.base->b1;
  r.b2 = model.base->b2;
  r.moment_values = {model.zmin.moment_value, model.zmax.moment_value};
  r.w0_square = model.w0.square();
  r.w1_square = model.w1.square();
  r.warnings = assembled.warnings;

  const std::vector<long> base_betti = {1, static_cast<long>(r.b1),
                                        static_cast<long>(r.b2),
                                        static_cast<long>(r.b1), 1};
  BettiProfile profile = betti_profile(4, 4, base_betti, base_betti);
  r.betti = profile.betti;

  r.hlp = hlp_verdict(model);

  if (spec.family.has_value()) {
    const FamilySpec& fs = *spec.family;
    CohClass start = fs.w0.has_value()
                         ? CohClass::two_class(model.base, *fs.w0)
                         : model.w0.cls();
    SymplecticClass w_start = [&]() {
      try {
        return SymplecticClass(start);
      } catch (const std::invalid_argument& ex) {
        throw BuildError(std::string("family.w0: ") + ex.what());
      }
    }();
    CohClass fam_e = CohClass::two_class(model.base, fs.e);
    r.family = family_check(w_start, fam_e, fs.samples, fs.t_range);
  }
  return r;
}

namespace {

std::string join_rationals(const std::vector<Rational>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << " ";
    os << to_string(v[i]);
  }
  return os.str();
}

void render_matrix(std::ostringstream& os, const QMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "    ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << to_string(m.at(i, j));
    }
    os << "\n";
  }
}

}  // namespace

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << "== hard Lefschetz report: " << r.label << " ==\n";
  os << "base 4-manifold: b1 = " << r.b1 << ", b2 = " << r.b2 << "\n";
  os << "moment values: " << to_string(r.moment_values.first) << " "
     << to_string(r.moment_values.second) << "\n";
  os << "betti profile of M (dims 4,4):";
  for (long b : r.betti) os << " " << b;
  os << "\n";
  os << "symplectic proxies: integral(w0^2) = " << to_string(r.w0_square)
     << ", integral(w1^2) = " << to_string(r.w1_square) << "\n";

  os << "HR2 [" << r.hlp.hr2.rows() << "x" << r.hlp.hr2.cols()
     << "]: det = " << to_string(r.hlp.det_hr2) << ", rank = " << r.hlp.rank_hr2
     << "\n";
  render_matrix(os, r.hlp.hr2);
  os << "HR1 [" << r.hlp.hr1.rows() << "x" << r.hlp.hr1.cols()
     << "]: det = " << to_string(r.hlp.det_hr1) << ", rank = " << r.hlp.rank_hr1;
  if (r.hlp.hr1.rows() == 0) os << " (empty: non-singular by convention)";
  os << "\n";
  render_matrix(os, r.hlp.hr1);

  os << "k=0 sanity: integral(omega^3) = " << to_string(r.hlp.sanity_top)
     << (r.hlp.sanity_top != 0 ? " (nonzero)" : " (ZERO)") << "\n";
  os << "k=3: automatic (Poincare duality)\n";
  os << "criterion breakdown:\n";
  os << "  pairing integral(w0*w1) = " << to_string(r.hlp.criterion_pairing)
     << (r.hlp.criterion_pairing != 0 ? " (nonzero)" : " (zero)") << "\n";
  os << "  hard Lefschetz of (N, w0+w1): "
     << (r.hlp.criterion_hlp_base ? "holds" : "fails") << "\n";
  os << "localization: " << r.hlp.localization.integrals
     << " integrals evaluated, " << r.hlp.localization.u_free << " u-free\n";
  os << "verdict: hard Lefschetz " << (r.hlp.verdict ? "HOLDS" : "FAILS")
     << "\n";
  if (r.hlp.hr2_kernel.has_value())
    os << "kernel certificate (HR2 * v = 0): [" << join_rationals(*r.hlp.hr2_kernel)
       << "]\n";
  if (r.hlp.hr1_kernel.has_value())
    os << "kernel certificate (HR1 * v = 0): [" << join_rationals(*r.hlp.hr1_kernel)
       << "]\n";

  if (r.family.has_value()) {
    const FamilyReport& f = *r.family;
    os << "family check on [" << to_string(f.t_range.first) << ", "
       << to_string(f.t_range.second) << "]:\n";
    os << "  q(t) = integral((w - t*e)^2) = " << to_string(f.c2) << "*t^2 + "
       << to_string(f.c1) << "*t + " << to_string(f.c0) << "\n";
    if (f.roots.has_value())
      os << "  rational roots: " << join_rationals(*f.roots) << "\n";
    else
      os << "  rational roots: none\n";
    os << "  constant sign on the interval: " << (f.constant_sign ? "yes" : "NO");
    if (f.constant_sign) os << " (sign " << (f.sign > 0 ? "+" : "-") << ")";
    os << "\n";
    os << "  samples:";
    for (const auto& [t, q] : f.samples)
      os << " q(" << to_string(t) << ")=" << to_string(q);
    os << "\n";
  }

  os << "interpretation: " << r.hlp.interpretation << "\n";
  if (r.warnings.empty()) {
    os << "warnings: none\n";
  } else {
    os << "warnings:\n";
    for (const auto& w : r.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

namespace {

json rational_json(const Rational& r) { return to_string(r); }

json vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json matrix_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(rational_json(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Rational rational_from(const json& v) { return parse_rational(v.get<std::string>()); }

std::vector<Rational> vector_from(const json& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(rational_from(x));
  return out;
}

QMatrix matrix_from(const json& v, std::size_t cols_hint) {
  const std::size_t rows = v.size();
  const std::size_t cols = rows == 0 ? cols_hint : v[0].size();
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rational_from(v[i][j]);
  return m;
}

json report_body(const RunReport& r) {
  json doc;
  doc["label"] = r.label;
  doc["b1"] = r.b1;
  doc["b2"] = r.b2;
  doc["moment_values"] =
      json::array({rational_json(r.moment_values.first),
                   rational_json(r.moment_values.second)});
  doc["w0_square"] = rational_json(r.w0_square);
  doc["w1_square"] = rational_json(r.w1_square);
  doc["betti"] = r.betti;
  doc["hr1"] = matrix_json(r.hlp.hr1);
  doc["hr2"] = matrix_json(r.hlp.hr2);
  doc["det_hr1"] = rational_json(r.hlp.det_hr1);
  doc["det_hr2"] = rational_json(r.hlp.det_hr2);
  doc["rank_hr1"] = r.hlp.rank_hr1;
  doc["rank_hr2"] = r.hlp.rank_hr2;
  doc["sanity_top"] = rational_json(r.hlp.sanity_top);
  doc["criterion_pairing"] = rational_json(r.hlp.criterion_pairing);
  doc["criterion_hlp_base"] = r.hlp.criterion_hlp_base;
  doc["verdict"] = r.hlp.verdict;
  json kc;
  kc["hr1"] = r.hlp.hr1_kernel.has_value() ? vector_json(*r.hlp.hr1_kernel)
                                           : json(nullptr);
  kc["hr2"] = r.hlp.hr2_kernel.has_value() ? vector_json(*r.hlp.hr2_kernel)
                                           : json(nullptr);
  doc["kernel_certificates"] = std::move(kc);
  doc["localization"] = json{{"integrals", r.hlp.localization.integrals},
                             {"u_free", r.hlp.localization.u_free}};
  doc["interpretation"] = r.hlp.interpretation;
  doc["warnings"] = r.warnings;
  if (r.family.has_value()) {
    const FamilyReport& f = *r.family;
    json fam;
    fam["q_t2"] = rational_json(f.c2);
    fam["q_t1"] = rational_json(f.c1);
    fam["q_t0"] = rational_json(f.c0);
    fam["t_range"] = json::array({rational_json(f.t_range.first),
                                  rational_json(f.t_range.second)});
    fam["roots"] = f.roots.has_value() ? vector_json(*f.roots) : json(nullptr);
    fam["constant_sign"] = f.constant_sign;
    fam["sign"] = f.sign;
    json samples = json::array();
    for (const auto& [t, q] : f.samples)
      samples.push_back(json::array({rational_json(t), rational_json(q)}));
    fam["samples"] = std::move(samples);
    doc["family"] = std::move(fam);
  } else {
    doc["family"] = nullptr;
  }
  return doc;
}

RunReport report_from(const json& doc) {
  RunReport r;
  r.label = doc.at("label").get<std::string>();
  r.b1 = doc.at("b1").get<std::size_t>();
  r.b2 = doc.at("b2").get<std::size_t>();
  r.moment_values = {rational_from(doc.at("moment_values")[0]),
                     rational_from(doc.at("moment_values")[1])};
  r.w0_square = rational_from(doc.at("w0_square"));
  r.w1_square = rational_from(doc.at("w1_square"));
  r.betti = doc.at("betti").get<std::vector<long>>();
  r.hlp.hr1 = matrix_from(doc.at("hr1"), r.b1);
  r.hlp.hr2 = matrix_from(doc.at("hr2"), r.b2 + 1);
  r.hlp.det_hr1 = rational_from(doc.at("det_hr1"));
  r.hlp.det_hr2 = rational_from(doc.at("det_hr2"));
  r.hlp.rank_hr1 = doc.at("rank_hr1").get<std::size_t>();
  r.hlp.rank_hr2 = doc.at("rank_hr2").get<std::size_t>();
  r.hlp.sanity_top = rational_from(doc.at("sanity_top"));
  r.hlp.criterion_pairing = rational_from(doc.at("criterion_pairing"));
  r.hlp.criterion_hlp_base = doc.at("criterion_hlp_base").get<bool>();
  r.hlp.verdict = doc.at("verdict").get<bool>();
  const json& kc = doc.at("kernel_certificates");
  if (!kc.at("hr1").is_null()) r.hlp.hr1_kernel = vector_from(kc.at("hr1"));
  if (!kc.at("hr2").is_null()) r.hlp.hr2_kernel = vector_from(kc.at("hr2"));
  r.hlp.localization.integrals =
      doc.at("localization").at("integrals").get<std::size_t>();
  r.hlp.localization.u_free =
      doc.at("localization").at("u_free").get<std::size_t>();
  r.hlp.interpretation = doc.at("interpretation").get<std::string>();
  r.warnings = doc.at("warnings").get<std::vector<std::string>>();
  if (!doc.at("family").is_null()) {
    const json& fam = doc.at("family");
    FamilyReport f;
    f.c2 = rational_from(fam.at("q_t2"));
    f.c1 = rational_from(fam.at("q_t1"));
    f.c0 = rational_from(fam.at("q_t0"));
    f.t_range = {rational_from(fam.at("t_range")[0]),
                 rational_from(fam.at("t_range")[1])};
    if (!fam.at("roots").is_null()) f.roots = vector_from(fam.at("roots"));
    f.constant_sign = fam.at("constant_sign").get<bool>();
    f.sign = fam.at("sign").get<int>();
    for (const auto& s : fam.at("samples"))
      f.samples.emplace_back(rational_from(s[0]), rational_from(s[1]));
    r.family = std::move(f);
  }
  return r;
}

}  // namespace

std::string emit_json(const RunReport& report) {
  return report_body(report).dump(2) + "\n";
}

RunReport parse_report_json(const std::string& text) {
  return report_from(json::parse(text));
}

SweepReport sweep_model(const ModelSpec& spec,
                        const std::vector<SweepVar>& vars) {
  for (const SweepVar& v : vars)
    if (v.index >= spec.e.size())
      throw std::invalid_argument("sweep variable index out of range");

  SweepReport out;
  out.vars = vars;

  // odometer over the ranges, last variable fastest; an empty or reversed
  // range gives an empty table
  std::vector<std::vector<std::pair<std::size_t, long>>> assignments;
  bool any_empty = vars.empty();
  for (const SweepVar& v : vars) any_empty = any_empty || v.lo > v.hi;
  if (!any_empty) {
    std::vector<long> current(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) current[i] = vars[i].lo;
    bool exhausted = false;
    while (!exhausted) {
      std::vector<std::pair<std::size_t, long>> a;
      a.reserve(vars.size());
      for (std::size_t i = 0; i < vars.size(); ++i)
        a.emplace_back(vars[i].index, current[i]);
      assignments.push_back(std::move(a));
      exhausted = true;
      for (std::size_t pos = vars.size(); pos-- > 0;) {
        if (current[pos] < vars[pos].hi) {
          ++current[pos];
          for (std::size_t q = pos + 1; q < vars.size(); ++q)
            current[q] = vars[q].lo;
          exhausted = false;
          break;
        }
      }
    }
  }

  out.rows.resize(assignments.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto compute_row = [&](std::size_t row) {
    SweepRow& slot = out.rows[row];
    slot.assignment = assignments[row];
    ModelSpec instance = spec;
    for (const auto& [idx, value] : slot.assignment)
      instance.e[idx] = Rational(value);
    instance.family.reset();  // family blocks are not swept
    try {
      slot.report = run_model(instance);
    } catch (const BuildError& ex) {
      slot.flag = ex.what();
    } catch (const InternalInconsistencyError& ex) {
      slot.flag = std::string("internal inconsistency: ") + ex.what();
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  const std::size_t n = assignments.size();
  const std::size_t hw = std::thread::hardware_concurrency();
  const std::size_t workers = std::min<std::size_t>(n, hw == 0 ? 1 : hw);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) compute_row(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
          compute_row(i);
      });
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

namespace {

std::string assignment_text(const std::vector<std::pair<std::size_t, long>>& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << "e[" << a[i].first << "]=" << a[i].second;
  }
  return os.str();
}

}  // namespace

std::string render_sweep_text(const SweepReport& report) {
  std::ostringstream os;
  os << "== sweep: " << report.rows.size() << " instance(s) ==\n";
  std::size_t failures = 0, flagged = 0;
  for (const SweepRow& row : report.rows) {
    os << assignment_text(row.assignment) << " | ";
    if (!row.flag.empty()) {
      os << "FLAGGED: " << row.flag << "\n";
      ++flagged;
      continue;
    }
    const RunReport& r = *row.report;
    os << "pairing = " << to_string(r.hlp.criterion_pairing)
       << ", det HR2 = " << to_string(r.hlp.det_hr2)
       << ", det HR1 = " << to_string(r.hlp.det_hr1) << " | "
       << (r.hlp.verdict ? "holds" : "FAILS") << "\n";
    if (!r.hlp.verdict) ++failures;
  }
  os << "summary: " << failures << " non-hard-Lefschetz instance(s), "
     << flagged << " flagged\n";
  for (const SweepRow& row : report.rows) {
    if (row.flag.empty() && !row.report->hlp.verdict) {
      os << "  " << assignment_text(row.assignment);
      if (row.report->hlp.hr2_kernel.has_value())
        os << " kernel(HR2) = [" << join_rationals(*row.report->hlp.hr2_kernel)
           << "]";
      if (row.report->hlp.hr1_kernel.has_value())
        os << " kernel(HR1) = [" << join_rationals(*row.report->hlp.hr1_kernel)
           << "]";
      os << "\n";
    }
  }
  return os.str();
}

std::string emit_sweep_json(const SweepReport& report) {
  json rows = json::array();
  for (const SweepRow& row : report.rows) {
    json r;
    json assignment = json::array();
    for (const auto& [idx, value] : row.assignment)
      assignment.push_back(json{{"index", idx}, {"value", value}});
    r["assignment"] = std::move(assignment);
    r["flag"] = row.flag;
    r["report"] = row.report.has_value() ? report_body(*row.report) : json(nullptr);
    rows.push_back(std::move(r));
  }
  json doc;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace hlp
