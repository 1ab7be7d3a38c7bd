#include "hlp/four_manifold.hpp"

#include <sstream>
#include <stdexcept>

namespace hlp {

ModelPtr make_four_manifold(std::size_t b1, QMatrix intersection,
                            std::vector<std::vector<std::vector<Rational>>> cup11,
                            std::string label) {
  const std::size_t b2 = intersection.rows();
  if (intersection.cols() != b2)
    throw std::invalid_argument("intersection matrix must be square");
  if (!intersection.is_symmetric())
    throw std::invalid_argument("intersection matrix must be symmetric");
  if (intersection.det() == 0)
    throw std::invalid_argument(
        "Poincare duality violated: intersection matrix is singular");

  if (cup11.size() != b1)
    throw std::invalid_argument("cup11 tensor must have b1 rows");
  for (std::size_t i = 0; i < b1; ++i) {
    if (cup11[i].size() != b1)
      throw std::invalid_argument("cup11 tensor must be b1 x b1");
    for (std::size_t j = 0; j < b1; ++j)
      if (cup11[i][j].size() != b2)
        throw std::invalid_argument("cup11 entries must have length b2");
  }
  for (std::size_t i = 0; i < b1; ++i)
    for (std::size_t j = 0; j < b1; ++j)
      for (std::size_t k = 0; k < b2; ++k)
        if (cup11[i][j][k] != -cup11[j][i][k])
          throw std::invalid_argument("cup11 tensor must be antisymmetric in i, j");

  auto m = std::make_shared<FourManifoldCohomology>();
  m->label = std::move(label);
  m->b1 = b1;
  m->b2 = b2;
  m->intersection = std::move(intersection);
  m->cup11 = std::move(cup11);
  if (b1 % 2 != 0)
    m->warnings.push_back(
        "b1 is odd: no symplectic 4-manifold realizes this model");
  return m;
}

CohClass::CohClass(ModelPtr model)
    : model_(std::move(model)),
      deg0_(0),
      deg1_(model_->b1, Rational(0)),
      deg2_(model_->b2, Rational(0)),
      deg3_(model_->b1, Rational(0)),
      deg4_(0) {}

CohClass CohClass::scalar(ModelPtr model, const Rational& c) {
  CohClass out(std::move(model));
  out.deg0_ = c;
  return out;
}

CohClass CohClass::one_class(ModelPtr model, std::vector<Rational> coords) {
  if (coords.size() != model->b1)
    throw std::invalid_argument("degree-1 coordinate length must equal b1");
  CohClass out(std::move(model));
  out.deg1_ = std::move(coords);
  return out;
}

CohClass CohClass::two_class(ModelPtr model, std::vector<Rational> coords) {
  if (coords.size() != model->b2)
    throw std::invalid_argument("degree-2 coordinate length must equal b2");
  CohClass out(std::move(model));
  out.deg2_ = std::move(coords);
  return out;
}

CohClass CohClass::three_class(ModelPtr model, std::vector<Rational> coords) {
  if (coords.size() != model->b1)
    throw std::invalid_argument("degree-3 coordinate length must equal b1");
  CohClass out(std::move(model));
  out.deg3_ = std::move(coords);
  return out;
}

CohClass CohClass::top_class(ModelPtr model, const Rational& c) {
  CohClass out(std::move(model));
  out.deg4_ = c;
  return out;
}

CohClass CohClass::two_basis(ModelPtr model, std::size_t k) {
  std::vector<Rational> coords(model->b2, Rational(0));
  coords.at(k) = 1;
  return two_class(std::move(model), std::move(coords));
}

CohClass CohClass::one_basis(ModelPtr model, std::size_t i) {
  std::vector<Rational> coords(model->b1, Rational(0));
  coords.at(i) = 1;
  return one_class(std::move(model), std::move(coords));
}

bool CohClass::is_zero() const {
  auto all_zero = [](const std::vector<Rational>& v) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  };
  return deg0_ == 0 && deg4_ == 0 && all_zero(deg1_) && all_zero(deg2_) &&
         all_zero(deg3_);
}

std::optional<int> CohClass::homogeneous_degree() const {
  auto nonzero = [](const std::vector<Rational>& v) {
    for (const auto& x : v)
      if (x != 0) return true;
    return false;
  };
  int found = -1;
  auto mark = [&found](int d) {
    if (found >= 0 && found != d) found = -2;
    else if (found != -2) found = d;
  };
  if (deg0_ != 0) mark(0);
  if (nonzero(deg1_)) mark(1);
  if (nonzero(deg2_)) mark(2);
  if (nonzero(deg3_)) mark(3);
  if (deg4_ != 0) mark(4);
  if (found < 0) return std::nullopt;
  return found;
}

namespace {
void check_same_model(const CohClass& a, const CohClass& b) {
  if (a.model() != b.model())
    throw std::invalid_argument("classes belong to different models");
}
}  // namespace

CohClass CohClass::operator+(const CohClass& o) const {
  check_same_model(*this, o);
  CohClass out(model_);
  out.deg0_ = deg0_ + o.deg0_;
  out.deg4_ = deg4_ + o.deg4_;
  for (std::size_t i = 0; i < deg1_.size(); ++i) {
    out.deg1_[i] = deg1_[i] + o.deg1_[i];
    out.deg3_[i] = deg3_[i] + o.deg3_[i];
  }
  for (std::size_t k = 0; k < deg2_.size(); ++k)
    out.deg2_[k] = deg2_[k] + o.deg2_[k];
  return out;
}

CohClass CohClass::operator-(const CohClass& o) const {
  return *this + (Rational(-1) * o);
}

CohClass CohClass::operator-() const { return Rational(-1) * *this; }

CohClass operator*(const Rational& s, const CohClass& c) {
  CohClass out(c.model_);
  out.deg0_ = s * c.deg0_;
  out.deg4_ = s * c.deg4_;
  for (std::size_t i = 0; i < c.deg1_.size(); ++i) {
    out.deg1_[i] = s * c.deg1_[i];
    out.deg3_[i] = s * c.deg3_[i];
  }
  for (std::size_t k = 0; k < c.deg2_.size(); ++k) out.deg2_[k] = s * c.deg2_[k];
  return out;
}

bool CohClass::operator==(const CohClass& o) const {
  return model_ == o.model_ && deg0_ == o.deg0_ && deg1_ == o.deg1_ &&
         deg2_ == o.deg2_ && deg3_ == o.deg3_ && deg4_ == o.deg4_;
}

CohClass cup(const CohClass& a, const CohClass& b) {
  check_same_model(a, b);
  const auto& m = *a.model_;
  CohClass out(a.model_);

  // scalar parts distribute over every degree
  out.deg0_ = a.deg0_ * b.deg0_;
  for (std::size_t i = 0; i < m.b1; ++i) {
    out.deg1_[i] = a.deg0_ * b.deg1_[i] + b.deg0_ * a.deg1_[i];
    out.deg3_[i] = a.deg0_ * b.deg3_[i] + b.deg0_ * a.deg3_[i];
  }
  for (std::size_t k = 0; k < m.b2; ++k)
    out.deg2_[k] = a.deg0_ * b.deg2_[k] + b.deg0_ * a.deg2_[k];
  out.deg4_ = a.deg0_ * b.deg4_ + b.deg0_ * a.deg4_;

  // deg1 x deg1 -> deg2 through the cup tensor
  for (std::size_t i = 0; i < m.b1; ++i) {
    if (a.deg1_[i] == 0) continue;
    for (std::size_t j = 0; j < m.b1; ++j) {
      if (b.deg1_[j] == 0) continue;
      const Rational f = a.deg1_[i] * b.deg1_[j];
      for (std::size_t k = 0; k < m.b2; ++k)
        out.deg2_[k] += f * m.cup11[i][j][k];
    }
  }

  // deg1 x deg2 -> deg3, coordinates determined by duality against the H^1
  // basis: (x u y)_j = sum_{i,p,k} x_i y_k cup11[j][i][p] Q[p][k].
  auto one_two = [&m](const std::vector<Rational>& x,
                      const std::vector<Rational>& y,
                      std::vector<Rational>& acc) {
    std::vector<Rational> qy(m.b2, Rational(0));
    for (std::size_t p = 0; p < m.b2; ++p)
      for (std::size_t k = 0; k < m.b2; ++k)
        qy[p] += m.intersection.at(p, k) * y[k];
    for (std::size_t j = 0; j < m.b1; ++j)
      for (std::size_t i = 0; i < m.b1; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t p = 0; p < m.b2; ++p)
          acc[j] += x[i] * m.cup11[j][i][p] * qy[p];
      }
  };
  one_two(a.deg1_, b.deg2_, out.deg3_);
  one_two(b.deg1_, a.deg2_, out.deg3_);  // deg2 commutes with deg1

  // deg2 x deg2 -> deg4 through the intersection pairing
  for (std::size_t p = 0; p < m.b2; ++p) {
    if (a.deg2_[p] == 0) continue;
    for (std::size_t k = 0; k < m.b2; ++k)
      out.deg4_ += a.deg2_[p] * m.intersection.at(p, k) * b.deg2_[k];
  }

  // deg1 x deg3 -> deg4; the pairing is the identity in our bases, and
  // deg3 x deg1 picks up the graded sign.
  for (std::size_t i = 0; i < m.b1; ++i)
    out.deg4_ += a.deg1_[i] * b.deg3_[i] - b.deg1_[i] * a.deg3_[i];

  return out;
}

std::string CohClass::str() const {
  std::ostringstream os;
  os << "[deg0 " << to_string(deg0_) << "; deg1";
  for (const auto& x : deg1_) os << " " << to_string(x);
  os << "; deg2";
  for (const auto& x : deg2_) os << " " << to_string(x);
  os << "; deg3";
  for (const auto& x : deg3_) os << " " << to_string(x);
  os << "; deg4 " << to_string(deg4_) << "]";
  return os.str();
}

SymplecticClass::SymplecticClass(CohClass cls) : cls_(std::move(cls)) {
  if (cls_.homogeneous_degree() != 2)
    throw std::invalid_argument("symplectic class must be pure degree 2");
  square_ = cup(cls_, cls_).integrate();
  if (square_ == 0)
    throw std::invalid_argument(
        "class fails the symplectic proxy: integral of its square is zero");
}

FourManifoldHlp hlp_check_4mfd(const ModelPtr& model, const CohClass& w) {
  if (w.model() != model)
    throw std::invalid_argument("class belongs to a different model");
  auto wdeg = w.homogeneous_degree();
  if (wdeg.has_value() && *wdeg != 2)
    throw std::invalid_argument("w must be concentrated in degree 2");

  FourManifoldHlp out;
  out.w_square = cup(w, w).integrate();

  const std::size_t b1 = model->b1;
  out.h1_matrix = QMatrix(b1, b1);
  for (std::size_t i = 0; i < b1; ++i)
    for (std::size_t j = 0; j < b1; ++j) {
      CohClass aij = cup(CohClass::one_basis(model, i), CohClass::one_basis(model, j));
      out.h1_matrix.at(i, j) = cup(aij, w).integrate();
    }
  out.h1_det = out.h1_matrix.det();
  if (out.h1_det == 0 && b1 > 0) {
    auto kernel = out.h1_matrix.nullspace();
    if (!kernel.empty()) out.h1_kernel = kernel.front();
  }
  out.holds = (out.w_square != 0) && (out.h1_det != 0);
  return out;
}

}  // namespace hlp
