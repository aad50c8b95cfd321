#include "ptspec/jet.hpp"

#include <cmath>
#include <string>

#include "ptspec/error.hpp"

namespace ptspec::aim {

SeriesJet::SeriesJet(double x0, std::size_t order) : x0_(x0), coeffs_(order + 1, 0.0) {}

SeriesJet::SeriesJet(double x0, std::vector<double> coeffs)
    : x0_(x0), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::invalid_parameter, "SeriesJet: empty coefficient list");
  }
}

SeriesJet SeriesJet::constant(double x0, std::size_t order, double value) {
  SeriesJet jet(x0, order);
  jet.coeffs_[0] = value;
  return jet;
}

SeriesJet SeriesJet::variable(double x0, std::size_t order) {
  SeriesJet jet(x0, order);
  jet.coeffs_[0] = x0;
  if (order >= 1) jet.coeffs_[1] = 1.0;
  return jet;
}

double SeriesJet::evaluate_offset(double h) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * h + *it;
  return acc;
}

void SeriesJet::check_compatible(const SeriesJet& other) const {
  if (x0_ != other.x0_ || coeffs_.size() != other.coeffs_.size()) {
    throw Error(ErrorKind::mismatch,
                "SeriesJet: incompatible operands (x0 " + std::to_string(x0_) + " vs " +
                    std::to_string(other.x0_) + ", order " + std::to_string(order()) +
                    " vs " + std::to_string(other.order()) + ")");
  }
}

SeriesJet& SeriesJet::operator+=(const SeriesJet& other) {
  check_compatible(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

SeriesJet& SeriesJet::operator-=(const SeriesJet& other) {
  check_compatible(other);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

SeriesJet& SeriesJet::operator*=(double s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SeriesJet jet_add(const SeriesJet& a, const SeriesJet& b) {
  SeriesJet out = a;
  out += b;
  return out;
}

SeriesJet jet_sub(const SeriesJet& a, const SeriesJet& b) {
  SeriesJet out = a;
  out -= b;
  return out;
}

SeriesJet jet_scale(const SeriesJet& a, double s) {
  SeriesJet out = a;
  out *= s;
  return out;
}

SeriesJet jet_mul(const SeriesJet& a, const SeriesJet& b) {
  a.check_compatible(b);
  const std::size_t n = a.coeffs_.size();
  SeriesJet out(a.x0_, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0.0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

SeriesJet jet_div(const SeriesJet& a, const SeriesJet& b) {
  a.check_compatible(b);
  const double b0 = b.coeffs_[0];
  if (b0 == 0.0) {
    throw Error(ErrorKind::domain, "jet_div: divisor vanishes at the expansion point");
  }
  const std::size_t n = a.coeffs_.size();
  SeriesJet out(a.x0_, n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = a.coeffs_[k];
    for (std::size_t j = 0; j < k; ++j) acc -= out.coeffs_[j] * b.coeffs_[k - j];
    out.coeffs_[k] = acc / b0;
  }
  return out;
}

SeriesJet jet_differentiate(const SeriesJet& a) {
  const std::size_t n = a.coeffs_.size();
  SeriesJet out(a.x0_, n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    out.coeffs_[j] = static_cast<double>(j + 1) * a.coeffs_[j + 1];
  }
  return out;
}

}  // namespace ptspec::aim
