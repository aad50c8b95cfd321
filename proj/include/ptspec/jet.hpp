#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ptspec::aim {

/// Truncated Taylor expansion sum_j c_j (x - x0)^j, j = 0..order.
///
/// All binary operations require the same expansion point and order and
/// throw Error(mismatch) otherwise. Products and quotients are truncated at
/// `order`; differentiation loses the top coefficient and re-pads it with 0.
class SeriesJet {
 public:
  SeriesJet(double x0, std::size_t order);
  SeriesJet(double x0, std::vector<double> coeffs);

  static SeriesJet constant(double x0, std::size_t order, double value);
  /// The jet of the identity function x (not x - x0).
  static SeriesJet variable(double x0, std::size_t order);

  double x0() const noexcept { return x0_; }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](std::size_t j) const { return coeffs_.at(j); }
  double value() const noexcept { return coeffs_.front(); }

  /// Horner evaluation at x0 + h.
  double evaluate_offset(double h) const noexcept;

  SeriesJet& operator+=(const SeriesJet& other);
  SeriesJet& operator-=(const SeriesJet& other);
  SeriesJet& operator*=(double s) noexcept;

 private:
  void check_compatible(const SeriesJet& other) const;

  double x0_;
  std::vector<double> coeffs_;

  friend SeriesJet jet_mul(const SeriesJet&, const SeriesJet&);
  friend SeriesJet jet_div(const SeriesJet&, const SeriesJet&);
  friend SeriesJet jet_differentiate(const SeriesJet&);
};

SeriesJet jet_add(const SeriesJet& a, const SeriesJet& b);
SeriesJet jet_sub(const SeriesJet& a, const SeriesJet& b);
SeriesJet jet_mul(const SeriesJet& a, const SeriesJet& b);
/// Throws Error(domain) when b has a vanishing constant term.
SeriesJet jet_div(const SeriesJet& a, const SeriesJet& b);
SeriesJet jet_differentiate(const SeriesJet& a);
SeriesJet jet_scale(const SeriesJet& a, double s);

inline SeriesJet operator+(const SeriesJet& a, const SeriesJet& b) { return jet_add(a, b); }
inline SeriesJet operator-(const SeriesJet& a, const SeriesJet& b) { return jet_sub(a, b); }
inline SeriesJet operator*(const SeriesJet& a, const SeriesJet& b) { return jet_mul(a, b); }
inline SeriesJet operator/(const SeriesJet& a, const SeriesJet& b) { return jet_div(a, b); }
inline SeriesJet operator*(double s, const SeriesJet& a) { return jet_scale(a, s); }
inline SeriesJet operator*(const SeriesJet& a, double s) { return jet_scale(a, s); }

}  // namespace ptspec::aim
