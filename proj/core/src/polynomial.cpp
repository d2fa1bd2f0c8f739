#include "nfold/polynomial.hpp"

#include <cmath>

namespace nfold {

namespace {
constexpr double kLeadingEps = 1e-9;
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw invalid_input("polynomial needs at least one coefficient");
  if (!(std::abs(coeffs_.front()) > kLeadingEps))
    throw invalid_input("polynomial leading coefficient too small");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw invalid_input("polynomial coefficient not finite");
}

double Polynomial::eval(double x) const {
  double acc = coeffs_.front();
  for (std::size_t i = 1; i < coeffs_.size(); ++i) acc = acc * x + coeffs_[i];
  return acc;
}

long double Polynomial::eval_ld(long double x) const {
  long double acc = coeffs_.front();
  for (std::size_t i = 1; i < coeffs_.size(); ++i) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  const int m = degree();
  if (m < 1) throw invalid_input("derivative of a constant polynomial");
  std::vector<double> d(coeffs_.size() - 1);
  for (int i = 0; i < m; ++i) d[i] = coeffs_[i] * static_cast<double>(m - i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::scaled_argument(double s) const {
  if (!(std::abs(s) > 0.0) || !std::isfinite(s))
    throw invalid_input("argument scale must be finite and nonzero");
  // Coefficient of x^i sits at index degree()-i and picks up s^i.
  std::vector<double> out(coeffs_);
  for (int i = 0; i <= degree(); ++i)
    out[degree() - i] = coeffs_[degree() - i] * std::pow(s, i);
  return Polynomial(std::move(out));
}

double Polynomial::magnitude_at(double x) const {
  const double ax = std::max(1.0, std::abs(x));
  double scale = 0.0;
  double pw = 1.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    scale = std::max(scale, std::abs(*it) * pw);
    pw *= ax;
  }
  return std::max(scale, 1e-300);
}

}  // namespace nfold
