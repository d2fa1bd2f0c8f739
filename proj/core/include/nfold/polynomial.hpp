#pragma once

#include <initializer_list>
#include <vector>

#include "nfold/errors.hpp"

namespace nfold {

/// Real polynomial stored highest-degree-first: coeffs = {a_m, ..., a_0}.
/// The leading coefficient must be meaningfully nonzero; degree 0 is allowed
/// (constants like T_0), but the root solver requires degree >= 1.
class Polynomial {
 public:
  Polynomial(std::initializer_list<double> coeffs)
      : Polynomial(std::vector<double>(coeffs)) {}
  explicit Polynomial(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double leading() const { return coeffs_.front(); }

  /// Horner evaluation.  The long-double variant keeps ~19 significant digits
  /// internally; large-coefficient inputs (period step polynomials) need it.
  double eval(double x) const;
  long double eval_ld(long double x) const;

  Polynomial derivative() const;

  /// Coefficients of p(s*x): substitute x -> s*x.  Rescales roots by 1/s,
  /// bringing out-of-range roots into the searchable window.
  Polynomial scaled_argument(double s) const;

  /// max_i |a_i| * max(1, |x|)^i — magnitude scale of the Horner evaluation,
  /// used to normalize residuals.
  double magnitude_at(double x) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<double> coeffs_;
};

}  // namespace nfold
