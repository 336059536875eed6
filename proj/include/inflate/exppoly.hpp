#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace inflate {

using Complex = std::complex<double>;

/// One term c * t^m * exp(i*theta*t).
struct EpTerm {
  Complex c;
  int m = 0;        // power of t, >= 0
  double theta = 0; // phase rate
};

// Phases within this distance merge into one term.  Lattice phases are exact
// integers (or well-separated rationals in quadrature mode), so merging never
// conflates genuinely distinct rates at the scales this library targets.
inline constexpr double kPhaseMergeTol = 1e-12;
// Coefficients below this are treated as exact zero and pruned.
inline constexpr double kCoeffPruneTol = 1e-300;

/// Finite sum of c * t^m * e^{i theta t}, canonicalized: terms sorted by
/// (m, theta), equal (m, theta) merged, zero coefficients pruned.  Closed
/// under product, conjugation, and the Duhamel time integral, which is what
/// lets the Picard iterates be carried exactly in time.
class ExpPoly {
 public:
  ExpPoly() = default;
  explicit ExpPoly(std::vector<EpTerm> terms);

  static ExpPoly zero() { return ExpPoly(); }
  static ExpPoly constant(Complex c);
  /// c * t^m * e^{i theta t}
  static ExpPoly term(Complex c, int m, double theta);

  Complex value(double t) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<EpTerm>& terms() const { return terms_; }

  ExpPoly conjugated() const;
  ExpPoly scaled(Complex c) const;
  /// Adds dtheta to every term's phase rate (folds in a free-evolution phase).
  ExpPoly phase_shifted(double dtheta) const;

  ExpPoly& operator+=(const ExpPoly& other);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }

  /// Termwise product: powers add, phases add.  Throws NumericGuard when the
  /// raw product exceeds the term cap.
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);

  /// Integral_0^t e^{i tau phi_shift} * this(tau) dtau, again an ExpPoly.
  /// Resonant terms (total rate 0) become secular t^{m+1}/(m+1); oscillatory
  /// terms use the closed form by parts, except that a truncated power series
  /// takes over when |rate * t_max| < 1e-4 so small rates stay accurate.
  ExpPoly duhamel(double phi_shift, double t_max) const;

  static std::size_t term_cap();
  static void set_term_cap(std::size_t cap);

 private:
  std::vector<EpTerm> terms_;
};

/// Integral_0^t... of a pure phase: returns T when phi == 0, the closed form
/// (e^{iT phi}-1)/(i phi) otherwise, with a series branch for |phi*T| < 1e-4.
Complex phase_integral(double phi, double T);

}  // namespace inflate
