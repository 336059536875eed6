#include "inflate/exppoly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>

#include "inflate/errors.hpp"

namespace inflate {

namespace {

std::atomic<std::size_t> g_term_cap{1000000};

// Sort key: power first, then phase rate.
bool term_less(const EpTerm& a, const EpTerm& b) {
  if (a.m != b.m) return a.m < b.m;
  return a.theta < b.theta;
}

// Merge in place.  Stable sort keeps insertion order within equal (m, theta)
// runs, so coefficient sums are accumulated in a reproducible order.
void canonicalize(std::vector<EpTerm>& terms) {
  std::stable_sort(terms.begin(), terms.end(), term_less);
  std::vector<EpTerm> out;
  out.reserve(terms.size());
  for (const EpTerm& t : terms) {
    if (!out.empty() && out.back().m == t.m &&
        std::abs(out.back().theta - t.theta) <= kPhaseMergeTol) {
      out.back().c += t.c;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const EpTerm& t) { return std::abs(t.c) < kCoeffPruneTol; });
  terms = std::move(out);
}

}  // namespace

ExpPoly::ExpPoly(std::vector<EpTerm> terms) : terms_(std::move(terms)) {
  canonicalize(terms_);
}

ExpPoly ExpPoly::constant(Complex c) { return ExpPoly({EpTerm{c, 0, 0.0}}); }

ExpPoly ExpPoly::term(Complex c, int m, double theta) {
  return ExpPoly({EpTerm{c, m, theta}});
}

Complex ExpPoly::value(double t) const {
  Complex acc{0.0, 0.0};
  for (const EpTerm& term : terms_) {
    double tm = 1.0;
    for (int i = 0; i < term.m; ++i) tm *= t;
    acc += term.c * tm * std::polar(1.0, term.theta * t);
  }
  return acc;
}

ExpPoly ExpPoly::conjugated() const {
  std::vector<EpTerm> out = terms_;
  for (EpTerm& t : out) {
    t.c = std::conj(t.c);
    t.theta = -t.theta;
  }
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::scaled(Complex c) const {
  std::vector<EpTerm> out = terms_;
  for (EpTerm& t : out) t.c *= c;
  return ExpPoly(std::move(out));
}

ExpPoly ExpPoly::phase_shifted(double dtheta) const {
  std::vector<EpTerm> out = terms_;
  for (EpTerm& t : out) t.theta += dtheta;
  return ExpPoly(std::move(out));
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  std::vector<EpTerm> merged = terms_;
  merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
  canonicalize(merged);
  terms_ = std::move(merged);
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  const std::size_t cap = ExpPoly::term_cap();
  if (a.size() * b.size() > cap) {
    throw NumericGuard("ExpPoly term cap exceeded in product (" +
                       std::to_string(a.size()) + " x " + std::to_string(b.size()) +
                       " > " + std::to_string(cap) +
                       "); iterate too deep for exact mode");
  }
  std::vector<EpTerm> out;
  out.reserve(a.size() * b.size());
  for (const EpTerm& ta : a.terms()) {
    for (const EpTerm& tb : b.terms()) {
      out.push_back(EpTerm{ta.c * tb.c, ta.m + tb.m, ta.theta + tb.theta});
    }
  }
  return ExpPoly(std::move(out));
}

namespace {

// Closed form of integral_0^t tau^m e^{i w tau} dtau by repeated integration
// by parts: I_m = t^m e^{iwt}/(iw) - (m/(iw)) I_{m-1}.
void duhamel_by_parts(Complex c, int m, double w, std::vector<EpTerm>& out) {
  const Complex inv_iw = Complex(0.0, -1.0) / w;  // 1/(iw)
  // coeffs[j] multiplies t^j e^{iwt}; tail is the constant term.
  std::vector<Complex> coeffs(static_cast<std::size_t>(m) + 1, Complex{});
  Complex tail = -inv_iw;
  coeffs[0] = inv_iw;
  for (int j = 1; j <= m; ++j) {
    const Complex f = -static_cast<double>(j) * inv_iw;
    for (int i = 0; i < j; ++i) coeffs[i] *= f;
    tail *= f;
    coeffs[j] = inv_iw;
  }
  for (int j = 0; j <= m; ++j) out.push_back(EpTerm{c * coeffs[j], j, w});
  out.push_back(EpTerm{c * tail, 0, 0.0});
}

// Series branch for |w * t_max| < 1e-4:
//   integral = sum_n (iw)^n/n! * t^{m+n+1}/(m+n+1).
void duhamel_series(Complex c, int m, double w, double t_max,
                    std::vector<EpTerm>& out) {
  Complex pw{1.0, 0.0};  // (iw)^n / n!
  double bound = 1.0;    // |w*t_max|^n / n!
  for (int n = 0; n <= 40; ++n) {
    out.push_back(EpTerm{c * pw / static_cast<double>(m + n + 1), m + n + 1, 0.0});
    if (bound < 1e-18) break;
    pw *= Complex(0.0, w) / static_cast<double>(n + 1);
    bound *= std::abs(w) * std::max(t_max, 1e-30) / static_cast<double>(n + 1);
  }
}

}  // namespace

ExpPoly ExpPoly::duhamel(double phi_shift, double t_max) const {
  std::vector<EpTerm> out;
  out.reserve(terms_.size() * 3);
  for (const EpTerm& t : terms_) {
    const double w = t.theta + phi_shift;
    if (std::abs(w) <= kPhaseMergeTol) {
      // Exact resonance: secular growth.
      out.push_back(EpTerm{t.c / static_cast<double>(t.m + 1), t.m + 1, 0.0});
    } else if (std::abs(w) * t_max < 1e-4) {
      duhamel_series(t.c, t.m, w, t_max, out);
    } else {
      duhamel_by_parts(t.c, t.m, w, out);
    }
  }
  return ExpPoly(std::move(out));
}

std::size_t ExpPoly::term_cap() { return g_term_cap.load(); }
void ExpPoly::set_term_cap(std::size_t cap) { g_term_cap.store(cap); }

Complex phase_integral(double phi, double T) {
  if (phi == 0.0) return Complex(T, 0.0);
  const double x = phi * T;
  if (std::abs(x) < 1e-4) {
    // T * sum_n (ix)^n/(n+1)!, truncated at 1e-16 relative.
    Complex sum{1.0, 0.0};
    Complex term{1.0, 0.0};
    for (int n = 1; n <= 20; ++n) {
      term *= Complex(0.0, x) / static_cast<double>(n + 1);
      sum += term;
      if (std::abs(term) < 1e-17) break;
    }
    return T * sum;
  }
  // (e^{ix}-1)/(i phi) without cancellation: e^{ix}-1 = -2 sin^2(x/2) + i sin x.
  const double s = std::sin(x);
  const double h = std::sin(0.5 * x);
  return Complex(s / phi, 2.0 * h * h / phi);
}

}  // namespace inflate
