#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "inflate/exppoly.hpp"

namespace inflate {

inline constexpr int kMaxDim = 4;

/// Lattice frequency as integer indices; coordinate i is ix[i] * step(i).
/// Unused trailing dimensions stay zero, so comparisons are uniform.
struct Freq {
  std::array<std::int64_t, kMaxDim> ix{};

  friend auto operator<=>(const Freq&, const Freq&) = default;
};

Freq make_freq(std::initializer_list<std::int64_t> indices);

/// Spatial domain R^{d1} x T^{d2}; the first d1 directions are non-periodic
/// (sampled with a quadrature cell), the last d2 periodic.  Frequencies live
/// on the product lattice with per-direction step 2*pi/period in periodic
/// directions and the quadrature cell otherwise.
class DomainSpec {
 public:
  /// Fully periodic domain; default periods 2*pi give integer frequencies.
  static DomainSpec torus(int d, const std::vector<double>& periods = {});
  /// d2 periodic directions (the trailing ones) plus quadrature cells for the
  /// leading d - d2 directions.
  static DomainSpec mixed(int d, int d2, const std::vector<double>& cells,
                          const std::vector<double>& periods = {});

  int dim() const { return dim_; }
  int periodic_dims() const { return periodic_; }
  bool pure_torus() const { return periodic_ == dim_; }
  bool quadrature_mode() const { return periodic_ < dim_; }

  double step(int i) const { return step_[static_cast<std::size_t>(i)]; }
  double period(int i) const;
  /// Measure weight of one lattice point: product of quadrature cells over
  /// non-periodic directions, 1 on a pure torus (counting measure).
  double weight() const { return weight_; }

  double coord(const Freq& f, int i) const { return static_cast<double>(f.ix[static_cast<std::size_t>(i)]) * step(i); }
  double abs2(const Freq& f) const;
  double abs(const Freq& f) const;

  /// Nearest lattice frequency to the given coordinates; ConfigError if any
  /// coordinate is off-lattice beyond 1e-12 relative.
  Freq snap(const std::vector<double>& coords) const;

  bool operator==(const DomainSpec&) const = default;

 private:
  int dim_ = 1;
  int periodic_ = 1;
  std::array<double, kMaxDim> step_{};
  std::array<double, kMaxDim> period_{};
  double weight_ = 1.0;
};

/// Field snapshot at a fixed time: sorted sparse complex amplitudes.
struct Snapshot {
  DomainSpec domain;
  double cell_size = 1.0;
  double time = 0.0;
  std::vector<std::pair<Freq, Complex>> entries;  // sorted by Freq

  double weight() const { return domain.weight(); }
  Complex at(const Freq& f) const;
};

/// Sparse frequency-indexed field with ExpPoly amplitudes (time-dependent).
/// Immutable once built by the engine; all operations are value-semantic.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(DomainSpec domain, double cell_size);

  const DomainSpec& domain() const { return domain_; }
  double cell_size() const { return cell_size_; }

  void set(const Freq& f, ExpPoly p);
  void add(const Freq& f, const ExpPoly& p);
  const ExpPoly* find(const Freq& f) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<Freq, ExpPoly>& entries() const { return entries_; }

  std::set<Freq> support() const;
  Snapshot at(double t) const;
  /// Physical (untwisted) coefficients: multiplies entry xi by e^{-it|xi|^2}.
  Snapshot at_untwisted(double t) const;

  SpectralField scaled(Complex c) const;
  SpectralField& operator+=(const SpectralField& other);

 private:
  DomainSpec domain_;
  double cell_size_ = 1.0;
  std::map<Freq, ExpPoly> entries_;
};

std::set<Freq> support(const SpectralField& field);

/// {s*sign1 + t*sign2 : s in S, t in T}; exact integer index arithmetic.
std::set<Freq> minkowski_sum(const std::set<Freq>& S, const std::set<Freq>& T,
                             int sign1, int sign2);

/// k-fold signed sumset of Sigma: all sums of k elements of Sigma u (-Sigma).
std::set<Freq> signed_sumset(const std::set<Freq>& sigma, int k);

struct SupportCheck {
  bool ok = true;
  std::optional<Freq> witness;   // a frequency outside the allowed region
  std::size_t sumset_size = 0;   // #S_k
};

/// True iff support(field) is contained in the union of boxes of side k*A
/// centered at the k-fold signed sumset of Sigma.  A failure indicates an
/// engine bug, so the witness frequency is reported.
SupportCheck support_bound_check(int k, const std::set<Freq>& sigma,
                                 const SpectralField& field);

}  // namespace inflate
