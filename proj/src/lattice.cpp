#include "inflate/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "inflate/errors.hpp"

namespace inflate {

Freq make_freq(std::initializer_list<std::int64_t> indices) {
  if (indices.size() > kMaxDim) throw ConfigError("frequency has too many coordinates");
  Freq f;
  std::size_t i = 0;
  for (std::int64_t v : indices) f.ix[i++] = v;
  return f;
}

DomainSpec DomainSpec::torus(int d, const std::vector<double>& periods) {
  return mixed(d, d, {}, periods);
}

DomainSpec DomainSpec::mixed(int d, int d2, const std::vector<double>& cells,
                             const std::vector<double>& periods) {
  if (d < 1 || d > kMaxDim) throw ConfigError("dimension must be in [1,4]");
  if (d2 < 0 || d2 > d) throw ConfigError("periodic dimension count out of range");
  const int d1 = d - d2;
  if (static_cast<int>(cells.size()) != d1 && !(d1 > 0 && cells.size() == 1))
    if (d1 > 0) throw ConfigError("quadrature cell required per non-periodic direction");
  if (!periods.empty() && static_cast<int>(periods.size()) != d2)
    throw ConfigError("period list must have one entry per periodic direction");

  DomainSpec dom;
  dom.dim_ = d;
  dom.periodic_ = d2;
  dom.weight_ = 1.0;
  for (int i = 0; i < d1; ++i) {
    const double cell = cells.size() == 1 ? cells[0] : cells[static_cast<std::size_t>(i)];
    if (!(cell > 0)) throw ConfigError("quadrature cell must be positive");
    dom.step_[static_cast<std::size_t>(i)] = cell;
    dom.period_[static_cast<std::size_t>(i)] = 0.0;
    dom.weight_ *= cell;
  }
  for (int i = d1; i < d; ++i) {
    const double period =
        periods.empty() ? 2.0 * std::numbers::pi : periods[static_cast<std::size_t>(i - d1)];
    if (!(period > 0)) throw ConfigError("torus period must be positive");
    dom.step_[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi / period;
    dom.period_[static_cast<std::size_t>(i)] = period;
  }
  return dom;
}

double DomainSpec::period(int i) const {
  if (i < dim_ - periodic_) throw ConfigError("direction is not periodic");
  return period_[static_cast<std::size_t>(i)];
}

double DomainSpec::abs2(const Freq& f) const {
  double acc = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double x = coord(f, i);
    acc += x * x;
  }
  return acc;
}

double DomainSpec::abs(const Freq& f) const { return std::sqrt(abs2(f)); }

Freq DomainSpec::snap(const std::vector<double>& coords) const {
  if (static_cast<int>(coords.size()) != dim_)
    throw ConfigError("coordinate count does not match dimension");
  Freq f;
  for (int i = 0; i < dim_; ++i) {
    const double ratio = coords[static_cast<std::size_t>(i)] / step(i);
    const double rounded = std::round(ratio);
    const double scale = std::max(1.0, std::fabs(ratio));
    if (std::fabs(ratio - rounded) > 1e-12 * scale)
      throw ConfigError("coordinate is not on the frequency lattice");
    f.ix[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rounded);
  }
  return f;
}

Complex Snapshot::at(const Freq& f) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), f,
                             [](const auto& e, const Freq& k) { return e.first < k; });
  if (it != entries.end() && it->first == f) return it->second;
  return Complex{0.0, 0.0};
}

SpectralField::SpectralField(DomainSpec domain, double cell_size)
    : domain_(domain), cell_size_(cell_size) {
  if (!(cell_size > 0)) throw ConfigError("cell size must be positive");
}

void SpectralField::set(const Freq& f, ExpPoly p) {
  if (p.is_zero()) {
    entries_.erase(f);
  } else {
    entries_[f] = std::move(p);
  }
}

void SpectralField::add(const Freq& f, const ExpPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(f, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

const ExpPoly* SpectralField::find(const Freq& f) const {
  auto it = entries_.find(f);
  return it == entries_.end() ? nullptr : &it->second;
}

std::set<Freq> SpectralField::support() const {
  std::set<Freq> keys;
  for (const auto& [f, p] : entries_) keys.insert(f);
  return keys;
}

Snapshot SpectralField::at(double t) const {
  Snapshot snap;
  snap.domain = domain_;
  snap.cell_size = cell_size_;
  snap.time = t;
  snap.entries.reserve(entries_.size());
  for (const auto& [f, p] : entries_) snap.entries.emplace_back(f, p.value(t));
  return snap;
}

Snapshot SpectralField::at_untwisted(double t) const {
  Snapshot snap = at(t);
  for (auto& [f, v] : snap.entries) v *= std::polar(1.0, -t * domain_.abs2(f));
  return snap;
}

SpectralField SpectralField::scaled(Complex c) const {
  SpectralField out(domain_, cell_size_);
  for (const auto& [f, p] : entries_) out.set(f, p.scaled(c));
  return out;
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  if (!(other.domain_ == domain_))
    throw ConfigError("cannot add fields on different lattices");
  for (const auto& [f, p] : other.entries_) add(f, p);
  return *this;
}

std::set<Freq> support(const SpectralField& field) { return field.support(); }

std::set<Freq> minkowski_sum(const std::set<Freq>& S, const std::set<Freq>& T,
                             int sign1, int sign2) {
  std::set<Freq> out;
  for (const Freq& s : S) {
    for (const Freq& t : T) {
      Freq r;
      for (std::size_t i = 0; i < kMaxDim; ++i)
        r.ix[i] = sign1 * s.ix[i] + sign2 * t.ix[i];
      out.insert(r);
    }
  }
  return out;
}

std::set<Freq> signed_sumset(const std::set<Freq>& sigma, int k) {
  std::set<Freq> pm = minkowski_sum(sigma, {Freq{}}, 1, 1);
  for (const Freq& s : sigma) {
    Freq neg;
    for (std::size_t i = 0; i < kMaxDim; ++i) neg.ix[i] = -s.ix[i];
    pm.insert(neg);
  }
  if (k <= 0) return {};
  std::set<Freq> acc = pm;
  for (int j = 2; j <= k; ++j) acc = minkowski_sum(acc, pm, 1, 1);
  return acc;
}

SupportCheck support_bound_check(int k, const std::set<Freq>& sigma,
                                 const SpectralField& field) {
  SupportCheck result;
  const std::set<Freq> sumset = signed_sumset(sigma, k);
  result.sumset_size = sumset.size();
  const DomainSpec& dom = field.domain();
  const double half = 0.5 * static_cast<double>(k) * field.cell_size();
  for (const auto& [f, p] : field.entries()) {
    bool covered = false;
    for (const Freq& eta : sumset) {
      bool inside = true;
      for (int i = 0; i < dom.dim() && inside; ++i) {
        const double delta = dom.coord(f, i) - dom.coord(eta, i);
        // half-open box [-kA/2, kA/2)
        inside = delta >= -half && delta < half;
      }
      if (inside) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      result.ok = false;
      result.witness = f;
      return result;
    }
  }
  return result;
}

}  // namespace inflate
