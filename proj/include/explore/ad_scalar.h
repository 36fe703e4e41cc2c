#pragma once

#include <boost/container/small_vector.hpp>

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>

#include "explore/geometry.h"

namespace explore::ad {

// Forward-mode automatic differentiation scalar: a value plus partial
// derivatives with respect to a set of free coordinates. A scalar built from
// a plain double is a constant and carries no partials; binary operations
// require both operands to range over the same coordinate set, or one of
// them to be a constant.
class AdScalar {
 public:
  using Partials = boost::container::small_vector<double, 4>;

  AdScalar() = default;
  AdScalar(double value) : value_(value) {}  // NOLINT(runtime/explicit)
  AdScalar(double value, Partials partials)
      : value_(value), partials_(std::move(partials)) {}

  static AdScalar variable(double value, std::size_t index, std::size_t dim) {
    AdScalar s(value);
    s.partials_.assign(dim, 0.0);
    assert(index < dim);
    s.partials_[index] = 1.0;
    return s;
  }

  double value() const { return value_; }
  const Partials& partials() const { return partials_; }
  std::size_t dim() const { return partials_.size(); }
  bool is_constant() const { return partials_.empty(); }

  double partial(std::size_t i) const {
    return i < partials_.size() ? partials_[i] : 0.0;
  }

  AdScalar& operator+=(const AdScalar& o) { return *this = *this + o; }
  AdScalar& operator-=(const AdScalar& o) { return *this = *this - o; }
  AdScalar& operator*=(const AdScalar& o) { return *this = *this * o; }
  AdScalar& operator/=(const AdScalar& o) { return *this = *this / o; }

  friend AdScalar operator-(const AdScalar& a) {
    return make(-a.value_, a.partials_, -1.0, kEmpty, 0.0);
  }
  friend AdScalar operator+(const AdScalar& a, const AdScalar& b) {
    return make(a.value_ + b.value_, a.partials_, 1.0, b.partials_, 1.0);
  }
  friend AdScalar operator-(const AdScalar& a, const AdScalar& b) {
    return make(a.value_ - b.value_, a.partials_, 1.0, b.partials_, -1.0);
  }
  friend AdScalar operator*(const AdScalar& a, const AdScalar& b) {
    return make(a.value_ * b.value_, a.partials_, b.value_, b.partials_,
                a.value_);
  }
  friend AdScalar operator/(const AdScalar& a, const AdScalar& b) {
    const double inv = 1.0 / b.value_;
    return make(a.value_ * inv, a.partials_, inv, b.partials_,
                -a.value_ * inv * inv);
  }

  friend bool operator<(const AdScalar& a, const AdScalar& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const AdScalar& a, const AdScalar& b) {
    return a.value_ > b.value_;
  }
  friend bool operator<=(const AdScalar& a, const AdScalar& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>=(const AdScalar& a, const AdScalar& b) {
    return a.value_ >= b.value_;
  }

  friend AdScalar sqrt(const AdScalar& a) {
    const double root = std::sqrt(a.value_);
    return make(root, a.partials_, 0.5 / root, kEmpty, 0.0);
  }
  friend AdScalar sin(const AdScalar& a) {
    return make(std::sin(a.value_), a.partials_, std::cos(a.value_), kEmpty,
                0.0);
  }
  friend AdScalar cos(const AdScalar& a) {
    return make(std::cos(a.value_), a.partials_, -std::sin(a.value_), kEmpty,
                0.0);
  }
  // Shifts the value into (-pi, pi]; the shift is locally constant, so
  // partials pass through unchanged.
  friend AdScalar wrap_angle(const AdScalar& a) {
    AdScalar r = a;
    r.value_ = explore::wrap_angle(a.value_);
    return r;
  }

 private:
  static const Partials kEmpty;

  // value plus ca * da + cb * db over partials, treating empty as zeros.
  static AdScalar make(double value, const Partials& da, double ca,
                       const Partials& db, double cb) {
    AdScalar r(value);
    if (db.empty()) {
      r.partials_.resize(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) r.partials_[i] = ca * da[i];
    } else if (da.empty()) {
      r.partials_.resize(db.size());
      for (std::size_t i = 0; i < db.size(); ++i) r.partials_[i] = cb * db[i];
    } else {
      assert(da.size() == db.size());
      r.partials_.resize(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) {
        r.partials_[i] = ca * da[i] + cb * db[i];
      }
    }
    return r;
  }

  double value_ = 0.0;
  Partials partials_;
};

inline const AdScalar::Partials AdScalar::kEmpty{};

// Fixed-width forward-mode dual number. Used in the hot information-gain
// loops where every quantity depends on exactly one viewpoint's four
// coordinates; the fixed array keeps gradient evaluation within a small
// constant factor of the plain-value evaluation.
template <int N>
struct Dual {
  double v = 0.0;
  std::array<double, N> d{};

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT(runtime/explicit)

  static Dual variable(double value, int index) {
    Dual s(value);
    s.d[index] = 1.0;
    return s;
  }

  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }

  friend Dual operator-(const Dual& a) {
    Dual r(-a.v);
    for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
    return r;
  }
  friend Dual operator+(const Dual& a, const Dual& b) {
    Dual r(a.v + b.v);
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
  }
  friend Dual operator-(const Dual& a, const Dual& b) {
    Dual r(a.v - b.v);
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r(a.v * b.v);
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + b.d[i] * a.v;
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    const double inv = 1.0 / b.v;
    Dual r(a.v * inv);
    for (int i = 0; i < N; ++i) {
      r.d[i] = (a.d[i] - r.v * b.d[i]) * inv;
    }
    return r;
  }

  friend Dual sqrt(const Dual& a) {
    Dual r(std::sqrt(a.v));
    const double scale = 0.5 / r.v;
    for (int i = 0; i < N; ++i) r.d[i] = scale * a.d[i];
    return r;
  }
  friend Dual sin(const Dual& a) {
    Dual r(std::sin(a.v));
    const double c = std::cos(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = c * a.d[i];
    return r;
  }
  friend Dual cos(const Dual& a) {
    Dual r(std::cos(a.v));
    const double s = -std::sin(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = s * a.d[i];
    return r;
  }
};

using Dual4 = Dual<4>;

// Uniform access to the primal value of a plain double, an AdScalar, or a
// Dual inside scalar-generic code.
inline double primal(double x) { return x; }
inline double primal(const AdScalar& x) { return x.value(); }
template <int N>
double primal(const Dual<N>& x) {
  return x.v;
}

}  // namespace explore::ad
