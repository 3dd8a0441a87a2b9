#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqemb {

// Real-valued, finitely supported sequence, logically indexed from 1.
// Entries beyond the stored length are implicitly zero.
class FiniteSequence {
 public:
  FiniteSequence() = default;

  explicit FiniteSequence(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("FiniteSequence: entries must be finite reals");
      }
    }
  }

  FiniteSequence(std::initializer_list<double> values)
      : FiniteSequence(std::vector<double>(values)) {}

  const std::vector<double>& values() const { return values_; }
  std::size_t length() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // 1-based access; zero beyond the stored length.
  double at(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("FiniteSequence: indices start at 1");
    return n <= values_.size() ? values_[n - 1] : 0.0;
  }

  // Equality is entrywise after zero-padding to a common length.
  friend bool operator==(const FiniteSequence& a, const FiniteSequence& b) {
    const std::size_t n = std::max(a.length(), b.length());
    for (std::size_t i = 1; i <= n; ++i) {
      if (a.at(i) != b.at(i)) return false;
    }
    return true;
  }

 private:
  std::vector<double> values_;
};

// Nonincreasing sequence of nonnegative reals: the decreasing rearrangement
// of some finite sequence.
class Rearrangement {
 public:
  Rearrangement() = default;

  // Accepts only already-sorted nonnegative input.
  explicit Rearrangement(std::vector<double> nonincreasing)
      : values_(std::move(nonincreasing)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 0.0 || !std::isfinite(values_[i])) {
        throw std::invalid_argument("Rearrangement: entries must be finite and >= 0");
      }
      if (i + 1 < values_.size() && values_[i] < values_[i + 1]) {
        throw std::invalid_argument("Rearrangement: entries must be nonincreasing");
      }
    }
  }

  const std::vector<double>& values() const { return values_; }
  std::size_t length() const { return values_.size(); }

  // 1-based; zero beyond the stored length.
  double at(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("Rearrangement: indices start at 1");
    return n <= values_.size() ? values_[n - 1] : 0.0;
  }

  // Number of strictly positive entries.
  std::size_t support() const {
    std::size_t k = values_.size();
    while (k > 0 && values_[k - 1] == 0.0) --k;
    return k;
  }

 private:
  std::vector<double> values_;
};

// Distribution function m_a(omega): count of indices n with |a_n| > omega.
inline std::size_t distribution(const FiniteSequence& a, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("distribution: omega must be a finite nonnegative real");
  }
  std::size_t count = 0;
  for (double v : a.values()) {
    if (std::fabs(v) > omega) ++count;
  }
  return count;
}

// Decreasing rearrangement a*: absolute values sorted nonincreasingly.
inline Rearrangement rearrange(const FiniteSequence& a) {
  std::vector<double> r(a.values().size());
  std::transform(a.values().begin(), a.values().end(), r.begin(),
                 [](double v) { return std::fabs(v); });
  std::sort(r.begin(), r.end(), std::greater<>());
  return Rearrangement(std::move(r));
}

// Canonical basis vector e^j at truncation length L.
inline FiniteSequence unit_vector(std::size_t j, std::size_t L) {
  if (j == 0 || L == 0 || j > L) {
    throw std::invalid_argument("unit_vector: need 1 <= j <= L");
  }
  std::vector<double> v(L, 0.0);
  v[j - 1] = 1.0;
  return FiniteSequence(std::move(v));
}

// Entrywise sum/difference after zero-padding.
inline FiniteSequence add(const FiniteSequence& a, const FiniteSequence& b) {
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<double> v(n);
  for (std::size_t i = 1; i <= n; ++i) v[i - 1] = a.at(i) + b.at(i);
  return FiniteSequence(std::move(v));
}

inline FiniteSequence subtract(const FiniteSequence& a, const FiniteSequence& b) {
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<double> v(n);
  for (std::size_t i = 1; i <= n; ++i) v[i - 1] = a.at(i) - b.at(i);
  return FiniteSequence(std::move(v));
}

inline FiniteSequence scale(const FiniteSequence& a, double t) {
  std::vector<double> v = a.values();
  for (double& x : v) x *= t;
  return FiniteSequence(std::move(v));
}

}  // namespace seqemb
