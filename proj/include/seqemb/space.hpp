#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include "seqemb/sequence.hpp"

namespace seqemb {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Neumaier variant of compensated summation. Audits of near-equality
// inequalities need the sums to be accurate to the last few ulps.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// The pair (p, q) selecting a Lorentz quasi-norm. Infinity is allowed for
// both, with the convention 1/inf = 0.
struct LorentzParams {
  double p;
  double q;

  LorentzParams(double p_, double q_) : p(p_), q(q_) {
    if (!(p > 0.0) || std::isnan(p) || !(q > 0.0) || std::isnan(q)) {
      throw std::invalid_argument("LorentzParams: p and q must be positive (or +inf)");
    }
  }
};

enum class SpaceKind { lorentz, sup_space, c0, weighted_lp };

// Descriptor for the sequence spaces the library knows how to evaluate.
// weighted_lp is the fixed weight pattern (1, 1/2, 1/2, ...).
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::sup_space;
  double p = 0.0;  // lorentz p, or the weighted_lp exponent
  double q = 0.0;  // lorentz q

  static SpaceDescriptor lorentz(double p, double q) {
    LorentzParams check(p, q);
    return SpaceDescriptor{SpaceKind::lorentz, check.p, check.q};
  }
  static SpaceDescriptor lorentz(const LorentzParams& params) {
    return SpaceDescriptor{SpaceKind::lorentz, params.p, params.q};
  }
  static SpaceDescriptor sup() { return SpaceDescriptor{SpaceKind::sup_space, kInf, kInf}; }
  static SpaceDescriptor czero() { return SpaceDescriptor{SpaceKind::c0, kInf, kInf}; }
  static SpaceDescriptor weighted(double p) {
    if (!(p >= 1.0) || p == kInf) {
      throw std::invalid_argument("weighted_lp: p must lie in [1, inf)");
    }
    return SpaceDescriptor{SpaceKind::weighted_lp, p, p};
  }

  bool is_lorentz() const { return kind == SpaceKind::lorentz; }

  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == SpaceKind::lorentz) return a.p == b.p && a.q == b.q;
    if (a.kind == SpaceKind::weighted_lp) return a.p == b.p;
    return true;
  }

  std::string to_string() const {
    auto num = [](double v) {
      if (v == kInf) return std::string("inf");
      std::string s = std::to_string(v);
      s.erase(s.find_last_not_of('0') + 1);
      if (!s.empty() && s.back() == '.') s.pop_back();
      return s;
    };
    switch (kind) {
      case SpaceKind::lorentz:
        return "lorentz:" + num(p) + "," + num(q);
      case SpaceKind::sup_space:
        return "linf";
      case SpaceKind::c0:
        return "c0";
      case SpaceKind::weighted_lp:
        return "wlp:" + num(p);
    }
    return "?";
  }
};

// Lorentz/sup norm of an already nonincreasing, nonnegative vector.
// The zero tail beyond the stored length contributes nothing.
inline double norm_nonincreasing(std::span<const double> r, const SpaceDescriptor& s) {
  switch (s.kind) {
    case SpaceKind::sup_space:
    case SpaceKind::c0:
      return r.empty() ? 0.0 : r.front();
    case SpaceKind::lorentz: {
      if (s.q == kInf) {
        const double inv_p = (s.p == kInf) ? 0.0 : 1.0 / s.p;
        double best = 0.0;
        for (std::size_t n = 1; n <= r.size(); ++n) {
          if (r[n - 1] == 0.0) break;  // tail of zeros cannot raise the sup
          best = std::max(best, std::pow(static_cast<double>(n), inv_p) * r[n - 1]);
        }
        return best;
      }
      const double expo = (s.p == kInf) ? -1.0 : s.q / s.p - 1.0;
      CompensatedSum sum;
      for (std::size_t n = 1; n <= r.size(); ++n) {
        if (r[n - 1] == 0.0) break;
        sum.add(std::pow(r[n - 1], s.q) * std::pow(static_cast<double>(n), expo));
      }
      return std::pow(sum.value(), 1.0 / s.q);
    }
    case SpaceKind::weighted_lp: {
      // weighted_lp is not rearrangement invariant; positions matter.
      CompensatedSum sum;
      for (std::size_t n = 1; n <= r.size(); ++n) {
        const double term = std::pow(std::fabs(r[n - 1]), s.p);
        sum.add(n == 1 ? term : 0.5 * term);
      }
      return std::pow(sum.value(), 1.0 / s.p);
    }
  }
  return 0.0;
}

inline double norm(const FiniteSequence& a, const SpaceDescriptor& s) {
  if (s.kind == SpaceKind::weighted_lp) {
    return norm_nonincreasing(a.values(), s);
  }
  return norm_nonincreasing(rearrange(a).values(), s);
}

inline double norm(const Rearrangement& a, const SpaceDescriptor& s) {
  return norm_nonincreasing(a.values(), s);
}

}  // namespace seqemb
