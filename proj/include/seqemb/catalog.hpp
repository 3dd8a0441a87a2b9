#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "seqemb/errors.hpp"
#include "seqemb/space.hpp"

namespace seqemb {

// Closed interval of nonnegative reals, used whenever a constant is only
// available as a numeric bracket (series case).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double v) { return Interval{v, v}; }
  double width() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct EmbeddingSpec {
  SpaceDescriptor source;
  SpaceDescriptor target;
};

// Classification outcome: whether the catalog proves the embedding, with
// which constant, and what is known about the operator norm and the ball
// measure of non-compactness.
struct EmbeddingVerdict {
  bool embedded = false;
  Interval constant = Interval::point(0.0);
  std::optional<Interval> exact_norm;
  std::string theorem_tag = "uncovered";
  std::optional<bool> maximally_noncompact;
  std::optional<double> alpha_upper;
  // The (q/p)^{1/q} norm is approached by a family, not attained.
  bool norm_attained_limit_only = false;
};

// Bracket for (sum_{n>=1} n^{-s})^{1/q2} with s = 1 + q2/p1 - q2/p2.
// Partial sums plus the integral tail bracket
//   int_{N+1}^inf x^{-s} dx <= tail <= int_N^inf x^{-s} dx,
// with N grown until the bracket closes to the requested relative width.
inline Interval series_norm(double p1, double p2, double q2, double rel_tol) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("series_norm: rel_tol must be positive");
  if (!(p1 > 0.0) || !(p2 > 0.0) || !(q2 > 0.0) || q2 == kInf) {
    throw std::invalid_argument("series_norm: need p1, p2 > 0 and 0 < q2 < inf");
  }
  const double s = 1.0 + (p1 == kInf ? 0.0 : q2 / p1) - (p2 == kInf ? 0.0 : q2 / p2);
  if (!(s > 1.0)) {
    throw hypothesis_error("series_norm: divergent series (exponent <= 1)");
  }
  CompensatedSum partial;
  const double inv_q2 = 1.0 / q2;
  std::size_t n = 0;
  for (std::size_t block = 64; n < (1ull << 34); block *= 2) {
    const std::size_t stop = n + block;
    while (n < stop) {
      ++n;
      partial.add(std::pow(static_cast<double>(n), -s));
    }
    const double tail_lo = std::pow(static_cast<double>(n) + 1.0, 1.0 - s) / (s - 1.0);
    const double tail_hi = std::pow(static_cast<double>(n), 1.0 - s) / (s - 1.0);
    const Interval root{std::pow(partial.value() + tail_lo, inv_q2),
                        std::pow(partial.value() + tail_hi, inv_q2)};
    if (root.width() <= rel_tol * root.lo) return root;
  }
  throw hypothesis_error("series_norm: bracket did not close at the requested tolerance");
}

namespace detail {

inline bool in_c0(const SpaceDescriptor& s) {
  if (s.kind == SpaceKind::c0) return true;
  return s.is_lorentz() && std::min(s.p, s.q) < kInf;
}

// alpha(I) upper bound for the lorentz -> linf embedding, by span case.
inline double lorentz_to_sup_alpha_upper(double p, double q) {
  if (p <= q && q >= 1.0 && q < kInf) return std::pow(2.0, -1.0 / q);
  if (p <= q && q < 1.0) return 0.5;
  return 0.5 * (1.0 + std::pow(2.0, -1.0 / p));  // q = inf with p < q, or q < p
}

}  // namespace detail

// Classify a source/target pair against the inclusion and exact-norm
// catalog. Pairs the catalog proves nothing about come back "uncovered".
inline EmbeddingVerdict classify(const EmbeddingSpec& spec, double series_rel_tol = 1e-9) {
  const SpaceDescriptor& src = spec.source;
  const SpaceDescriptor& tgt = spec.target;
  if (src.kind == SpaceKind::weighted_lp || tgt.kind == SpaceKind::weighted_lp) {
    throw std::invalid_argument(
        "classify: unsupported-pair (weighted_lp participates only in the dedicated example)");
  }

  EmbeddingVerdict v;

  // Normalize: lorentz(inf,inf) is the sup space.
  auto as_kind = [](const SpaceDescriptor& s) {
    if (s.is_lorentz() && s.p == kInf && s.q == kInf) return SpaceDescriptor::sup();
    return s;
  };
  const SpaceDescriptor a = as_kind(src);
  const SpaceDescriptor b = as_kind(tgt);

  if (a == b) {
    v.embedded = true;
    v.constant = Interval::point(1.0);
    v.exact_norm = Interval::point(1.0);
    v.theorem_tag = "identity";
    if (detail::in_c0(a)) v.maximally_noncompact = true;  // r.i. lattice theorem, l = w
    if (v.maximally_noncompact.value_or(false)) v.alpha_upper = 1.0;
    return v;
  }

  if (a.is_lorentz() && b.is_lorentz()) {
    const double p1 = a.p, q1 = a.q, p2 = b.p, q2 = b.q;
    if (p1 > p2) {
      v.theorem_tag = "uncovered:reverse-p";
      return v;
    }
    if (p1 == p2 && q1 > q2) {
      v.theorem_tag = "uncovered:reverse-q";
      return v;
    }
    const bool q_in_norm_range = q1 >= 1.0 && q2 >= 1.0;
    v.embedded = true;
    if (p1 == p2) {
      // Same p, q1 < q2.
      if (q1 <= p1) {
        v.constant = Interval::point(1.0);
        v.theorem_tag = "same-p:q1-le-p";
        if (q_in_norm_range) v.exact_norm = Interval::point(1.0);
      } else {
        v.constant = Interval::point(
            std::pow(q1 / p1, 1.0 / q1 - (q2 == kInf ? 0.0 : 1.0 / q2)));
        v.theorem_tag = "same-p:p-lt-q1";
        if (q2 == kInf && q1 < kInf) {
          // Riemann-limit norm, approached but not attained.
          v.exact_norm = Interval::point(std::pow(q1 / p1, 1.0 / q1));
          v.norm_attained_limit_only = true;
        }
      }
    } else if (q1 <= p1) {
      v.constant = Interval::point(1.0);
      v.theorem_tag = "pair:q1-le-p1";
      if (q_in_norm_range) v.exact_norm = Interval::point(1.0);
    } else if (q1 == kInf && q2 < kInf) {
      const Interval c = series_norm(p1, p2, q2, series_rel_tol);
      v.constant = c;
      v.theorem_tag = "pair:series";
      if (q2 >= 1.0) v.exact_norm = c;
    } else if (q1 == kInf && q2 == kInf) {
      v.constant = Interval::point(1.0);
      v.theorem_tag = "pair:sup-sup";
      v.exact_norm = Interval::point(1.0);
    } else if (q1 >= q2) {
      v.constant = Interval::point(1.0);
      v.theorem_tag = "pair:q1-ge-q2";
      if (q_in_norm_range) v.exact_norm = Interval::point(1.0);
    } else {
      v.constant = Interval::point(std::pow(q1 / p1, 1.0 / q1 - (q2 == kInf ? 0.0 : 1.0 / q2)));
      v.theorem_tag = "pair:q1-lt-q2";
    }
    // Both spaces sit inside c0, so the r.i. lattice theorem applies.
    if (detail::in_c0(a) && detail::in_c0(b)) {
      v.maximally_noncompact = true;
      if (v.exact_norm) v.alpha_upper = v.exact_norm->hi;
    }
    return v;
  }

  if (a.is_lorentz() && b.kind == SpaceKind::c0) {
    if (detail::in_c0(a)) {
      v.embedded = true;
      v.constant = Interval::point(1.0);
      v.exact_norm = Interval::point(1.0);
      v.theorem_tag = "lorentz-to-c0";
      v.maximally_noncompact = true;
      v.alpha_upper = 1.0;
    } else {
      v.theorem_tag = "uncovered:not-in-c0";
    }
    return v;
  }

  if (a.is_lorentz() && b.kind == SpaceKind::sup_space) {
    if (detail::in_c0(a)) {
      v.embedded = true;
      v.constant = Interval::point(1.0);
      v.exact_norm = Interval::point(1.0);
      v.theorem_tag = "lorentz-to-linf";
      v.maximally_noncompact = false;
      v.alpha_upper = detail::lorentz_to_sup_alpha_upper(a.p, a.q);
    } else {
      v.theorem_tag = "uncovered:not-in-c0";
    }
    return v;
  }

  if (a.kind == SpaceKind::c0 && b.kind == SpaceKind::sup_space) {
    v.embedded = true;
    v.constant = Interval::point(1.0);
    v.exact_norm = Interval::point(1.0);
    v.theorem_tag = "c0-to-linf";
    v.maximally_noncompact = true;
    v.alpha_upper = 1.0;
    return v;
  }

  v.theorem_tag = "uncovered";
  return v;
}

}  // namespace seqemb
