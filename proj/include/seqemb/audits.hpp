#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "seqemb/sequence.hpp"
#include "seqemb/space.hpp"

namespace seqemb {

// 2^{1/p}(||a|| + ||b||) - ||a+b|| in the (p,q) quasi-norm.
// Nonnegative for every input; a negative value is a bug.
inline double quasi_triangle_defect(const FiniteSequence& a, const FiniteSequence& b,
                                    const LorentzParams& params) {
  const SpaceDescriptor s = SpaceDescriptor::lorentz(params);
  const double lhs = norm(add(a, b), s);
  const double rhs = std::pow(2.0, params.p == kInf ? 0.0 : 1.0 / params.p) *
                     (norm(a, s) + norm(b, s));
  return rhs - lhs;
}

struct ScalarInequalityDefects {
  // 2^{q-1}(x^q + y^q) - (x+y)^q, applicable when q >= 1.
  std::optional<double> convexity_defect;
  // x^q + y^q - (x+y)^q, applicable when 0 < q < 1.
  std::optional<double> subadditivity_defect;
};

inline ScalarInequalityDefects scalar_inequality_audit(double x, double y, double q) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::invalid_argument("scalar_inequality_audit: x and y must be positive");
  }
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw std::invalid_argument("scalar_inequality_audit: q must be a positive real");
  }
  ScalarInequalityDefects d;
  const double sum_q = std::pow(x + y, q);
  if (q >= 1.0) {
    d.convexity_defect = std::pow(2.0, q - 1.0) * (std::pow(x, q) + std::pow(y, q)) - sum_q;
  } else {
    d.subadditivity_defect = std::pow(x, q) + std::pow(y, q) - sum_q;
  }
  return d;
}

// Per-index defects bound(n) - a_n* for the rearrangement decay lemma:
// bound(n) = (q/p)^{1/q} n^{-1/p} ||a||_{p,q} when p <= q, and
// bound(n) = n^{-1/p} ||a||_{p,q} when q < p <= inf. Requires q < inf.
inline std::vector<double> rearrangement_bound_audit(const FiniteSequence& a,
                                                     const LorentzParams& params) {
  if (params.q == kInf) {
    throw std::invalid_argument("rearrangement_bound_audit: lemma requires q < inf");
  }
  const SpaceDescriptor s = SpaceDescriptor::lorentz(params);
  const double nrm = norm(a, s);
  const double c = params.p <= params.q ? std::pow(params.q / params.p, 1.0 / params.q) : 1.0;
  const double inv_p = (params.p == kInf) ? 0.0 : 1.0 / params.p;
  const Rearrangement r = rearrange(a);
  std::vector<double> defects(r.length());
  for (std::size_t n = 1; n <= r.length(); ++n) {
    defects[n - 1] = c * std::pow(static_cast<double>(n), -inv_p) * nrm - r.at(n);
  }
  return defects;
}

}  // namespace seqemb
