#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "seqemb/catalog.hpp"
#include "seqemb/errors.hpp"
#include "seqemb/sampling.hpp"
#include "seqemb/sequence.hpp"
#include "seqemb/space.hpp"

namespace seqemb {

struct SpanBound {
  double value = 0.0;
  std::string source_case;
};

// Proved upper bound on the span sigma of the unit ball of s.
inline SpanBound span_upper_bound(const SpaceDescriptor& s) {
  if (s.kind == SpaceKind::c0) return SpanBound{2.0, "c0"};
  if (!s.is_lorentz() || std::min(s.p, s.q) == kInf) {
    throw hypothesis_error("span_upper_bound: unsupported space (only lorentz in c0, or c0)");
  }
  if (s.p <= s.q && s.q >= 1.0 && s.q < kInf) {
    return SpanBound{std::pow(2.0, 1.0 - 1.0 / s.q), "q>=1&p<=q"};
  }
  if (s.p <= s.q && s.q < 1.0) {
    return SpanBound{1.0, "0<q<1&p<=q"};
  }
  return SpanBound{1.0 + std::pow(2.0, -1.0 / s.p), "q=inf|q<p"};
}

// Monte-Carlo lower bound on the span at truncation L. The sample stream is
// prepended with the hand extremal candidates (1,-1,0,...) and e^1.
inline double span_estimate(const SpaceDescriptor& s, std::size_t L, std::size_t samples,
                            std::uint64_t seed) {
  if (L < 1) throw std::invalid_argument("span_estimate: L must be >= 1");
  auto span_of = [](const FiniteSequence& x) {
    double lo = 0.0, hi = 0.0;  // the implicit zero tail participates
    for (double v : x.values()) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return hi - lo;
  };
  double best = 0.0;
  std::vector<FiniteSequence> candidates;
  candidates.push_back(unit_vector(1, L));
  if (L >= 2) {
    std::vector<double> pm(L, 0.0);
    pm[0] = 1.0;
    pm[1] = -1.0;
    candidates.emplace_back(std::move(pm));
  }
  for (const FiniteSequence& c : candidates) {
    const double n = norm(c, s);
    if (n > 0.0) best = std::max(best, span_of(scale(c, 1.0 / n)));
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    best = std::max(best, span_of(sample_unit_sphere(s, L, rng)));
  }
  return best;
}

struct CoverCertificate {
  std::vector<FiniteSequence> centers;
  double radius = 0.0;
  std::size_t m = 0;  // centers are the 2m+1 constant levels sigma*k/(2m)
  std::size_t truncation = 0;
  double sigma = 0.0;
  std::size_t samples_checked = 0;
  double max_observed_distance = 0.0;
  std::string paper_case;
  std::string verification = "unsampled";
};

struct CoverRefutation {
  FiniteSequence sample;
  double min_distance = 0.0;
};

// The constant-sequence cover for lorentz -> linf: 2m+1 centers at the
// levels sigma*k/(2m) with minimal m satisfying (1 + 1/m) sigma/2 < rho.
inline CoverCertificate build_constant_cover(const SpaceDescriptor& s, double rho,
                                             std::size_t L) {
  if (!(rho > 0.0) || L < 1) {
    throw std::invalid_argument("build_constant_cover: need rho > 0 and L >= 1");
  }
  const SpanBound bound = span_upper_bound(s);
  const double sigma = bound.value;
  const double op_norm = 1.0;  // ||I: s -> linf|| for every supported s
  CoverCertificate cert;
  cert.radius = rho;
  cert.truncation = L;
  cert.sigma = sigma;
  cert.paper_case = bound.source_case;
  if (rho >= op_norm) {
    // A single ball around zero suffices.
    cert.m = 0;
    cert.centers.emplace_back(std::vector<double>(L, 0.0));
    return cert;
  }
  if (!(rho > sigma / 2.0)) {
    throw hypothesis_error("build_constant_cover: infeasible (rho <= sigma/2)");
  }
  std::size_t m = static_cast<std::size_t>(sigma / (2.0 * rho - sigma)) + 1;
  while ((1.0 + 1.0 / static_cast<double>(m)) * sigma / 2.0 >= rho) ++m;
  while (m > 1 && (1.0 + 1.0 / static_cast<double>(m - 1)) * sigma / 2.0 < rho) --m;
  cert.m = m;
  for (std::size_t k = 0; k <= 2 * m; ++k) {
    const double level =
        sigma * (static_cast<double>(k) - static_cast<double>(m)) / (2.0 * static_cast<double>(m));
    cert.centers.emplace_back(std::vector<double>(L, level));
  }
  return cert;
}

// Distance between sequences in the given target space.
inline double cover_distance(const FiniteSequence& x, const FiniteSequence& c,
                             const SpaceDescriptor& target) {
  if (target.kind == SpaceKind::sup_space || target.kind == SpaceKind::c0) {
    const std::size_t n = std::max(x.length(), c.length());
    double d = 0.0;
    for (std::size_t i = 1; i <= n; ++i) d = std::max(d, std::fabs(x.at(i) - c.at(i)));
    return d;
  }
  return norm(subtract(x, c), target);
}

inline double min_distance_to_centers(const FiniteSequence& x,
                                      const std::vector<FiniteSequence>& centers,
                                      const SpaceDescriptor& target) {
  double best = std::numeric_limits<double>::infinity();
  for (const FiniteSequence& c : centers) {
    best = std::min(best, cover_distance(x, c, target));
  }
  return best;
}

using VerifyResult = std::variant<CoverCertificate, CoverRefutation>;

// Sampling check of a cover: unit-sphere elements of s against the centers
// in the target norm. A passing certificate is evidence, not proof.
inline VerifyResult verify_cover(CoverCertificate cert, const SpaceDescriptor& s,
                                 std::size_t samples, std::uint64_t seed,
                                 const SpaceDescriptor& target = SpaceDescriptor::sup()) {
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const FiniteSequence x = sample_unit_sphere(s, cert.truncation, rng);
    const double d = min_distance_to_centers(x, cert.centers, target);
    if (d > cert.radius) {
      return CoverRefutation{x, d};
    }
    cert.max_observed_distance = std::max(cert.max_observed_distance, d);
    ++cert.samples_checked;
  }
  cert.verification = "sampled";
  return cert;
}

struct WitnessReport {
  FiniteSequence witness;
  double min_distance_to_centers = 0.0;
  std::string construction;  // spread | signflip | unit-spike
  double lambda = 0.0;
  std::vector<std::size_t> index_map;
  bool degenerate = false;
};

// The rearrangement-spread witness: place the values of x* at indices where
// every center has already decayed below lambda*x_k*, producing a unit-ball
// element outside every rho-ball around the centers.
inline WitnessReport spread_witness(const std::vector<FiniteSequence>& centers,
                                    const SpaceDescriptor& s_source,
                                    const SpaceDescriptor& s_target, double rho, double lambda,
                                    const FiniteSequence& x, std::size_t L) {
  if (!(lambda > 0.0) || !(lambda < 1.0)) {
    throw std::invalid_argument("spread_witness: lambda must lie in (0,1)");
  }
  if (norm(x, s_source) > 1.0 + 1e-9) {
    throw std::invalid_argument("spread_witness: x must lie in the source unit ball");
  }
  if (!((1.0 - lambda) * norm(x, s_target) > rho)) {
    throw hypothesis_error("spread_witness: hypothesis-violation ((1-lambda)||x|| <= rho)");
  }
  const Rearrangement xr = rearrange(x);
  const std::size_t support = xr.support();
  std::vector<std::size_t> index_map;
  index_map.reserve(support);
  std::size_t j = 0;
  for (std::size_t k = 1; k <= support; ++k) {
    const double eps_k = lambda * xr.at(k);
    bool found = false;
    for (++j; j <= L; ++j) {
      bool admissible = true;
      for (const FiniteSequence& c : centers) {
        if (std::fabs(c.at(j)) > eps_k) {
          admissible = false;
          break;
        }
      }
      if (admissible) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw hypothesis_error("spread_witness: truncation-too-small (grow L, the theorem stands)");
    }
    index_map.push_back(j);
  }
  std::vector<double> w(L, 0.0);
  for (std::size_t k = 1; k <= support; ++k) w[index_map[k - 1] - 1] = xr.at(k);
  WitnessReport report;
  report.witness = FiniteSequence(std::move(w));
  report.construction = "spread";
  report.lambda = lambda;
  report.index_map = std::move(index_map);
  report.min_distance_to_centers =
      centers.empty() ? std::numeric_limits<double>::infinity()
                      : min_distance_to_centers(report.witness, centers, s_target);
  report.degenerate = centers.empty();
  if (!(report.min_distance_to_centers > rho)) {
    throw internal_error("spread_witness: constructed witness is not outside the cover");
  }
  return report;
}

// The sign-flip witness against a finite center list in linf: at coordinate
// j the witness takes the sign opposite to (y^j)_j, so the sup distance to
// center j is at least 1.
inline WitnessReport signflip_witness(const std::vector<FiniteSequence>& centers, double rho) {
  if (!(rho < 1.0)) {
    throw hypothesis_error("signflip_witness: hypothesis-violation (needs rho < 1)");
  }
  const std::size_t m = centers.size();
  WitnessReport report;
  report.construction = "signflip";
  if (m == 0) {
    report.witness = FiniteSequence{};
    report.min_distance_to_centers = std::numeric_limits<double>::infinity();
    report.degenerate = true;
    return report;
  }
  std::vector<double> a(m, 0.0);
  for (std::size_t j = 1; j <= m; ++j) {
    a[j - 1] = centers[j - 1].at(j) < 0.0 ? 1.0 : -1.0;
  }
  report.witness = FiniteSequence(std::move(a));
  report.min_distance_to_centers =
      min_distance_to_centers(report.witness, centers, SpaceDescriptor::sup());
  if (!(report.min_distance_to_centers > rho)) {
    throw internal_error("signflip_witness: constructed witness is not outside the cover");
  }
  return report;
}

struct AlphaBracket {
  double lo = 0.0;
  double hi = 0.0;
  std::string tag;  // maximal | span-cover | weighted-example | norm-bound
  // Sampling record for the weighted-example cover check.
  std::size_t samples_checked = 0;
  std::size_t refutations = 0;
  double max_observed_distance = 0.0;
};

// Finite-truncation bracket for alpha(I). lo = hi only when a maximal
// non-compactness theorem pins the value; otherwise lo stays 0.
inline AlphaBracket alpha_bracket(const EmbeddingSpec& spec, std::size_t L, std::size_t samples,
                                  std::uint64_t seed, double series_rel_tol = 1e-9) {
  if (spec.target.kind == SpaceKind::weighted_lp) {
    // The weighted lp example: source must be the matching lp = lorentz(p,p).
    const double p = spec.target.p;
    if (!(spec.source.is_lorentz() && spec.source.p == p && spec.source.q == p)) {
      throw hypothesis_error("alpha_bracket: weighted target pairs only with lorentz(p,p)");
    }
    const double c = std::pow(0.5, 1.0 / p);
    std::vector<FiniteSequence> centers;
    centers.emplace_back(std::vector<double>(L, 0.0));
    for (double level : {1.0, -1.0, c, -c}) {
      centers.push_back(scale(unit_vector(1, L), level));
    }
    AlphaBracket out;
    out.lo = 0.0;
    out.hi = c;
    out.tag = "weighted-example";
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      const FiniteSequence x = sample_unit_sphere(spec.source, L, rng);
      const double d = min_distance_to_centers(x, centers, spec.target);
      out.max_observed_distance = std::max(out.max_observed_distance, d);
      if (d > c) ++out.refutations;
      ++out.samples_checked;
    }
    return out;
  }
  const EmbeddingVerdict verdict = classify(spec, series_rel_tol);
  if (!verdict.embedded) {
    throw hypothesis_error("alpha_bracket: unsupported (pair not covered by the catalog)");
  }
  AlphaBracket out;
  double hi = verdict.exact_norm ? verdict.exact_norm->hi : verdict.constant.hi;
  if (verdict.alpha_upper) hi = std::min(hi, *verdict.alpha_upper);
  out.hi = hi;
  if (verdict.maximally_noncompact.value_or(false) && verdict.exact_norm) {
    out.lo = verdict.exact_norm->lo;
    out.hi = verdict.exact_norm->hi;
    out.tag = "maximal";
  } else if (verdict.alpha_upper) {
    out.tag = "span-cover";
  } else {
    out.tag = "norm-bound";
  }
  return out;
}

}  // namespace seqemb
