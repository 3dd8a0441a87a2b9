#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "seqemb/audits.hpp"
#include "seqemb/catalog.hpp"
#include "seqemb/sampling.hpp"

namespace seqemb {

struct AuditOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  double worst_defect = std::numeric_limits<double>::infinity();
};

namespace detail {

inline FiniteSequence random_sequence(Rng& rng, std::size_t max_len) {
  const std::size_t len = 1 + rng.integer(max_len);
  std::vector<double> v(len);
  for (double& x : v) x = rng.normal() * std::pow(10.0, 2.0 * rng.uniform() - 1.0);
  return FiniteSequence(std::move(v));
}

// (p,q) with the quasi-triangle constant 2^{1/p} proved: p <= q, or a norm
// region 1 <= q <= p.
inline LorentzParams random_quasi_params(Rng& rng) {
  if (rng.uniform() < 0.5) {
    const double p = 0.3 + 2.7 * rng.uniform();
    return LorentzParams(p, p + 3.0 * rng.uniform());
  }
  const double q = 1.0 + 2.0 * rng.uniform();
  return LorentzParams(q + 2.0 * rng.uniform(), q);
}

}  // namespace detail

inline constexpr double kAuditSlack = 1e-9;

// Randomized audits of every inequality the library relies on. Zero
// violations is the contract; any violation is a bug.
inline std::vector<AuditOutcome> run_all_audits(std::size_t samples, std::uint64_t seed) {
  std::vector<AuditOutcome> out;
  auto record = [](AuditOutcome& o, double defect) {
    ++o.cases;
    o.worst_defect = std::min(o.worst_defect, defect);
    if (defect < -kAuditSlack) ++o.violations;
  };

  {
    AuditOutcome o{"scalar-convexity"};
    Rng rng(seed + 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const double x = std::pow(10.0, 6.0 * rng.uniform() - 3.0);
      const double y = std::pow(10.0, 6.0 * rng.uniform() - 3.0);
      const double q = 1.0 + 3.0 * rng.uniform();
      record(o, *scalar_inequality_audit(x, y, q).convexity_defect);
    }
    out.push_back(o);
  }
  {
    AuditOutcome o{"scalar-subadditivity"};
    Rng rng(seed + 2);
    for (std::size_t i = 0; i < samples; ++i) {
      const double x = std::pow(10.0, 6.0 * rng.uniform() - 3.0);
      const double y = std::pow(10.0, 6.0 * rng.uniform() - 3.0);
      const double q = 0.02 + 0.96 * rng.uniform();
      record(o, *scalar_inequality_audit(x, y, q).subadditivity_defect);
    }
    out.push_back(o);
  }
  {
    AuditOutcome o{"quasi-triangle"};
    Rng rng(seed + 3);
    for (std::size_t i = 0; i < samples; ++i) {
      const LorentzParams params = detail::random_quasi_params(rng);
      record(o, quasi_triangle_defect(detail::random_sequence(rng, 16),
                                      detail::random_sequence(rng, 16), params));
    }
    out.push_back(o);
  }
  {
    AuditOutcome o{"rearrangement-bound"};
    Rng rng(seed + 4);
    for (std::size_t i = 0; i < samples; ++i) {
      // Alternate branches p <= q and q < p.
      const double q = 0.4 + 2.6 * rng.uniform();
      const double p = (i % 2 == 0) ? q * rng.uniform() : q + 2.0 * rng.uniform();
      const LorentzParams params(std::max(p, 0.2), q);
      for (double defect :
           rearrangement_bound_audit(detail::random_sequence(rng, 16), params)) {
        record(o, defect);
      }
    }
    out.push_back(o);
  }
  {
    // One suite per provable embedding constant: the two same-p cases and
    // the three p1 < p2 cases. The paper's remaining p1 < p2 claim (constant
    // 1 for p1 < q1 with q2 < q1) is refutable and is excluded on purpose;
    // test_catalog pins a counterexample.
    struct Case {
      const char* name;
      double p1, q1, p2, q2;
    };
    const Case cases[] = {
        {"same-p:q1-le-p", 2.0, 1.0, 2.0, 3.0},
        {"same-p:p-lt-q1-lt-q2", 1.0, 2.0, 1.0, 3.0},
        {"pair:series", 1.0, kInf, 2.0, 2.0},
        {"pair:q1-lt-q2", 1.0, 2.0, 2.0, 3.0},
        {"pair:sup-sup", 1.0, kInf, 2.0, kInf},
    };
    std::uint64_t suite_seed = seed + 5;
    for (const Case& c : cases) {
      AuditOutcome o{std::string("constant:") + c.name};
      const EmbeddingSpec spec{SpaceDescriptor::lorentz(c.p1, c.q1),
                               SpaceDescriptor::lorentz(c.p2, c.q2)};
      const EmbeddingVerdict verdict = classify(spec);
      Rng rng(suite_seed++);
      for (std::size_t i = 0; i < samples; ++i) {
        const FiniteSequence a = detail::random_sequence(rng, 32);
        record(o, verdict.constant.hi * norm(a, spec.source) - norm(a, spec.target));
      }
      out.push_back(o);
    }
  }
  return out;
}

}  // namespace seqemb
