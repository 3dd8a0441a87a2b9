// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned here on purpose; do not loosen them to make a
// criterion pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "seqemb/audit_suites.hpp"
#include "seqemb/catalog.hpp"
#include "seqemb/noncompact.hpp"
#include "seqemb/search.hpp"

using namespace seqemb;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, double seconds,
            const std::string& detail = "") {
  std::printf("criterion %2d: %s  %s (%.2fs)%s%s\n", number, ok ? "PASS" : "FAIL", what.c_str(),
              seconds, detail.empty() ? "" : "  ", detail.c_str());
  if (!ok) ++failures;
}

void run(int number, const std::string& what, double time_limit_s,
         const std::function<bool(std::string&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (seconds > time_limit_s) {
    ok = false;
    detail += " [over the " + std::to_string(time_limit_s) + "s budget]";
  }
  report(number, what, ok, seconds, detail);
}

}  // namespace

int main() {
  // 1. Exact-norm reproduction: 20 parameter grids across the four
  //    ||I|| = 1 case families; closed form, so exact equality.
  run(1, "exact norm 1 across 20 grids", 1.0, [](std::string& detail) {
    struct Grid {
      double p1, q1, p2, q2;
    };
    const std::vector<Grid> grids{
        // q1 <= p1, p1 < p2
        {1, 1, 2, 2},     {2, 1, 3, 2},      {2, 2, 3, 1},    {3, 1.5, 4, 7},  {1.5, 1, 2, kInf},
        // q1 <= p1, same p
        {2, 1, 2, 2},     {3, 2, 3, 4},      {2, 2, 2, kInf}, {4, 1, 4, 1.5},  {5, 4, 5, kInf},
        // q1 >= q2 >= 1, p1 < p2, p1 < q1
        {1, 2, 2, 1.5},   {1, 3, 2, 2},      {2, 4, 3, 4},    {1, 1.5, 3, 1},  {1.5, 2, 2, 2},
        // q1 = q2 = inf, p1 < p2
        {1, kInf, 2, kInf}, {2, kInf, 3, kInf}, {1, kInf, 5, kInf}, {0.5, kInf, 1, kInf},
        {3, kInf, 4, kInf}};
    if (grids.size() != 20) return false;
    for (const Grid& g : grids) {
      const EmbeddingVerdict v = classify(
          {SpaceDescriptor::lorentz(g.p1, g.q1), SpaceDescriptor::lorentz(g.p2, g.q2)});
      if (!v.embedded || !v.exact_norm || !(v.exact_norm->lo == 1.0 && v.exact_norm->hi == 1.0)) {
        detail = "failed at p1=" + std::to_string(g.p1) + " q1=" + std::to_string(g.q1) +
                 " p2=" + std::to_string(g.p2) + " q2=" + std::to_string(g.q2);
        return false;
      }
    }
    return true;
  });

  // 2. Riemann limit: ratio(n,1,2) = n/sqrt(n(n+1)/2) to 1e-12 relative for
  //    n in {1,10,1e3,1e6}; ratio(1e6) within 1e-5*sqrt(2) of sqrt(2).
  run(2, "riemann ratio closed form and limit", 30.0, [](std::string& detail) {
    for (std::size_t n : {1ul, 10ul, 1000ul, 1000000ul}) {
      const double direct = riemann_ratio(n, 1.0, 2.0);
      const double nn = static_cast<double>(n);
      const double closed = nn / std::sqrt(nn * (nn + 1.0) / 2.0);
      if (std::fabs(direct - closed) > 1e-12 * closed) {
        detail = "mismatch at n=" + std::to_string(n);
        return false;
      }
    }
    const double limit_gap = std::fabs(riemann_ratio(1000000, 1.0, 2.0) - std::sqrt(2.0));
    if (limit_gap >= 1e-5 * std::sqrt(2.0)) {
      detail = "limit gap " + std::to_string(limit_gap);
      return false;
    }
    return true;
  });

  // 3. Series norm brackets (pi^2/6)^{1/2} within rel_tol 1e-8.
  run(3, "series bracket around sqrt(pi^2/6)", 5.0, [](std::string& detail) {
    const Interval iv = series_norm(1.0, 2.0, 2.0, 1e-8);
    const double exact = std::sqrt(std::numbers::pi * std::numbers::pi / 6.0);
    if (!(iv.lo <= exact && exact <= iv.hi)) {
      detail = "bracket misses the constant";
      return false;
    }
    if (!(iv.width() <= 1e-8 * iv.lo)) {
      detail = "bracket too wide";
      return false;
    }
    return true;
  });

  // 4a. Search on l^{1,2} -> l^{1,inf} at L = 1e4: within 2% below sqrt(2),
  //     winning family block-indicator.
  run(4, "search: block family on the Riemann pair, L=1e4", 60.0, [](std::string& detail) {
    SearchConfig cfg;
    cfg.truncation = 10000;
    const SearchResult r = estimate_operator_norm(
        {SpaceDescriptor::lorentz(1, 2), SpaceDescriptor::lorentz(1, kInf)}, cfg);
    const double target = std::sqrt(2.0);
    if (!(r.best_value <= target + 1e-9 && r.best_value >= 0.98 * target)) {
      detail = "best_value " + std::to_string(r.best_value);
      return false;
    }
    if (r.family_tag != "block-indicator") {
      detail = "family " + r.family_tag;
      return false;
    }
    return true;
  });

  // 4b. Search on l^{1,inf} -> l^{2,2} at L = 1e5: within 1% of the series
  //     bracket, winning family power-decay.
  run(4, "search: power-decay family on the series pair, L=1e5", 60.0,
      [](std::string& detail) {
        SearchConfig cfg;
        cfg.truncation = 100000;
        cfg.restarts = 2;  // the closed-form families decide this pair
        const SearchResult r = estimate_operator_norm(
            {SpaceDescriptor::lorentz(1, kInf), SpaceDescriptor::lorentz(2, 2)}, cfg);
        const Interval oracle = series_norm(1.0, 2.0, 2.0, 1e-10);
        if (!(r.best_value <= oracle.hi + 1e-9 && r.best_value >= 0.99 * oracle.lo)) {
          detail = "best_value " + std::to_string(r.best_value) + " vs bracket [" +
                   std::to_string(oracle.lo) + "," + std::to_string(oracle.hi) + "]";
          return false;
        }
        if (r.family_tag != "power-decay") {
          detail = "family " + r.family_tag;
          return false;
        }
        return true;
      });

  // 5. Cover soundness: lorentz(1,2) -> linf, rho = 0.75 > 2^{-1/2};
  //    m = 17 minimal, 1e4 samples at L = 64, zero refutations.
  run(5, "constant cover m=17, sampled sound at rho=0.75", 30.0, [](std::string& detail) {
    const SpaceDescriptor s = SpaceDescriptor::lorentz(1, 2);
    const CoverCertificate cert = build_constant_cover(s, 0.75, 64);
    if (cert.m != 17) {
      detail = "m=" + std::to_string(cert.m);
      return false;
    }
    const double sigma = cert.sigma;
    if (!((1.0 + 1.0 / 17.0) * sigma / 2.0 < 0.75 &&
          (1.0 + 1.0 / 16.0) * sigma / 2.0 >= 0.75)) {
      detail = "m=17 is not minimal for this sigma";
      return false;
    }
    const VerifyResult result = verify_cover(cert, s, 10000, 42);
    if (!std::holds_alternative<CoverCertificate>(result)) {
      detail = "refuted at distance " +
               std::to_string(std::get<CoverRefutation>(result).min_distance);
      return false;
    }
    const CoverCertificate& ok = std::get<CoverCertificate>(result);
    detail = "max observed distance " + std::to_string(ok.max_observed_distance);
    return ok.samples_checked == 10000;
  });

  // 6. Weighted example: the five-ball cover {0, +-e1, +-(1/2)^{1/p} e1}
  //    with radius (1/2)^{1/p} at p = 2, 1e4 samples at L = 64, plus the
  //    exact norm identity ||e2||_w = (1/2)^{1/2}.
  run(6, "weighted example: five-ball cover and ||e2||_w", 30.0, [](std::string& detail) {
    const double c = std::sqrt(0.5);
    if (norm(unit_vector(2, 4), SpaceDescriptor::weighted(2)) != c) {
      detail = "||e2||_w is not exactly (1/2)^{1/2}";
      return false;
    }
    const AlphaBracket b = alpha_bracket(
        {SpaceDescriptor::lorentz(2, 2), SpaceDescriptor::weighted(2)}, 64, 10000, 42);
    detail = std::to_string(b.refutations) + " refutations in " +
             std::to_string(b.samples_checked) + " samples, max distance " +
             std::to_string(b.max_observed_distance);
    return b.refutations == 0;
  });

  // 7. Refutation completeness: 100 seeded random candidate covers (m <= 8,
  //    rho = 0.8 < ||I|| = 1) of the l^{1,1} -> l^{2,2} unit-ball image at
  //    L = 256; the spread witness escapes every one.
  run(7, "spread witness escapes 100 random covers", 60.0, [](std::string& detail) {
    const SpaceDescriptor src = SpaceDescriptor::lorentz(1, 1);
    const SpaceDescriptor tgt = SpaceDescriptor::lorentz(2, 2);
    const double rho = 0.8;
    const double lambda = 0.1;  // (1 - lambda) ||e1||_{2,2} = 0.9 > rho
    const FiniteSequence x = unit_vector(1, 256);
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      Rng rng(1000 + trial);
      std::vector<FiniteSequence> centers;
      const std::size_t m = 1 + rng.integer(8);
      for (std::size_t i = 0; i < m; ++i) {
        // A point of the unit-ball image: a source unit-sphere element
        // scaled into the ball.
        centers.push_back(scale(sample_unit_sphere(src, 256, rng), rng.uniform()));
      }
      const WitnessReport rep = spread_witness(centers, src, tgt, rho, lambda, x, 256);
      if (!(rep.min_distance_to_centers > rho)) {
        detail = "trial " + std::to_string(trial) + " distance " +
                 std::to_string(rep.min_distance_to_centers);
        return false;
      }
    }
    return true;
  });

  // 8. Sign-flip refuter: 100 seeded random center lists (m <= 10),
  //    rho = 0.99.
  run(8, "sign-flip witness beats 100 random center lists", 5.0, [](std::string& detail) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      Rng rng(2000 + trial);
      const std::size_t m = 1 + rng.integer(10);
      std::vector<FiniteSequence> centers;
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> c(m);
        for (double& t : c) t = rng.normal();
        centers.emplace_back(std::move(c));
      }
      const WitnessReport rep = signflip_witness(centers, 0.99);
      if (!(rep.min_distance_to_centers > 0.99)) {
        detail = "trial " + std::to_string(trial);
        return false;
      }
    }
    return true;
  });

  // 9. Inequality audits: zero violations, 1e4 cases per suite, slack 1e-9.
  run(9, "inequality audits, 1e4 cases each", 120.0, [](std::string& detail) {
    std::size_t violations = 0;
    for (const AuditOutcome& o : run_all_audits(10000, 42)) {
      violations += o.violations;
      if (o.violations > 0) {
        detail += o.name + "=" + std::to_string(o.violations) + " ";
      }
    }
    return violations == 0;
  });

  // 10. Output invariant: 0 <= lo <= hi <= exact norm across the classify
  //     grid whenever the exact norm is known.
  run(10, "alpha bracket within [0, ||I||] across the grid", 1.0, [](std::string& detail) {
    const std::vector<double> ps{0.5, 1, 1.5, 2, 3, kInf};
    const std::vector<double> qs{0.5, 1, 1.5, 2, 3, kInf};
    std::size_t checked = 0;
    for (double p1 : ps)
      for (double q1 : qs)
        for (double p2 : ps)
          for (double q2 : qs) {
            const EmbeddingSpec spec{SpaceDescriptor::lorentz(p1, q1),
                                     SpaceDescriptor::lorentz(p2, q2)};
            const EmbeddingVerdict v = classify(spec, 1e-6);
            if (!v.embedded) continue;
            const AlphaBracket b = alpha_bracket(spec, 8, 0, 0, 1e-6);
            const double op_hi = v.exact_norm ? v.exact_norm->hi : v.constant.hi;
            if (!(0.0 <= b.lo && b.lo <= b.hi && b.hi <= op_hi * (1.0 + 1e-12))) {
              detail = spec.source.to_string() + " -> " + spec.target.to_string();
              return false;
            }
            ++checked;
          }
    detail = std::to_string(checked) + " embedded pairs checked";
    return checked > 100;
  });

  if (failures > 0) {
    std::printf("%d criterion failure(s)\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
