#include <doctest.h>

#include <cmath>
#include <numbers>

#include "seqemb/catalog.hpp"
#include "seqemb/sampling.hpp"
#include "seqemb/sequence.hpp"

using namespace seqemb;

namespace {

EmbeddingSpec lorentz_pair(double p1, double q1, double p2, double q2) {
  return EmbeddingSpec{SpaceDescriptor::lorentz(p1, q1), SpaceDescriptor::lorentz(p2, q2)};
}

FiniteSequence random_signed(Rng& rng, std::size_t len) {
  std::vector<double> v(len);
  for (double& x : v) x = rng.normal();
  return FiniteSequence(std::move(v));
}

}  // namespace

TEST_CASE("series_norm brackets classical zeta values") {
  // s = 2: sum n^{-2} = pi^2/6, taken before the q2-th root with q2 = 2.
  const Interval s2 = series_norm(1, 2, 2, 1e-10);
  const double zeta2_root = std::sqrt(std::numbers::pi * std::numbers::pi / 6.0);
  CHECK(s2.lo <= zeta2_root);
  CHECK(s2.hi >= zeta2_root);
  CHECK(s2.width() <= 1e-10 * s2.lo);

  // s = 4 via p1=1, p2=inf, q2=3 gives exponent 1 + 3 - 0 = 4; root of pi^4/90.
  const Interval s4 = series_norm(1.0, kInf, 3.0, 1e-10);
  const double zeta4_root = std::pow(std::pow(std::numbers::pi, 4) / 90.0, 1.0 / 3.0);
  CHECK(s4.lo <= zeta4_root);
  CHECK(s4.hi >= zeta4_root);

  CHECK_THROWS_AS(series_norm(1.0, 1.0, 2.0, 1e-8), hypothesis_error);  // s = 1
}

TEST_CASE("series_norm brackets shrink as the tolerance tightens") {
  double prev = std::numeric_limits<double>::infinity();
  for (double tol : {1e-4, 1e-6, 1e-8, 1e-10}) {
    const Interval iv = series_norm(1, 2, 2, tol);
    CHECK(iv.lo <= iv.hi);
    CHECK(iv.width() <= prev);
    prev = iv.width();
  }
}

TEST_CASE("classify: the spec'd landmark cases") {
  {
    const EmbeddingVerdict v = classify(lorentz_pair(1, 1, 2, 2));
    CHECK(v.embedded);
    CHECK(v.constant == Interval::point(1.0));
    CHECK(v.exact_norm == Interval::point(1.0));
    CHECK(v.maximally_noncompact == true);
  }
  {
    // Same p, q1 < q2 = inf: the Riemann-limit norm (q/p)^{1/q}.
    const EmbeddingVerdict v = classify(lorentz_pair(1, 2, 1, kInf));
    CHECK(v.embedded);
    CHECK(v.constant.lo == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    REQUIRE(v.exact_norm.has_value());
    CHECK(v.exact_norm->lo == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(v.norm_attained_limit_only);
  }
  {
    const EmbeddingVerdict v = classify(lorentz_pair(1, kInf, 2, 2));
    REQUIRE(v.exact_norm.has_value());
    const double zeta2_root = std::sqrt(std::numbers::pi * std::numbers::pi / 6.0);
    CHECK(v.exact_norm->lo <= zeta2_root);
    CHECK(v.exact_norm->hi >= zeta2_root);
    CHECK(v.exact_norm->hi == doctest::Approx(1.282549830).epsilon(1e-8));
  }
  {
    const EmbeddingVerdict v =
        classify({SpaceDescriptor::lorentz(2, 3), SpaceDescriptor::czero()});
    CHECK(v.embedded);
    CHECK(v.exact_norm == Interval::point(1.0));
    CHECK(v.maximally_noncompact == true);
  }
  {
    const EmbeddingVerdict v = classify({SpaceDescriptor::czero(), SpaceDescriptor::sup()});
    CHECK(v.exact_norm == Interval::point(1.0));
    CHECK(v.maximally_noncompact == true);
  }
  {
    // lorentz(p,q), p <= q, q >= 1 into linf: not maximally non-compact.
    const EmbeddingVerdict v =
        classify({SpaceDescriptor::lorentz(1, 2), SpaceDescriptor::sup()});
    CHECK(v.maximally_noncompact == false);
    CHECK(*v.alpha_upper == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
  }
}

TEST_CASE("classify: uncovered directions and errors") {
  CHECK(classify(lorentz_pair(2, 2, 1, 1)).theorem_tag == "uncovered:reverse-p");
  CHECK(!classify(lorentz_pair(2, 2, 1, 1)).embedded);
  CHECK(classify(lorentz_pair(2, 3, 2, 1)).theorem_tag == "uncovered:reverse-q");
  CHECK_THROWS_AS(classify({SpaceDescriptor::weighted(2), SpaceDescriptor::sup()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(classify({SpaceDescriptor::lorentz(2, 2), SpaceDescriptor::weighted(2)}),
                  std::invalid_argument);
}

TEST_CASE("classify: q in (0,1) keeps the inclusion constant but no exact norm") {
  const EmbeddingVerdict v = classify(lorentz_pair(0.25, 0.2, 2, 0.5));
  CHECK(v.embedded);
  CHECK(v.constant == Interval::point(1.0));  // q1 <= p1 branch
  CHECK(!v.exact_norm.has_value());
}

TEST_CASE("exact norm is attained at e^1 when it equals one") {
  for (const EmbeddingSpec& spec :
       {lorentz_pair(1, 1, 2, 2), lorentz_pair(1, 2, 2, 1.5), lorentz_pair(1, kInf, 2, kInf),
        lorentz_pair(2, 1, 2, 3)}) {
    const EmbeddingVerdict v = classify(spec);
    REQUIRE(v.exact_norm == Interval::point(1.0));
    const FiniteSequence e1 = unit_vector(1, 4);
    CHECK(norm(e1, spec.target) == norm(e1, spec.source));
  }
}

TEST_CASE("constant soundness on random sequences") {
  Rng rng(31);
  const std::vector<EmbeddingSpec> specs{
      lorentz_pair(2, 1, 3, 2),    lorentz_pair(1, kInf, 2, 2), lorentz_pair(1, 2, 2, 3),
      lorentz_pair(1, 2, 1, 3),    lorentz_pair(1, kInf, 2, kInf),
      lorentz_pair(1, 2, 1, kInf), lorentz_pair(2, 1, 2, 2),
      {SpaceDescriptor::lorentz(1, 2), SpaceDescriptor::sup()},
      {SpaceDescriptor::lorentz(2, 0.5), SpaceDescriptor::czero()}};
  for (const EmbeddingSpec& spec : specs) {
    const EmbeddingVerdict v = classify(spec);
    REQUIRE(v.embedded);
    for (int trial = 0; trial < 1200; ++trial) {
      const FiniteSequence a = random_signed(rng, 1 + rng.integer(16));
      CHECK(norm(a, spec.target) <= v.constant.hi * norm(a, spec.source) + 1e-9);
    }
  }
}

TEST_CASE("the q1-ge-q2 constant 1 is refutable (known discrepancy)") {
  // The catalog reports constant 1 for p1 < q1, q2 < q1 (theorem_tag
  // pair:q1-ge-q2), but a two-term sequence beats it, so the norm of the
  // embedding is strictly above 1. The constant soundness suite skips this
  // case; this test pins the counterexample so the discrepancy stays
  // visible.
  const EmbeddingSpec spec = lorentz_pair(1, 2, 2, 1.5);
  const EmbeddingVerdict v = classify(spec);
  CHECK(v.theorem_tag == "pair:q1-ge-q2");
  CHECK(v.constant == Interval::point(1.0));
  const FiniteSequence a(std::vector<double>{1.0, 0.2});
  CHECK(norm(a, spec.target) > 1.009 * norm(a, spec.source));
}

TEST_CASE("chain consistency of the constants") {
  Rng rng(32);
  const SpaceDescriptor A = SpaceDescriptor::lorentz(1, 2);
  const SpaceDescriptor B = SpaceDescriptor::lorentz(2, 3);
  const SpaceDescriptor C = SpaceDescriptor::lorentz(3, 3);
  const double c1 = classify({A, B}).constant.hi;
  const double c2 = classify({B, C}).constant.hi;
  for (int trial = 0; trial < 1000; ++trial) {
    FiniteSequence x = random_signed(rng, 1 + rng.integer(8));
    const double na = norm(x, A);
    if (na == 0.0) continue;
    x = scale(x, 1.0 / na);
    CHECK(norm(x, C) <= c1 * c2 + 1e-9);
  }
}

TEST_CASE("verdict invariants: alpha_upper <= exact_norm <= constant") {
  const std::vector<EmbeddingSpec> specs{
      lorentz_pair(1, 1, 2, 2), lorentz_pair(1, 2, 1, kInf), lorentz_pair(1, kInf, 2, 2),
      {SpaceDescriptor::lorentz(1, 2), SpaceDescriptor::sup()},
      {SpaceDescriptor::lorentz(3, 1), SpaceDescriptor::sup()},
      {SpaceDescriptor::lorentz(2, kInf), SpaceDescriptor::sup()},
      {SpaceDescriptor::czero(), SpaceDescriptor::sup()}};
  for (const EmbeddingSpec& spec : specs) {
    const EmbeddingVerdict v = classify(spec);
    if (v.exact_norm) {
      CHECK(v.exact_norm->hi <= v.constant.hi * (1.0 + 1e-12));
      if (v.alpha_upper) CHECK(*v.alpha_upper <= v.exact_norm->hi * (1.0 + 1e-12));
    }
  }
}
