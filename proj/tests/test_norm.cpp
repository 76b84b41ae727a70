#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fpqaoa/norm.hpp"
#include "fpqaoa/qubo.hpp"
#include "fpqaoa/rng.hpp"

using namespace fpqaoa;

TEST_SUITE_BEGIN("norm");

TEST_CASE("single-entry and 3-4-5 norms") {
  QuboInstance q;
  q.n = 2;
  q.entries = {{1, 2, 3.0}};
  CHECK(norm_value(q, NormKind::Frobenius) == doctest::Approx(3.0));

  q.entries = {{1, 1, 3.0}, {1, 2, -4.0}};
  CHECK(norm_value(q, NormKind::Frobenius) == doctest::Approx(5.0));
  CHECK(norm_value(q, NormKind::MaxAbs) == doctest::Approx(4.0));
  CHECK(norm_value(q, NormKind::None) == 1.0);
}

TEST_CASE("weighted norm matches a direct recomputation") {
  for (std::uint64_t seed : {3u, 4u}) {
    const QuboInstance q = generate_mixed(4, seed);
    if (q.all_zero()) continue;
    long e1 = 0, e2 = 0;
    double d = 0.0, o = 0.0;
    for (const auto& e : q.entries) {
      if (e.i == e.j) {
        d += e.value * e.value;
        if (e.value != 0.0) ++e1;
      } else {
        o += e.value * e.value;
        if (e.value != 0.0) ++e2;
      }
    }
    const double expect = std::sqrt((e1 ? d / e1 : 0.0) + (e2 ? o / e2 : 0.0));
    CHECK(norm_value(q, NormKind::WeightedNorm) == doctest::Approx(expect).epsilon(1e-12));
  }

  // dense ensembles count every slot
  const QuboInstance qn = generate_normal(4, 9);
  double d = 0.0, o = 0.0;
  for (const auto& e : qn.entries) (e.i == e.j ? d : o) += e.value * e.value;
  CHECK(norm_value(qn, NormKind::WeightedNorm) ==
        doctest::Approx(std::sqrt(d / 4.0 + o / 6.0)).epsilon(1e-12));
}

TEST_CASE("rescale reaches unit norm and is positively homogeneous") {
  const QuboInstance q = generate_normal(6, 5);
  const QuboInstance r = rescale(q, NormKind::Frobenius);
  CHECK(norm_value(r, NormKind::Frobenius) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.norm_applied == NormKind::Frobenius);
  CHECK(q.norm_applied == NormKind::None);  // original untouched

  QuboInstance scaled = q;
  for (auto& e : scaled.entries) e.value *= 3.5;
  const QuboInstance r2 = rescale(scaled, NormKind::Frobenius);
  for (std::size_t k = 0; k < r.entries.size(); ++k)
    CHECK(r2.entries[k].value == doctest::Approx(r.entries[k].value).epsilon(1e-12));
}

TEST_CASE("standard-deviation identity over full enumeration") {
  for (int n : {6, 10, 12}) {
    const QuboInstance q = generate_normal(n, 60 + n);
    const Spectrum s = compute_spectrum(q);
    double sq = 0.0;
    for (double c : s.costs) sq += c * c;
    const double sd = std::sqrt(sq / static_cast<double>(s.dim()));
    CHECK(sd == doctest::Approx(norm_value(q, NormKind::Frobenius)).epsilon(1e-9));
  }

  const QuboInstance r = rescale(generate_normal(6, 8), NormKind::Frobenius);
  const Spectrum s = compute_spectrum(r);
  double sq = 0.0;
  for (double c : s.costs) sq += c * c;
  CHECK(std::sqrt(sq / 64.0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("rescaling by any positive norm preserves argmin and feasibility") {
  for (NormKind kind : {NormKind::Frobenius, NormKind::MaxAbs, NormKind::WeightedNorm}) {
    const QuboInstance q = generate_mixed(8, 31);
    REQUIRE(!q.all_zero());
    const Spectrum before = compute_spectrum(q);
    const Spectrum after = compute_spectrum(rescale(q, kind));
    CHECK(before.argmin_set == after.argmin_set);
    for (double alpha : {0.0, 0.5, 0.9, 0.95, 1.0})
      CHECK(feasible_set(before, alpha).members == feasible_set(after, alpha).members);
  }
}

TEST_CASE("max-abs never exceeds the Frobenius norm") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const QuboInstance q = generate_mixed(5, derive_seed(44, seed));
    if (q.all_zero()) continue;
    CHECK(norm_value(q, NormKind::MaxAbs) <= norm_value(q, NormKind::Frobenius));
  }
}

TEST_CASE("all-zero instances cannot be rescaled") {
  QuboInstance q;
  q.n = 3;
  q.entries = {{1, 1, 0.0}, {2, 3, 0.0}};
  CHECK_THROWS_AS(norm_value(q, NormKind::Frobenius), std::domain_error);
  CHECK_THROWS_AS(rescale(q, NormKind::MaxAbs), std::domain_error);
  CHECK(rescale(q, NormKind::None).entries.size() == 2);
}

TEST_CASE("kind string round-trips") {
  for (NormKind k : {NormKind::None, NormKind::Frobenius, NormKind::MaxAbs,
                     NormKind::WeightedNorm})
    CHECK(norm_kind_from_string(to_string(k)) == k);
  for (EnsembleKind k : {EnsembleKind::Normal, EnsembleKind::Mixed, EnsembleKind::Custom})
    CHECK(ensemble_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(norm_kind_from_string("froeb"), std::invalid_argument);
}

TEST_SUITE_END();
