#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "fixtures.hpp"
#include "polyrecon/errors.hpp"
#include "polyrecon/oracle.hpp"
#include "polyrecon/witness.hpp"

using namespace polyrecon;
using doctest::Approx;

namespace {

// True CCW rank of every visible vertex, from the coordinates.
std::vector<std::map<int, int>> true_ranks(const Polygon& p, const VisibilityGraph& g) {
  const int n = p.size();
  std::vector<std::map<int, int>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Angle base = direction(p.vertices[i], p.at(i + 1));
    std::vector<std::pair<double, int>> fan;
    for (int j : g.neighbors(i)) {
      fan.emplace_back(ccw_angle(base, direction(p.vertices[i], p.vertices[j])).radians(), j);
    }
    std::sort(fan.begin(), fan.end());
    for (std::size_t t = 0; t < fan.size(); ++t) out[i][fan[t].second] = static_cast<int>(t) + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("init_state") {
  const FBState tri = init_state(measure_angles(fixtures::tri()));
  for (int i = 0; i < 3; ++i) {
    CHECK(tri.forward_rank(i, (i + 1) % 3) == 1);
    CHECK(tri.backward_rank(i, (i + 2) % 3) == 2);
    CHECK(tri.forward_count(i) == 1);
    CHECK(tri.backward_count(i) == 1);
    CHECK(tri.last_forward(i) == (i + 1) % 3);
    CHECK(tri.first_backward(i) == (i + 2) % 3);
  }
  CHECK(tri.forward_rank(0, 2) == 0);

  const FBState h = init_state(measure_angles(fixtures::hexl()));
  CHECK(h.backward_rank(3, 2) == 5);
  CHECK(h.reach() == 3);

  AngleData bad = measure_angles(fixtures::hexl());
  bad.vertices[2] = {1, {}};
  CHECK_THROWS_AS(init_state(bad), InconsistentInput);
  AngleData negative = measure_angles(fixtures::hexl());
  negative.vertices[1].gaps[0] = -0.1;
  CHECK_THROWS_AS(init_state(negative), InconsistentInput);
}

TEST_CASE("witness_sum on the hexagon") {
  using fixtures::kAtanHalf;
  using fixtures::kAtanThird;
  using fixtures::kAtanTwo;
  const AngleData data = measure_angles(fixtures::hexl());

  SUBCASE("pair (1,3) via 2 after separation 1") {
    const FBState s = init_state(data);
    const WitnessAngles w = witness_sum(s, 1, 3, 2);
    CHECK(w.up_i == Approx(kAtanTwo).epsilon(1e-14));
    CHECK(w.up_j == Approx(kAtanHalf).epsilon(1e-14));
    CHECK(w.at_l == Approx(kPi / 2).epsilon(1e-14));
    CHECK(std::abs(w.sum() - kPi) < 1e-14);
  }

  SUBCASE("separation 3 pairs") {
    ReconstructOptions opts;
    opts.last_separation = 2;
    const Reconstruction partial = reconstruct_improved(data, opts);
    const WitnessAngles visible = witness_sum(partial.state, 0, 3, 2);
    CHECK(visible.up_i == Approx(kAtanHalf).epsilon(1e-14));
    CHECK(visible.up_j == Approx(2.35619449019234492884698253746).epsilon(1e-14));
    CHECK(visible.at_l == Approx(kAtanThird).epsilon(1e-14));
    CHECK(std::abs(visible.sum() - kPi) < 1e-14);

    CHECK(partial.state.last_forward(1) == 3);
    const WitnessAngles blocked = witness_sum(partial.state, 1, 4, 3);
    CHECK(blocked.up_i == Approx(kAtanHalf).epsilon(1e-14));
    CHECK(blocked.up_j == Approx(kAtanThird).epsilon(1e-14));
    CHECK(blocked.at_l == Approx(4.24874137138388374147970884346).epsilon(1e-14));
    CHECK(blocked.sum() == Approx(5.03413953478133205109536968928).epsilon(1e-14));
  }

  SUBCASE("preconditions") {
    const FBState s = init_state(data);
    CHECK_THROWS_AS(witness_sum(s, 1, 4, 3), PreconditionViolated);  // 3 not yet seen by 1
    CHECK_THROWS_AS(witness_sum(s, 1, 3, 4), PreconditionViolated);  // 4 not between
  }
}

TEST_CASE("reconstruction on fixtures") {
  for (Algorithm a : {Algorithm::Original, Algorithm::Improved}) {
    CAPTURE(to_string(a));
    CHECK(reconstruct(measure_angles(fixtures::tri()), a).graph.edge_count() == 3);
    CHECK(reconstruct(measure_angles(fixtures::square()), a).graph.edge_count() == 6);
    CHECK(reconstruct(measure_angles(fixtures::hexl()), a).graph.edges() == fixtures::hexl_edges());
  }
  CHECK(parse_algorithm("original") == Algorithm::Original);
  CHECK(parse_algorithm("improved") == Algorithm::Improved);
  CHECK_FALSE(parse_algorithm("fast").has_value());
}

TEST_CASE("improved algorithm rejects the blocked hexagon pair through its single candidate") {
  std::vector<WitnessCheck> seen;
  ReconstructOptions opts;
  opts.observer = [&](const WitnessCheck& c) { seen.push_back(c); };
  const Reconstruction rec = reconstruct_improved(measure_angles(fixtures::hexl()), opts);
  const auto it = std::find_if(seen.begin(), seen.end(),
                               [](const WitnessCheck& c) { return c.i == 1 && c.j == 4; });
  REQUIRE(it != seen.end());
  CHECK(it->l == 3);
  CHECK_FALSE(it->accepted);
  CHECK(it->angles.sum() == Approx(5.03413953478133205).epsilon(1e-14));
  CHECK(rec.stats.candidate_checks == 6 * (3 - 1));
}

TEST_CASE("convex polygons reconstruct to complete graphs") {
  for (int n : {3, 4, 5, 6, 7, 12, 25}) {
    const AngleData data = measure_angles(random_convex_polygon(n, 4));
    for (Algorithm a : {Algorithm::Original, Algorithm::Improved}) {
      CHECK(reconstruct(data, a).graph.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));
    }
  }
}

TEST_CASE("differential equivalence with the brute-force oracle") {
  for (int n = 3; n <= 40; ++n) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Polygon p = random_simple_polygon(n, 1000 + seed);
      const VisibilityGraph truth = visibility_graph_oracle(p);
      const AngleData data = measure_angles(p, truth);
      const Reconstruction original = reconstruct_original(data);
      const Reconstruction improved = reconstruct_improved(data);
      CAPTURE(n);
      CAPTURE(seed);
      CHECK(original.graph == truth);
      CHECK(improved.graph == truth);
      CHECK(improved.stats.candidate_checks ==
            static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>((n + 1) / 2 - 1));
      CHECK(original.stats.candidate_checks >= improved.stats.candidate_checks);
      CHECK(improved.stats.near_misses == 0);
      CHECK(improved.stats.min_rejected_deviation > kNearMissBound);
    }
  }
}

TEST_CASE("state soundness and monotone fill at every separation") {
  for (int n : {5, 8, 13, 20}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Polygon p = random_simple_polygon(n, 77 + seed);
      const VisibilityGraph truth = visibility_graph_oracle(p);
      const auto ranks = true_ranks(p, truth);
      const AngleData data = measure_angles(p, truth);
      const int reach = (n + 1) / 2;
      for (int k = 1; k <= reach; ++k) {
        ReconstructOptions opts;
        opts.last_separation = k;
        const FBState s = reconstruct_improved(data, opts).state;
        for (int i = 0; i < n; ++i) {
          int expected_forward = 0;
          int expected_backward = 0;
          int previous_f = 0;
          int previous_b = s.degree(i) + 1;
          for (int d = 1; d <= k; ++d) {
            const int ahead = wrap_index(i + d, n);
            const int behind = wrap_index(i - d, n);
            const int f = s.forward_rank(i, ahead);
            const int b = s.backward_rank(i, behind);
            CHECK((f != 0) == truth.contains(i, ahead));
            CHECK((b != 0) == truth.contains(i, behind));
            if (f != 0) {
              CHECK(f == ranks[i].at(ahead));
              CHECK(f == previous_f + 1);
              previous_f = f;
              ++expected_forward;
            }
            if (b != 0) {
              CHECK(b == ranks[i].at(behind));
              CHECK(b == previous_b - 1);
              previous_b = b;
              ++expected_backward;
            }
          }
          CHECK(s.forward_count(i) == expected_forward);
          CHECK(s.backward_count(i) == expected_backward);
        }
      }
    }
  }
}

TEST_CASE("inconsistent data is reported, not repaired") {
  AngleData data = measure_angles(fixtures::hexl());
  // Claim an extra visible vertex at v1 without a partner anywhere.
  data.vertices[1].degree = 4;
  data.vertices[1].gaps = {0.5, 0.5, 0.5};
  CHECK_NOTHROW(init_state(data));
  const ConsistencyReport report = detect_inconsistency(data);
  CHECK_FALSE(report.consistent);
}

TEST_CASE("detect_inconsistency") {
  const AngleData good = measure_angles(fixtures::hexl());
  const ConsistencyReport ok = detect_inconsistency(good);
  CHECK(ok.consistent);
  CHECK(ok.summary() == "Consistent");

  AngleData nudged = good;
  nudged.vertices[0].gaps[1] += 1e-3;
  const ConsistencyReport bad = detect_inconsistency(nudged);
  CHECK_FALSE(bad.consistent);
  CHECK(bad.summary().rfind("Inconsistent", 0) == 0);

  // Spread a 0.1 rad excess evenly so no single vertex looks wrong.
  AngleData inflated = good;
  for (auto& v : inflated.vertices) v.gaps.back() += 0.1 / 6;
  const ConsistencyReport structural = detect_inconsistency(inflated);
  CHECK_FALSE(structural.consistent);
  CHECK(structural.stage == "structure");

  // Angle total preserved, but the shape no longer closes: caught after
  // reconstruction.
  AngleData shuffled = good;
  shuffled.vertices[0].gaps[0] += 1e-3;
  shuffled.vertices[3].gaps[0] -= 1e-3;
  const ConsistencyReport deep = detect_inconsistency(shuffled);
  CHECK_FALSE(deep.consistent);
  CHECK(deep.stage != "structure");
}
