#include <doctest.h>

#include <cmath>

#include "hidecs/graph.hpp"
#include "hidecs/measures.hpp"
#include "hidecs/rng.hpp"

using namespace hidecs;

namespace {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph two_triangles() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
}

// two triangles joined by one bridge link 2-3
Graph bridged_triangles() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

Partition halves6() {
  return Partition({0, 1, 2, 3, 4, 5}, {{0, 1, 2}, {3, 4, 5}});
}

Graph random_graph(int m, SplitMix64& rng) {
  std::vector<Link> links;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (rng.next_bool()) links.emplace_back(a, b);
  return Graph(m, links);
}

Partition random_bipartition(int m, SplitMix64& rng) {
  std::vector<Vertex> a, b, universe;
  for (int v = 0; v < m; ++v) universe.push_back(v);
  do {
    a.clear();
    b.clear();
    for (int v = 0; v < m; ++v) (rng.next_bool() ? a : b).push_back(v);
  } while (a.empty() || b.empty());
  return Partition(universe, {a, b});
}

}  // namespace

TEST_CASE("measure catalogue") {
  CHECK(MeasureSpec::from_name("h2-decomp").direction() == Direction::kMinimize);
  CHECK(MeasureSpec::from_name("h3-stabl").direction() == Direction::kMaximize);
  CHECK(MeasureSpec::from_name("newman-q").arity() == Arity::kAnyPartition);
  CHECK(MeasureSpec::from_name("h2-rpg").arity() == Arity::kBipartitionOnly);
  CHECK_THROWS_AS(MeasureSpec::from_name("nope"), Error);
  CHECK(MeasureSpec::all().size() == 7);
}

TEST_CASE("expected cut links") {
  CHECK(expected_cut_links(9, 14, 5, 4) == doctest::Approx(7.7777777).epsilon(1e-7));
  // complete graph: every slot is a link
  CHECK(expected_cut_links(6, 15, 2, 4) == doctest::Approx(8.0));
  CHECK(expected_cut_links(141, 1383, 75, 66) ==
        doctest::Approx(693.6018237).epsilon(1e-9));
  CHECK_THROWS_AS(expected_cut_links(1, 0, 1, 0), Error);
  CHECK_THROWS_AS(expected_cut_links(4, 99, 2, 2), Error);
}

TEST_CASE("coupling score of a split") {
  // 3 vertices, one link, split {1,2} vs {3}
  const Graph g(3, {{0, 1}});
  const MeasureValue v = hidecs2_actual(g, Partition({0, 1, 2}, {{0, 1}, {2}}));
  CHECK(v.value == doctest::Approx(-2.0 / 9.0).epsilon(1e-12));
  CHECK(v.intermediate("RR") == 0);

  // a balanced split of a clique cuts exactly the expected number
  const MeasureValue even = hidecs2_actual(k4(), Partition({0, 1, 2, 3}, {{0, 1}, {2, 3}}));
  CHECK(even.value == doctest::Approx(0.0));
  CHECK(even.intermediate("nom") == doctest::Approx(0.0));

  // two vertices: the denominator vanishes
  const Graph pair(2, {{0, 1}});
  const MeasureValue degenerate =
      hidecs2_actual(pair, Partition({0, 1}, {{0}, {1}}));
  CHECK(degenerate.degenerate);
  CHECK(degenerate.value == 0.0);

  CHECK_THROWS_AS(hidecs2_actual(k4(), Partition({0, 1, 2, 3}, {{0}, {1}, {2, 3}})),
                  Error);
}

TEST_CASE("decomposition score identities") {
  CHECK(hidecs2_decomp(k4(), Partition({0, 1, 2, 3}, {{0, 1}, {2, 3}})).value ==
        doctest::Approx(0.0));
  SplitMix64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const int m = 3 + static_cast<int>(rng.next_below(15));
    const Graph g = random_graph(m, rng);
    const Partition p = random_bipartition(m, rng);
    const MeasureValue score = hidecs2_decomp(g, p);
    const MeasureValue info = hidecs2_actual(g, p);
    const MeasureValue notes = hidecs2_notes(g, p);
    const double nsq1 = m * (m - 1) / 2.0;
    if (!score.degenerate) {
      CHECK(score.value ==
            doctest::Approx(nsq1 * info.intermediate("STR")).epsilon(1e-9));
      CHECK(score.value == doctest::Approx(notes.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("multiway score") {
  // two triangles kept apart: no cut, so the numerator is -l * sum of
  // size products
  const MeasureValue v = hidecs2_notes(two_triangles(), halves6());
  CHECK(v.value == doctest::Approx(-std::sqrt(54.0)).epsilon(1e-12));
  CHECK(v.intermediate("cut") == 0);

  // degenerate cases: one cell, and all singletons
  const Graph g = two_triangles();
  CHECK(hidecs2_notes(g, Partition::single_cell({0, 1, 2, 3, 4, 5})).degenerate);
  CHECK(hidecs2_notes(g, Partition::unit({0, 1, 2, 3, 4, 5})).degenerate);
}

TEST_CASE("cohesion-coupling ratio score") {
  const MeasureValue perfect = hidecs2_rpg(two_triangles(), halves6());
  CHECK(perfect.value == doctest::Approx(0.0));
  CHECK(perfect.intermediate("f4") == doctest::Approx(1.0));

  const MeasureValue bridge = hidecs2_rpg(bridged_triangles(), halves6());
  CHECK(bridge.value == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(bridge.intermediate("l_ab") == 1);
  CHECK(bridge.intermediate("m_ab") == 9);
}

TEST_CASE("multiway coupling score") {
  CHECK(hidecs3_bldup(k4(), Partition({0, 1, 2, 3}, {{0, 1}, {2, 3}})).value ==
        doctest::Approx(0.0));
  CHECK(hidecs3_bldup(k4(), Partition::unit({0, 1, 2, 3})).degenerate);

  // the sign always agrees with the multiway score, and the magnitudes
  // satisfy |INFO2| = (R / nsq1)^2; both routes computed independently
  SplitMix64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph(12, rng);
    const Partition p = random_bipartition(12, rng);
    const double info2 = hidecs3_bldup(g, p).value;
    const double notes = hidecs2_notes(g, p).value;
    const double nsq1 = 12 * 11 / 2.0;
    if (std::abs(notes) > 1e-9) {
      CHECK(std::signbit(info2) == std::signbit(notes));
      CHECK(std::abs(info2) ==
            doctest::Approx((notes / nsq1) * (notes / nsq1)).epsilon(1e-9));
    }
  }
}

TEST_CASE("cohesion score") {
  SplitMix64 rng(23);
  for (int m = 2; m <= 50; ++m) {
    const Graph g = random_graph(m, rng);
    std::vector<Vertex> universe;
    for (int v = 0; v < m; ++v) universe.push_back(v);
    CHECK(hidecs3_stabl(g, Partition::unit(universe)).value ==
          doctest::Approx(-2.0 * m).epsilon(1e-12));
  }

  const MeasureValue triangles = hidecs3_stabl(two_triangles(), halves6());
  CHECK(triangles.value == doctest::Approx(4096.0 / 7.0).epsilon(1e-12));
  CHECK(triangles.intermediate("nom") == doctest::Approx(8.0));
  CHECK(triangles.intermediate("denom") == doctest::Approx(7.0 / 64.0));

  const MeasureValue whole = hidecs3_stabl(k4(), Partition::single_cell({0, 1, 2, 3}));
  CHECK(whole.intermediate("nom") == doctest::Approx(-0.5));
  CHECK(whole.value < 0);
}

TEST_CASE("modularity") {
  const Graph g = two_triangles();
  CHECK(newman_q(g, Partition::single_cell({0, 1, 2, 3, 4, 5})).value ==
        doctest::Approx(0.0));
  CHECK(newman_q(g, halves6()).value == doctest::Approx(0.5));

  const Graph empty(4, {});
  const MeasureValue none = newman_q(empty, Partition::unit({0, 1, 2, 3}));
  CHECK(none.degenerate);
  CHECK(none.value == 0.0);

  SplitMix64 rng(24);
  for (int i = 0; i < 200; ++i) {
    const Graph h = random_graph(3 + rng.next_below(12), rng);
    const Partition p = random_bipartition(h.vertex_count(), rng);
    CHECK(newman_q(h, p).value <= 1.0 + 1e-12);
  }
}

TEST_CASE("display rounding") {
  CHECK(round_half_away(-89.595, 2) == doctest::Approx(-89.60));
  CHECK(round_half_away(0.2075, 3) == doctest::Approx(0.208));
  CHECK(format_measure(MeasureId::kH2Decomp, -89.5977) == "-89.60");
  CHECK(format_measure(MeasureId::kNewmanQ, 0.29714) == "0.297");
}

TEST_CASE("intermediate lookup") {
  MeasureValue v;
  v.intermediates = {{"x", 1.5}};
  CHECK(v.intermediate("x") == 1.5);
  CHECK_THROWS_AS(v.intermediate("y"), Error);
}
