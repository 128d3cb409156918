// Acceptance suite: every published-value criterion, asserted at its stated
// tolerance, one printed line per check. The full report comes from the
// same registry the `hidecs replicate` command uses, under a fixed seed.
//
// Two checks are implemented exactly as specified and are expected to fail;
// docs/replication-notes.md derives why the published values cannot be met:
//   - estimate-small-variance (the published 2.60 presumes split sampling
//     over one fixed 9-vertex graph, whose instance was never published)
//   - search-c-leaf-window (this search finds strictly better leaf
//     partitions than the published range's floor)

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <mutex>

#include "hidecs/replicate.hpp"

using namespace hidecs;

namespace {

constexpr std::uint64_t kAcceptanceSeed = 20230215;

const ReplicationReport& the_report() {
  static const ReplicationReport report =
      replicate_suite(ReplicationScope::kAll, kAcceptanceSeed);
  return report;
}

void require_pass(const std::string& id) {
  const CheckResult& c = the_report().find(id);
  const char* tag = c.status == CheckStatus::kPass   ? "PASS"
                    : c.status == CheckStatus::kFail ? "FAIL"
                                                     : "SKIP";
  std::printf("[%s] %-34s computed=%s target=%s\n", tag, c.id.c_str(),
              c.computed.empty() ? "-" : c.computed.c_str(), c.target.c_str());
  CHECK_MESSAGE(c.status == CheckStatus::kPass,
                id, ": computed ", c.computed, " vs target ", c.target,
                c.note.empty() ? "" : (" -- " + c.note));
}

void require_skip(const std::string& id) {
  const CheckResult& c = the_report().find(id);
  std::printf("[%s] %-34s %s\n",
              c.status == CheckStatus::kSkip ? "SKIP" : "FAIL", c.id.c_str(),
              c.note.c_str());
  CHECK_MESSAGE(c.status == CheckStatus::kSkip, id,
                " should be skipped without external data");
}

}  // namespace

TEST_CASE("criterion-01 data audit") {
  require_pass("audit-iv-one-way");
  require_pass("audit-iv-one-way-vertex-33");
  require_pass("audit-iv-links");
}

TEST_CASE("criterion-02 reference split of C") { require_pass("decomp-c1-c2"); }

TEST_CASE("criterion-03 balanced union options") {
  require_pass("option-ab-cd");
  require_pass("option-ac-bd");
  require_pass("option-ad-bc");
  require_pass("option-ordering");
}

TEST_CASE("criterion-04 pairwise unions") {
  require_pass("pairwise-a-b");
  require_pass("pairwise-a-c");
  require_pass("pairwise-a-d");
  require_pass("pairwise-b-c");
  require_pass("pairwise-b-d");
  require_pass("pairwise-c-d");
}

TEST_CASE("criterion-05 multiway scores of the reference levels") {
  require_pass("notes-ca-pi1");
  require_pass("notes-ca-pi2");
  require_pass("notes-ca-pi4");
}

TEST_CASE("criterion-06 multiway scores of the embedded 16-set runs") {
  require_pass("notes-rpg1-pi4");
  require_pass("notes-rpg2-pi4");
}

TEST_CASE("criterion-07 cohesion and coupling table") {
  require_pass("matrix-a1-cohesion");
  require_pass("matrix-a2-cohesion");
  require_pass("matrix-b3-cohesion");
  require_pass("matrix-a1-a2-coupling");
  require_pass("matrix-d2-d3-coupling");
  require_pass("matrix-full-12x12");
}

TEST_CASE("criterion-08 modularity of the reference partitions") {
  require_pass("q-newman-4");
  require_pass("q-ca");
  require_pass("q-rpg1");
  require_pass("q-rpg2");
}

TEST_CASE("criterion-09 sampling estimators") {
  require_pass("estimate-denominator-product");
  require_pass("estimate-small-mean");
  require_pass("estimate-small-variance");  // expected red, see header note
  require_pass("estimate-iv-variance");
}

TEST_CASE("criterion-10 seeded decomposition of C") {
  require_pass("search-c-top");
  require_pass("search-c-distinct-trees");
  require_pass("search-c-leaf-window");  // expected red, see header note
}

TEST_CASE("criterion-11 property and oracle suites") {
  require_pass("property-order-preservation");
  require_pass("property-two-cell-equality");
  require_pass("property-proportionality");
  require_pass("property-stabl-unit");
  require_pass("property-q-identities");
  require_pass("property-renumber-invariance");
  require_pass("property-rpg-bounds");
  require_pass("oracle-maximal-cliques");
  require_pass("oracle-best-bipartition");
  require_pass("oracle-bisect-latis-500");
}

TEST_CASE("criterion-12 lookahead demonstration") {
  require_pass("trap-greedy-side");
  require_pass("trap-cohesion-cluster");
}

TEST_CASE("criterion-13 settling-time ratio") {
  require_pass("homeostasis-ratio");
}

TEST_CASE("criterion-14 drawn-only instances are skipped without files") {
  require_skip("external-h3graph-stabl");
  require_skip("external-h3graph-q");
  require_skip("external-graph-a");
}
