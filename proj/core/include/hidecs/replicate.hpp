#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hidecs {

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string id;
  std::string target;    // human-readable expected value with tolerance
  std::string computed;
  CheckStatus status = CheckStatus::kSkip;
  bool deterministic = true;
  std::string note;
};

struct ReplicationReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;

  int passed() const;
  int failed() const;
  int skipped() const;
  int deterministic_failures() const;
  // nonzero iff a deterministic check failed
  int exit_status() const { return deterministic_failures() > 0 ? 1 : 0; }
  std::string to_text() const;
  const CheckResult& find(const std::string& id) const;
};

enum class ReplicationScope { kDeterministic, kAll };

// Optional user-supplied transcriptions of instances that are published
// only as drawings; without them the corresponding checks are skipped.
struct ExternalData {
  std::optional<std::string> hidecs3_graph_text;  // interaction file contents
  std::optional<std::string> graph_a_text;
};

ReplicationReport replicate_suite(ReplicationScope scope, std::uint64_t seed,
                                  const ExternalData& ext = {});

// Every check id the suite can emit, in report order.
std::vector<std::string> replication_check_ids();

}  // namespace hidecs
