#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rsbench {

using json = nlohmann::json;

// Monotonic nanoseconds since the run epoch. One clock per run; wall time is
// kept separately and only for report headers.
using Nanos = std::int64_t;

inline constexpr double kNanosPerSecond = 1e9;

inline double to_seconds(Nanos t) { return static_cast<double>(t) / kNanosPerSecond; }

enum class TaskKind { gsm8k, math500, aime, gpqa };

enum class Visibility { reasoning, visible };

enum class FinishReason { stop, length_budget, timeout, error };

std::string to_string(TaskKind kind);
std::string to_string(Visibility v);
std::string to_string(FinishReason r);
TaskKind task_kind_from_string(const std::string& s);
Visibility visibility_from_string(const std::string& s);
FinishReason finish_reason_from_string(const std::string& s);

// One benchmark question.
struct DatasetRecord {
  std::string id;
  std::string prompt;
  std::string gold_answer;
  TaskKind task_kind = TaskKind::gsm8k;
  std::optional<int> difficulty_tag;            // e.g. MATH level 1-5
  std::vector<std::string> choices;             // gpqa only, exactly 4
};

// One streamed token observation.
struct TokenEvent {
  std::string request_id;
  Nanos t = 0;                                  // non-decreasing per request
  Visibility visibility = Visibility::visible;
  int token_count = 1;                          // >= 1
};

struct RequestTiming {
  Nanos t_send = 0;
  std::optional<Nanos> t_first_token;
  std::optional<Nanos> t_first_visible;
  std::optional<Nanos> t_last_token;
  Nanos t_done = 0;
};

struct RequestMetrics {
  double ttft = 0.0;                            // seconds
  double ttfvt = 0.0;                           // seconds; falls back to e2e
  std::optional<double> tbt;                    // absent with < 2 events
  double e2e = 0.0;                             // seconds
  int output_tokens = 0;
  int reasoning_tokens = 0;
  int visible_tokens = 0;
  FinishReason finish_reason = FinishReason::stop;
};

// Full lifecycle of one request. `events` is the persisted per-request token
// log; recomputing metrics from it reproduces `metrics` bit for bit.
struct RequestResult {
  std::string record_id;
  std::string run_id;
  RequestTiming timing;
  RequestMetrics metrics;
  std::string raw_visible_text;
  std::string raw_reasoning_text;
  std::optional<std::string> extracted_answer;
  std::optional<bool> correct;                  // present iff graded
  std::vector<TokenEvent> events;
};

struct PercentileRow {
  double p50 = 0.0;
  double p90 = 0.0;
  double p99 = 0.0;
  double mean = 0.0;
};

struct SummaryReport {
  std::optional<double> accuracy;               // correct / graded, absent if nothing graded
  double running_time = 0.0;                    // wall seconds
  double tps = 0.0;                             // total_output_tokens / running_time
  double rps = 0.0;                             // completed / running_time
  std::int64_t total_output_tokens = 0;
  std::optional<PercentileRow> ttft;
  std::optional<PercentileRow> ttfvt;
  std::optional<PercentileRow> tbt;
  std::optional<PercentileRow> e2e;
  std::map<std::string, int> finish_reason_counts;
  std::optional<double> init_latency;           // seconds
  int completed_count = 0;
  int graded_count = 0;
  int correct_count = 0;
};

json to_json(const TokenEvent& e);
json to_json(const RequestTiming& t);
json to_json(const RequestMetrics& m);
json to_json(const RequestResult& r);
json to_json(const SummaryReport& s);

TokenEvent token_event_from_json(const json& j, const std::string& request_id);
RequestTiming timing_from_json(const json& j);
RequestMetrics metrics_from_json(const json& j);
RequestResult request_result_from_json(const json& j);

}  // namespace rsbench
