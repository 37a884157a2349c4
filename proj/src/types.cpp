#include "rsbench/types.hpp"

#include <stdexcept>

namespace rsbench {

std::string to_string(TaskKind kind) {
  switch (kind) {
    case TaskKind::gsm8k: return "gsm8k";
    case TaskKind::math500: return "math500";
    case TaskKind::aime: return "aime";
    case TaskKind::gpqa: return "gpqa";
  }
  return "gsm8k";
}

std::string to_string(Visibility v) {
  return v == Visibility::reasoning ? "reasoning" : "visible";
}

std::string to_string(FinishReason r) {
  switch (r) {
    case FinishReason::stop: return "stop";
    case FinishReason::length_budget: return "length_budget";
    case FinishReason::timeout: return "timeout";
    case FinishReason::error: return "error";
  }
  return "error";
}

TaskKind task_kind_from_string(const std::string& s) {
  if (s == "gsm8k") return TaskKind::gsm8k;
  if (s == "math500") return TaskKind::math500;
  if (s == "aime") return TaskKind::aime;
  if (s == "gpqa") return TaskKind::gpqa;
  throw std::invalid_argument("unknown task kind: " + s);
}

Visibility visibility_from_string(const std::string& s) {
  if (s == "reasoning") return Visibility::reasoning;
  if (s == "visible") return Visibility::visible;
  throw std::invalid_argument("unknown visibility: " + s);
}

FinishReason finish_reason_from_string(const std::string& s) {
  if (s == "stop") return FinishReason::stop;
  if (s == "length_budget") return FinishReason::length_budget;
  if (s == "timeout") return FinishReason::timeout;
  if (s == "error") return FinishReason::error;
  throw std::invalid_argument("unknown finish reason: " + s);
}

json to_json(const TokenEvent& e) {
  return json{{"t", e.t},
              {"visibility", to_string(e.visibility)},
              {"token_count", e.token_count}};
}

json to_json(const RequestTiming& t) {
  json j{{"t_send", t.t_send}, {"t_done", t.t_done}};
  if (t.t_first_token) j["t_first_token"] = *t.t_first_token;
  if (t.t_first_visible) j["t_first_visible"] = *t.t_first_visible;
  if (t.t_last_token) j["t_last_token"] = *t.t_last_token;
  return j;
}

json to_json(const RequestMetrics& m) {
  json j{{"ttft", m.ttft},
         {"ttfvt", m.ttfvt},
         {"e2e", m.e2e},
         {"output_tokens", m.output_tokens},
         {"reasoning_tokens", m.reasoning_tokens},
         {"visible_tokens", m.visible_tokens},
         {"finish_reason", to_string(m.finish_reason)}};
  if (m.tbt) j["tbt"] = *m.tbt;
  return j;
}

json to_json(const RequestResult& r) {
  json j{{"record_id", r.record_id},
         {"run_id", r.run_id},
         {"timing", to_json(r.timing)},
         {"metrics", to_json(r.metrics)},
         {"raw_visible_text", r.raw_visible_text},
         {"raw_reasoning_text", r.raw_reasoning_text}};
  if (r.extracted_answer) j["extracted_answer"] = *r.extracted_answer;
  if (r.correct) j["correct"] = *r.correct;
  json events = json::array();
  for (const auto& e : r.events) events.push_back(to_json(e));
  j["events"] = std::move(events);
  return j;
}

static json to_json(const PercentileRow& row) {
  return json{{"p50", row.p50}, {"p90", row.p90}, {"p99", row.p99}, {"mean", row.mean}};
}

json to_json(const SummaryReport& s) {
  json j{{"running_time", s.running_time},
         {"tps", s.tps},
         {"rps", s.rps},
         {"total_output_tokens", s.total_output_tokens},
         {"finish_reason_counts", s.finish_reason_counts},
         {"completed_count", s.completed_count},
         {"graded_count", s.graded_count},
         {"correct_count", s.correct_count}};
  if (s.accuracy) j["accuracy"] = *s.accuracy;
  if (s.init_latency) j["init_latency"] = *s.init_latency;
  if (s.ttft) j["ttft"] = to_json(*s.ttft);
  if (s.ttfvt) j["ttfvt"] = to_json(*s.ttfvt);
  if (s.tbt) j["tbt"] = to_json(*s.tbt);
  if (s.e2e) j["e2e"] = to_json(*s.e2e);
  return j;
}

TokenEvent token_event_from_json(const json& j, const std::string& request_id) {
  TokenEvent e;
  e.request_id = request_id;
  e.t = j.at("t").get<Nanos>();
  e.visibility = visibility_from_string(j.at("visibility").get<std::string>());
  e.token_count = j.at("token_count").get<int>();
  return e;
}

RequestTiming timing_from_json(const json& j) {
  RequestTiming t;
  t.t_send = j.at("t_send").get<Nanos>();
  t.t_done = j.at("t_done").get<Nanos>();
  if (j.contains("t_first_token")) t.t_first_token = j.at("t_first_token").get<Nanos>();
  if (j.contains("t_first_visible")) t.t_first_visible = j.at("t_first_visible").get<Nanos>();
  if (j.contains("t_last_token")) t.t_last_token = j.at("t_last_token").get<Nanos>();
  return t;
}

RequestMetrics metrics_from_json(const json& j) {
  RequestMetrics m;
  m.ttft = j.at("ttft").get<double>();
  m.ttfvt = j.at("ttfvt").get<double>();
  m.e2e = j.at("e2e").get<double>();
  if (j.contains("tbt")) m.tbt = j.at("tbt").get<double>();
  m.output_tokens = j.at("output_tokens").get<int>();
  m.reasoning_tokens = j.at("reasoning_tokens").get<int>();
  m.visible_tokens = j.at("visible_tokens").get<int>();
  m.finish_reason = finish_reason_from_string(j.at("finish_reason").get<std::string>());
  return m;
}

RequestResult request_result_from_json(const json& j) {
  RequestResult r;
  r.record_id = j.at("record_id").get<std::string>();
  r.run_id = j.at("run_id").get<std::string>();
  r.timing = timing_from_json(j.at("timing"));
  r.metrics = metrics_from_json(j.at("metrics"));
  r.raw_visible_text = j.at("raw_visible_text").get<std::string>();
  r.raw_reasoning_text = j.at("raw_reasoning_text").get<std::string>();
  if (j.contains("extracted_answer")) r.extracted_answer = j.at("extracted_answer").get<std::string>();
  if (j.contains("correct")) r.correct = j.at("correct").get<bool>();
  if (j.contains("events")) {
    for (const auto& ej : j.at("events")) {
      r.events.push_back(token_event_from_json(ej, r.record_id));
    }
  }
  return r;
}

}  // namespace rsbench
