#include "rsbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsbench {

RequestMetrics compute_request_metrics(std::span<const TokenEvent> events,
                                       const RequestTiming& timing,
                                       int token_budget,
                                       FinishReason finish_reason) {
  RequestMetrics m;
  m.finish_reason = finish_reason;
  m.e2e = to_seconds(timing.t_done - timing.t_send);

  if (events.empty()) {
    if (finish_reason == FinishReason::stop) {
      throw std::invalid_argument(
          "compute_request_metrics: empty event list with finish_reason=stop");
    }
    // Nothing was ever streamed; both first-token latencies collapse to e2e.
    m.ttft = m.e2e;
    m.ttfvt = m.e2e;
    return m;
  }

  Nanos prev = events.front().t;
  Nanos first_visible = -1;
  for (const auto& e : events) {
    if (e.t < prev) {
      throw std::invalid_argument("compute_request_metrics: unordered timestamps");
    }
    prev = e.t;
    if (e.visibility == Visibility::visible) {
      if (first_visible < 0) first_visible = e.t;
      m.visible_tokens += e.token_count;
    } else {
      m.reasoning_tokens += e.token_count;
    }
  }
  m.output_tokens = m.reasoning_tokens + m.visible_tokens;
  (void)token_budget;

  m.ttft = to_seconds(events.front().t - timing.t_send);
  m.ttfvt = first_visible >= 0 ? to_seconds(first_visible - timing.t_send) : m.e2e;
  if (events.size() >= 2) {
    // Consecutive gaps telescope, so the mean gap is exactly the span over n-1.
    Nanos span = events.back().t - events.front().t;
    m.tbt = to_seconds(span) / static_cast<double>(events.size() - 1);
  }
  return m;
}

double percentile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("percentile: empty value list");
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("percentile: q must be in (0,1]");
  std::sort(values.begin(), values.end());
  auto rank = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(values.size())));
  if (rank == 0) rank = 1;
  return values[rank - 1];
}

namespace {

PercentileRow percentile_row(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  auto at = [&](double q) {
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
    if (rank == 0) rank = 1;
    return values[rank - 1];
  };
  PercentileRow row;
  row.p50 = at(0.50);
  row.p90 = at(0.90);
  row.p99 = at(0.99);
  double sum = 0.0;
  for (double v : values) sum += v;  // sorted, so the sum is order-independent
  row.mean = sum / static_cast<double>(values.size());
  return row;
}

}  // namespace

SummaryReport aggregate(const std::vector<RequestResult>& results, double window) {
  if (window <= 0.0) throw std::invalid_argument("aggregate: window must be positive");
  if (results.empty()) throw std::invalid_argument("aggregate: no results");

  SummaryReport s;
  s.running_time = window;

  std::vector<double> ttft, ttfvt, tbt, e2e;
  for (const auto& r : results) {
    const auto& m = r.metrics;
    s.total_output_tokens += m.output_tokens;
    s.finish_reason_counts[to_string(m.finish_reason)] += 1;
    if (m.finish_reason == FinishReason::stop ||
        m.finish_reason == FinishReason::length_budget) {
      s.completed_count += 1;
    }
    if (r.correct) {
      s.graded_count += 1;
      if (*r.correct) s.correct_count += 1;
    }
    if (m.finish_reason == FinishReason::error) continue;
    ttft.push_back(m.ttft);
    ttfvt.push_back(m.ttfvt);
    e2e.push_back(m.e2e);
    if (m.tbt) tbt.push_back(*m.tbt);
  }

  s.tps = static_cast<double>(s.total_output_tokens) / window;
  s.rps = static_cast<double>(s.completed_count) / window;
  if (s.graded_count > 0) {
    s.accuracy = static_cast<double>(s.correct_count) / static_cast<double>(s.graded_count);
  }
  if (!ttft.empty()) s.ttft = percentile_row(std::move(ttft));
  if (!ttfvt.empty()) s.ttfvt = percentile_row(std::move(ttfvt));
  if (!tbt.empty()) s.tbt = percentile_row(std::move(tbt));
  if (!e2e.empty()) s.e2e = percentile_row(std::move(e2e));
  return s;
}

}  // namespace rsbench
