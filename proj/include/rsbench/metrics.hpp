#pragma once

#include <span>
#include <vector>

#include "rsbench/types.hpp"

namespace rsbench {

// Per-request metrics from the token event stream.
//
// ttft  = first event t - t_send
// ttfvt = first visible event t - t_send; falls back to e2e when the request
//         never produced a visible token (finish_reason says why)
// tbt   = arithmetic mean of consecutive event gaps, each chunk counted once
//         regardless of token_count; absent with fewer than 2 events
// e2e   = t_done - t_send
//
// Throws std::invalid_argument on an empty event list with finish_reason
// stop, or on timestamps that go backwards.
RequestMetrics compute_request_metrics(std::span<const TokenEvent> events,
                                       const RequestTiming& timing,
                                       int token_budget,
                                       FinishReason finish_reason);

// Nearest-rank percentile: element at index ceil(q * n) - 1 of the ascending
// sort. values non-empty, 0 < q <= 1; throws std::invalid_argument otherwise.
double percentile(std::vector<double> values, double q);

// Run-level summary over a wall window (seconds). Results with
// finish_reason=error are excluded from the latency percentiles but counted
// in the totals. Permutation-invariant in the input list.
SummaryReport aggregate(const std::vector<RequestResult>& results, double window);

}  // namespace rsbench
