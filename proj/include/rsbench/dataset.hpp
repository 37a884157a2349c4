#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsbench/types.hpp"

namespace rsbench {

// Loads a JSON-lines dataset. Each line carries id, prompt (or question),
// answer, and for gpqa a 4-element choices array. gpqa choice order is
// shuffled deterministically by seed, with the gold letter remapped to the
// permuted position. Throws std::runtime_error naming the offending line.
std::vector<DatasetRecord> load_dataset(const std::string& path, TaskKind kind,
                                        std::uint64_t seed);

// Single-record validation, shared by the loader and tests.
void validate_record(const DatasetRecord& record);

}  // namespace rsbench
