#pragma once

#include <vector>

#include "judgekit/forge/sft.hpp"

namespace judgekit::forge {

// The order-swapped twin of a pairwise record: response blocks exchanged in
// the prompt, "Response 1"/"Response 2" labels exchanged in the target,
// bracketed score pairs swapped, winner mirrored, spans recomputed. Applying
// it twice returns the original record (it is an involution); a tie record's
// twin differs only in response order. NotPairwise for other modes.
SftRecord mirror_pairwise_record(const SftRecord& record);

// Every record followed by its mirrored twin; output size is exactly twice
// the input size.
std::vector<SftRecord> double_pairwise(const std::vector<SftRecord>& records);

}  // namespace judgekit::forge
