#pragma once

// Shared test fixtures: captured judge-model output used to pin the verdict
// parser, and a frozen per-scenario benchmark summary whose derived columns
// (count-weighted overall, z-values, correlation, mode deltas) must be
// reproducible from its raw columns by the metrics code.

#include <cstdint>
#include <vector>

namespace fixtures {

// Verbatim reply of a production judge model grading an arithmetic-comparison
// answer that reached the wrong conclusion. Expected parse: overall 1, one
// strength sub-score [3], five weakness sub-scores [1, 1, 1, 2, 1]; the
// closing paragraph repeats the overall score in brackets and must attach to
// nothing.
inline const char* kJudgeReplyLowMark =
    "I believe the overall rating for this reply is [[1]] for the following reasons:\n"
    "Advantages of the current reply:\n"
    "1. Clarity: The explanation process is relatively clear, comparing integer parts and "
    "decimal parts in steps, which is easy to understand. [[3]]\n"
    "\n"
    "Shortcomings of the current reply:\n"
    "1. Accuracy: The final conclusion of the reply is incorrect; in fact, 9.9 is greater than "
    "9.11, not as stated in the reply that \"9.11 is greater than 9.9.\" [[1]]\n"
    "2. Efficiency: Although a comparison process is provided, the efficiency becomes "
    "meaningless after presenting an incorrect conclusion. [[1]]\n"
    "3. Instruction Compliance: It fails to correctly follow the command to provide an accurate "
    "answer and does not provide the correct comparison result as per the user’s request. "
    "[[1]]\n"
    "4. Method Diversity: It does not offer different comparison methods, such as direct "
    "numerical comparison, and only uses a part-by-part comparison approach. [[2]]\n"
    "5. Answer Structure: Although the structure is clear, comparing integer parts first and "
    "then decimal parts, this structure has not effectively served to present the correct "
    "answer due to the incorrect final answer. [[1]]\n"
    "\n"
    "Considering the above ratings, due to the core issue of accuracy, even though other "
    "aspects are passable, the overall rating remains at the lowest tier [[1]].";

// Second captured reply, from a different judge model on the same answer,
// using the other common header phrasings. Expected parse: overall 3,
// strengths [3, 4, 4], weaknesses [1, 2, 2].
inline const char* kJudgeReplyMidMark =
    "I believe that the overall rating for this reply is [[3]], for the following reasons.\n"
    "\n"
    "Strengths of the current reply:\n"
    "1. Accuracy: Although the final conclusion is incorrect, the decomposition of numbers "
    "during the problem-solving process is quite clear, showing a comparative thought process. "
    "[[3]]\n"
    "2. Clarity: The steps of the solution are clearly articulated, and the logical sequence "
    "is easy to understand. [[4]]\n"
    "3. Compliance with instructions: It directly answered the user's instruction to compare "
    "the sizes of two numbers. [[4]]\n"
    "\n"
    "Weaknesses of the current reply:\n"
    "1. Accuracy: The final conclusion is erroneous, stating that 9.11 is larger than 9.9 is "
    "incorrect; in reality, 9.9 is less than 9.11. This is a core error and significantly "
    "affects the rating. [[1]]\n"
    "2. Formatting standards: Although no complex mathematical symbols or formulas were used, "
    "the basic comparison symbols should be used correctly. [[2]]\n"
    "3. Answer structure: The structure of the answer, steps, and explanation is fundamentally "
    "reasonable, but the incorrect conclusion impacts the overall effectiveness of the "
    "structure. [[2]]\n"
    "\n"
    "Taking everything into consideration, despite the reply’s acceptable performance in "
    "terms of clarity and following instructions, the core error in accuracy cannot be "
    "overlooked, therefore a rating of 3 is given for the overall evaluation.";

// One row of a frozen benchmark summary: per-scenario item count, agreement
// of single-answer grading, the printed z-value of that agreement column,
// the mean human label, agreement of reference-guided grading, and the
// printed delta (guided minus single).
struct AgreementRow {
  const char* scenario;
  std::int64_t count;
  double agr_single;
  double z;
  double avg_label;
  double agr_guided;
  double delta;
};

// Panel over human-written benchmark items (3,393 items, 8 scenarios).
inline const AgreementRow kNaturalPanelOverall =
    {"All", 3393, 0.559, -0.223, 2.914, 0.618, 0.059};
inline const std::vector<AgreementRow> kNaturalPanelRows = {
    {"close_qa", 1503, 0.484, -0.876, 2.785, 0.576, 0.092},
    {"open_qa", 190, 0.791, 1.799, 3.659, 0.797, 0.006},
    {"math_qa", 555, 0.522, -0.545, 2.444, 0.589, 0.067},
    {"creative_writing", 130, 0.560, -0.214, 2.962, 0.550, -0.010},
    {"info_prof_writing", 242, 0.697, 0.980, 3.311, 0.696, -0.001},
    {"translation", 50, 0.510, -0.650, 2.720, 0.645, 0.135},
    {"reading_extraction", 153, 0.449, -1.181, 3.045, 0.513, 0.064},
    {"role_playing", 570, 0.689, 0.910, 3.255, 0.705, 0.016},
};

// Panel over synthesized benchmark items (4,000 items, all 10 scenarios).
inline const AgreementRow kSyntheticPanelOverall =
    {"All", 4000, 0.582, -0.092, 3.450, 0.584, 0.002};
inline const std::vector<AgreementRow> kSyntheticPanelRows = {
    {"close_qa", 510, 0.548, -0.555, 2.929, 0.561, 0.013},
    {"open_qa", 138, 0.616, 0.371, 3.609, 0.717, 0.101},
    {"math_qa", 716, 0.433, -2.120, 3.500, 0.455, 0.022},
    {"creative_writing", 386, 0.659, 0.957, 3.653, 0.698, 0.039},
    {"info_prof_writing", 204, 0.566, -0.309, 3.152, 0.625, 0.059},
    {"rewriting", 338, 0.538, -0.691, 3.210, 0.558, 0.020},
    {"translation", 284, 0.556, -0.446, 3.451, 0.539, -0.017},
    {"reading_extraction", 574, 0.702, 1.542, 3.645, 0.689, -0.013},
    {"role_playing", 366, 0.653, 0.875, 3.377, 0.590, -0.063},
    {"programming", 484, 0.623, 0.467, 3.837, 0.571, -0.052},
};

}  // namespace fixtures
