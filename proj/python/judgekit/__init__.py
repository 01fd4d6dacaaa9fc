"""Toolkit for building and evaluating LLM judges.

The heavy lifting lives in the compiled extension; this package re-exports
its operations: verdict parsing, prompt construction, agreement metrics, and
the fine-tuning data transforms.
"""

from judgekit._core import (  # noqa: F401
    JudgekitError,
    agr,
    agr_kernel,
    aggregate_normalized,
    apportion,
    balance_records,
    cluster_scenarios,
    data_dir,
    double_pairwise_records,
    ifd_scores,
    jaccard_similarity,
    kmeans,
    label_token_spans,
    mae,
    parse_graded_verdict,
    parse_pairwise_verdict,
    parse_scenario_label,
    pearson,
    random_baseline,
    remap_rating,
    render_judge_prompt,
    retarget_prompt_rating,
    sample_composition,
    scenario_ids,
    select_by_ifd,
    z_values,
)

__version__ = "0.1.0"

__all__ = [
    "JudgekitError",
    "agr",
    "agr_kernel",
    "aggregate_normalized",
    "apportion",
    "balance_records",
    "cluster_scenarios",
    "data_dir",
    "double_pairwise_records",
    "ifd_scores",
    "jaccard_similarity",
    "kmeans",
    "label_token_spans",
    "mae",
    "parse_graded_verdict",
    "parse_pairwise_verdict",
    "parse_scenario_label",
    "pearson",
    "random_baseline",
    "remap_rating",
    "render_judge_prompt",
    "retarget_prompt_rating",
    "sample_composition",
    "scenario_ids",
    "select_by_ifd",
    "z_values",
    "__version__",
]
