"""Hardy's paradox: scenario, weak-value table, A12 critique and strong contrast."""

from hardy_analysis.hardy.analysis import (
    a12_analysis,
    strong_comparison,
    strong_contrast,
    weak_value_table,
)
from hardy_analysis.hardy.narrative import ifm_narrative
from hardy_analysis.hardy.scenario import (
    Convention,
    HardyScenario,
    PostSelection,
    arm_labels,
    build_scenario,
    hardy_post_state,
    hardy_pre_state,
)

__all__ = [
    "Convention",
    "HardyScenario",
    "PostSelection",
    "a12_analysis",
    "arm_labels",
    "build_scenario",
    "hardy_post_state",
    "hardy_pre_state",
    "ifm_narrative",
    "strong_comparison",
    "strong_contrast",
    "weak_value_table",
]
