"""Plain-language statement of the paradox with the computed numbers filled in."""

from __future__ import annotations

from hardy_analysis.hardy.analysis import strong_comparison, weak_value_table
from hardy_analysis.hardy.scenario import HardyScenario
from hardy_analysis.weakval import postselection_probability
from hardy_core.models import Narrative

NARRATIVE_TEMPLATE = """\
Hardy's paradox ({convention}, inner arm = {inner}, outer arm = {outer})

Two photons traverse overlapping interferometers. When both sit in the inner
arms they annihilate, so the pre-selected state has no {inner}{inner} term.
The post-selection ({post_selection} ports) succeeds with probability {postselection:.6f}.

Classical reasoning on that post-selected ensemble:
  - photon 2's dark port fired, so photon 1 must have been in the inner arm;
  - photon 1's dark port fired, so photon 2 must have been in the inner arm;
  - yet the pair was never in the inner arms together.

Weak values resolve the contradiction (rows photon 1, columns photon 2):
  <P_{inner}{inner}>_w = {inner_inner:g}   <P_{inner}{outer}>_w = {inner_outer:g}
  <P_{outer}{inner}>_w = {outer_inner:g}   <P_{outer}{outer}>_w = {outer_outer:g}
  single photons: <P_{inner}i>_w = {marginal_inner:g}, <P_{outer}i>_w = {marginal_outer:g}

Each photon is in the inner arm (weak value {marginal_inner:g}), the pair is never
there together (weak value {inner_inner:g}), and the outer-outer pair carries
weak value {outer_outer:g}: a negative number of photon pairs.

Strong detectors collapse each photon instead. Conditioned on the same
post-selection (probability {strong_postselection:.6f}) they report
  P({inner}{inner}) = {strong_inner_inner:.6f}   P({inner}{outer}) = {strong_inner_outer:.6f}
  P({outer}{inner}) = {strong_outer_inner:.6f}   P({outer}{outer}) = {strong_outer_outer:.6f}
which are the strong measurement results, not the weak ones.
"""


def ifm_narrative(s: HardyScenario) -> Narrative:
    """Paradox statement for the scenario; only substitutes computed values."""
    table = weak_value_table(s)
    strong = strong_comparison(s)
    (ii, io), (oi, oo) = table.joint
    (sii, sio), (soi, soo) = strong.strong_conditionals
    values: dict[str, float | str | list[float] | list[list[float]]] = {
        "convention": s.convention.value,
        "inner": s.inner_label,
        "outer": s.outer_label,
        "post_selection": s.post_selection.value,
        "postselection": postselection_probability(s.ensemble),
        "inner_inner": ii,
        "inner_outer": io,
        "outer_inner": oi,
        "outer_outer": oo,
        "marginal_inner": table.marginals_1[0],
        "marginal_outer": table.marginals_1[1],
        "strong_postselection": strong.postselection_prob_strong,
        "strong_inner_inner": sii,
        "strong_inner_outer": sio,
        "strong_outer_inner": soi,
        "strong_outer_outer": soo,
    }
    text = NARRATIVE_TEMPLATE.format(**values)
    values["joint"] = table.joint
    values["strong_conditionals"] = strong.strong_conditionals
    return Narrative(text=text, values=values)
