"""Exact-match precision/recall/F1, micro-averaged over the corpus.

Predictions and gold are keyed by sentence id. Subtask scores project
triplets down to their aspect spans (ATE), opinion spans (OTE) or
(aspect, opinion) pairs (AOPE) before matching. Setting breakdowns filter
both sides symmetrically by term length, so a perfect prediction scores
1.0 under every non-empty setting.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import Triplet


class Task(enum.Enum):
    ASTE = "aste"
    ATE = "ate"
    OTE = "ote"
    AOPE = "aope"


class Setting(enum.Enum):
    ALL = "all"
    SINGLE = "single"
    MULTI = "multi"
    MULTI_ASPECT = "multi_aspect"
    MULTI_OPINION = "multi_opinion"


@dataclass(frozen=True)
class Score:
    true_positives: int
    predicted: int
    gold: int
    precision: float
    recall: float
    f1: float

    @classmethod
    def from_counts(cls, tp: int, predicted: int, gold: int) -> "Score":
        p = tp / predicted if predicted > 0 else 0.0
        r = tp / gold if gold > 0 else 0.0
        f1 = 2 * p * r / (p + r) if p + r > 0 else 0.0
        return cls(tp, predicted, gold, p, r, f1)


PerSentence = Mapping[str, Iterable[Triplet]]


def _check_ids(pred: PerSentence, gold: PerSentence) -> None:
    missing = sorted(set(gold) - set(pred))
    extra = sorted(set(pred) - set(gold))
    if missing or extra:
        raise ValueError(
            "sentence id sets differ - "
            f"only in gold: {missing or '[]'}; only in pred: {extra or '[]'}"
        )


def _micro(pred: PerSentence, gold: PerSentence, project) -> Score:
    _check_ids(pred, gold)
    tp = n_pred = n_gold = 0
    for sid in gold:
        p = project(set(pred[sid]))
        g = project(set(gold[sid]))
        tp += len(p & g)
        n_pred += len(p)
        n_gold += len(g)
    return Score.from_counts(tp, n_pred, n_gold)


def score_triplets(pred: PerSentence, gold: PerSentence) -> Score:
    """Exact match over (aspect, opinion, sentiment)."""
    return _micro(pred, gold, lambda ts: ts)


def score_subtask(pred: PerSentence, gold: PerSentence, task: Task) -> Score:
    """Score after projecting triplets down to the subtask's unit."""
    if task is Task.ASTE:
        return score_triplets(pred, gold)
    if task is Task.ATE:
        return _micro(pred, gold, lambda ts: {t.aspect for t in ts})
    if task is Task.OTE:
        return _micro(pred, gold, lambda ts: {t.opinion for t in ts})
    return _micro(pred, gold, lambda ts: {(t.aspect, t.opinion) for t in ts})


def setting_matches(t: Triplet, setting: Setting) -> bool:
    if setting is Setting.ALL:
        return True
    if setting is Setting.SINGLE:
        return t.aspect.length == 1 and t.opinion.length == 1
    if setting is Setting.MULTI:
        return t.aspect.length > 1 or t.opinion.length > 1
    if setting is Setting.MULTI_ASPECT:
        return t.aspect.length > 1
    return t.opinion.length > 1


def score_by_setting(pred: PerSentence, gold: PerSentence, setting: Setting) -> Score:
    """Filter both sides to triplets matching the setting, then micro-score."""
    return _micro(
        pred, gold, lambda ts: {t for t in ts if setting_matches(t, setting)}
    )


def format_score_report(scores: dict[str, Score], fmt: str = "text") -> str:
    """Render named scores as aligned columns or as a key=value block."""
    if fmt == "kv":
        lines = []
        for name, s in scores.items():
            lines.append(f"{name}.precision={s.precision:.4f}")
            lines.append(f"{name}.recall={s.recall:.4f}")
            lines.append(f"{name}.f1={s.f1:.4f}")
            lines.append(f"{name}.tp={s.true_positives}")
            lines.append(f"{name}.pred={s.predicted}")
            lines.append(f"{name}.gold={s.gold}")
        return "\n".join(lines) + "\n"
    width = max(len(name) for name in scores) if scores else 4
    header = f"{'task'.ljust(width)}  {'P':>7} {'R':>7} {'F1':>7} {'TP':>6} {'pred':>6} {'gold':>6}"
    lines = [header]
    for name, s in scores.items():
        lines.append(
            f"{name.ljust(width)}  {s.precision:>7.4f} {s.recall:>7.4f} {s.f1:>7.4f}"
            f" {s.true_positives:>6} {s.predicted:>6} {s.gold:>6}"
        )
    return "\n".join(lines) + "\n"
