import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import MENU_GOLD, gold_sets

from spantag.core import Sentiment, Span, Triplet
from spantag.fixtures import fixture_split
from spantag.metrics import (
    Score,
    Setting,
    Task,
    format_score_report,
    score_by_setting,
    score_subtask,
    score_triplets,
    setting_matches,
)


def gold_map():
    return {sid: set(ts) for sid, ts in fixture_split().gold_by_sentence.items()}


def test_identity_scores_one():
    gold = gold_map()
    score = score_triplets(gold, gold)
    assert (score.precision, score.recall, score.f1) == (1.0, 1.0, 1.0)
    assert score.true_positives == score.gold == 7


def test_empty_pred_scores_zero():
    gold = gold_map()
    empty = {sid: set() for sid in gold}
    score = score_triplets(empty, gold)
    assert (score.precision, score.recall, score.f1) == (0.0, 0.0, 0.0)


def test_both_empty_is_zero_by_convention():
    score = score_triplets({"s0": set()}, {"s0": set()})
    assert (score.precision, score.recall, score.f1) == (0.0, 0.0, 0.0)
    assert (score.true_positives, score.predicted, score.gold) == (0, 0, 0)


def test_half_right():
    t1 = Triplet(Span(0, 0), Span(1, 1), Sentiment.POS)
    t2 = Triplet(Span(2, 2), Span(3, 3), Sentiment.NEG)
    t3 = Triplet(Span(4, 4), Span(5, 5), Sentiment.NEU)
    score = score_triplets({"s0": {t1, t2}}, {"s0": {t1, t3}})
    assert (score.precision, score.recall, score.f1) == (0.5, 0.5, 0.5)


def test_mismatched_ids_rejected():
    with pytest.raises(ValueError, match="s1"):
        score_triplets({"s0": set()}, {"s0": set(), "s1": set()})
    with pytest.raises(ValueError, match="s9"):
        score_triplets({"s0": set(), "s9": set()}, {"s0": set()})


def test_subtask_projections_on_menu():
    gold = {"s0": set(MENU_GOLD)}
    aspects = {t.aspect for t in MENU_GOLD}
    opinions = {t.opinion for t in MENU_GOLD}
    assert aspects == {Span(1, 1), Span(7, 7)}
    assert opinions == {Span(3, 3), Span(6, 6), Span(6, 7)}
    assert score_subtask(gold, gold, Task.ATE).gold == 2
    assert score_subtask(gold, gold, Task.OTE).gold == 3
    assert score_subtask(gold, gold, Task.AOPE).gold == 3
    for task in Task:
        assert score_subtask(gold, gold, task).f1 == 1.0


def test_wrong_sentiment_counts_for_aope_not_aste():
    gold = {"s0": {Triplet(Span(0, 0), Span(1, 1), Sentiment.POS)}}
    pred = {"s0": {Triplet(Span(0, 0), Span(1, 1), Sentiment.NEG)}}
    assert score_triplets(pred, gold).true_positives == 0
    assert score_subtask(pred, gold, Task.AOPE).true_positives == 1
    assert score_subtask(pred, gold, Task.ATE).true_positives == 1


def test_setting_predicates():
    single = Triplet(Span(1, 1), Span(3, 3), Sentiment.POS)
    multi_o = Triplet(Span(1, 1), Span(6, 7), Sentiment.POS)
    multi_a = Triplet(Span(1, 2), Span(4, 4), Sentiment.POS)
    assert setting_matches(single, Setting.SINGLE)
    assert not setting_matches(single, Setting.MULTI)
    assert setting_matches(multi_o, Setting.MULTI)
    assert setting_matches(multi_o, Setting.MULTI_OPINION)
    assert not setting_matches(multi_o, Setting.MULTI_ASPECT)
    assert setting_matches(multi_a, Setting.MULTI_ASPECT)
    assert all(setting_matches(t, Setting.ALL) for t in (single, multi_o, multi_a))


def test_setting_filter_on_menu():
    gold = {"s0": set(MENU_GOLD)}
    score = score_by_setting(gold, gold, Setting.SINGLE)
    assert score.gold == 2  # (menu, interesting) and (priced, reasonably)
    assert score.f1 == 1.0
    score = score_by_setting(gold, gold, Setting.MULTI)
    assert score.gold == 1 and score.f1 == 1.0


def test_empty_setting_returns_zero_counts():
    gold = {"s0": {Triplet(Span(0, 0), Span(1, 1), Sentiment.POS)}}
    score = score_by_setting(gold, gold, Setting.MULTI_ASPECT)
    assert (score.true_positives, score.predicted, score.gold) == (0, 0, 0)
    assert score.f1 == 0.0


def test_report_formats():
    gold = gold_map()
    scores = {"aste": score_triplets(gold, gold)}
    kv = format_score_report(scores, "kv")
    assert "aste.f1=1.0000" in kv
    assert "aste.tp=7" in kv
    text = format_score_report(scores, "text")
    assert text.splitlines()[0].startswith("task")
    assert "aste" in text


def random_perturbation(rng):
    gold = gold_map()
    pred = {}
    for sid, triplets in gold.items():
        kept = {t for t in triplets if rng.random() > 0.4}
        mutated = set()
        for t in kept:
            roll = rng.random()
            if roll < 0.25:
                mutated.add(Triplet(t.aspect, t.opinion, rng.choice(list(Sentiment))))
            elif roll < 0.5:
                shifted = Span(t.aspect.start, t.aspect.end + 1)
                try:
                    mutated.add(Triplet(shifted, t.opinion, t.sentiment))
                except ValueError:
                    mutated.add(t)
            else:
                mutated.add(t)
        pred[sid] = mutated
    return pred, gold


def test_aste_tp_never_exceeds_aope_tp():
    rng = random.Random(20240817)
    for _ in range(1000):
        pred, gold = random_perturbation(rng)
        aste = score_triplets(pred, gold)
        aope = score_subtask(pred, gold, Task.AOPE)
        assert aste.true_positives <= aope.true_positives


@st.composite
def pred_gold_pairs(draw):
    spans = [Span(i, j) for i in range(5) for j in range(i, min(i + 2, 5))]

    def triplets():
        out = set()
        for _ in range(draw(st.integers(0, 4))):
            a = draw(st.sampled_from(spans))
            o = draw(st.sampled_from(spans))
            if a != o:
                out.add(Triplet(a, o, draw(st.sampled_from(list(Sentiment)))))
        return out

    return {"s0": triplets()}, {"s0": triplets()}


@given(pred_gold_pairs(), st.data())
@settings(max_examples=200, deadline=None)
def test_monotonicity(pair, data):
    pred, gold = pair
    base = score_triplets(pred, gold)
    spans = [Span(i, j) for i in range(5) for j in range(i, 5)]
    a = data.draw(st.sampled_from(spans))
    o = data.draw(st.sampled_from(spans))
    if a == o:
        return
    extra = Triplet(a, o, data.draw(st.sampled_from(list(Sentiment))))
    if extra in pred["s0"]:
        return
    grown = {"s0": pred["s0"] | {extra}}
    after = score_triplets(grown, gold)
    if extra in gold["s0"]:
        assert after.recall >= base.recall
    else:
        assert after.precision <= base.precision


def test_score_from_counts_zero_denominators():
    assert Score.from_counts(0, 0, 5).precision == 0.0
    assert Score.from_counts(0, 5, 0).recall == 0.0
    assert Score.from_counts(0, 5, 5).f1 == 0.0


@given(gold_sets())
@settings(max_examples=200, deadline=None)
def test_identity_is_perfect_for_every_projection(case):
    _, triplets = case
    gold = {"s0": set(triplets)}
    for task in Task:
        score = score_subtask(gold, gold, task)
        if score.gold > 0:
            assert (score.precision, score.recall, score.f1) == (1.0, 1.0, 1.0)
        else:
            assert (score.precision, score.recall, score.f1) == (0.0, 0.0, 0.0)
    for setting in Setting:
        score = score_by_setting(gold, gold, setting)
        if score.gold > 0:
            assert score.f1 == 1.0
