import random

import pytest

import pbwtidx as px
from pbwtidx.errors import EmptyInputError, IndexOutOfRangeError, UnknownCharacterError
from pbwtidx.fm import count_trace, locate_with_steps, sorted_rotations
from pbwtidx.pbwt import EMPTY, Interval

from conftest import DEMO_BWT, DEMO_TEXT


def brute_bwt(text: str, sentinel: str = "$") -> str:
    term = text + sentinel
    rotations = sorted(term[p:] + term[:p] for p in range(len(term)))
    return "".join(r[-1] for r in rotations)


def test_sentinel_text_validation(alphabet):
    with pytest.raises(EmptyInputError):
        px.SentinelText("", alphabet)
    with pytest.raises(UnknownCharacterError):
        px.SentinelText("AC$T", alphabet)
    with pytest.raises(UnknownCharacterError):
        px.SentinelText("ACNT", alphabet)
    st = px.SentinelText("ACGT", alphabet)
    assert st.terminated == "ACGT$"
    assert st.n == 4


def test_bwt_demo_text(alphabet):
    assert px.bwt_build(px.SentinelText(DEMO_TEXT, alphabet)) == DEMO_BWT


def test_bwt_single_character(alphabet):
    assert px.bwt_build(px.SentinelText("A", alphabet)) == "A$"


def test_bwt_periodic_text(alphabet):
    got = px.bwt_build(px.SentinelText("GATAGATA", alphabet))
    assert got == brute_bwt("GATAGATA")
    assert len(got) == 9
    assert got.count("$") == 1


def test_bwt_matches_brute_force_on_random_texts(alphabet):
    rng = random.Random(55)
    for _ in range(40):
        text = "".join(rng.choice("ACGT") for _ in range(rng.randint(1, 48)))
        assert px.bwt_build(px.SentinelText(text, alphabet)) == brute_bwt(text)


def test_column_collapse_demo(alphabet):
    assert px.verify_column_collapse(px.SentinelText(DEMO_TEXT, alphabet))


def test_column_collapse_single_character(alphabet):
    assert px.verify_column_collapse(px.SentinelText("A", alphabet))


def test_column_collapse_random():
    rng = random.Random(66)
    for _ in range(50):
        sigma = rng.randint(2, 4)
        symbols = "ACGT"[:sigma]
        alphabet = px.Alphabet(symbols=symbols)
        text = "".join(rng.choice(symbols) for _ in range(rng.randint(1, 64)))
        assert px.verify_column_collapse(px.SentinelText(text, alphabet))


def test_fm_build_sampling(demo_fm):
    assert sorted(demo_fm.sa_samples.values()) == [0, 5, 10]
    assert len(demo_fm.sa_samples) == 3  # ceil(13 / 5)
    assert demo_fm.bwt == DEMO_BWT


def test_fm_build_stride_one_samples_everything(alphabet):
    index = px.fm_build(px.SentinelText(DEMO_TEXT, alphabet), 1)
    assert len(index.sa_samples) == index.rows
    starts = sorted_rotations(px.SentinelText(DEMO_TEXT, alphabet))
    assert [index.sa_samples[r] for r in range(index.rows)] == starts
    interval = px.fm_count(index, "TA")
    _, steps = locate_with_steps(index, interval)
    assert steps == [0, 0]


def test_fm_build_rejects_bad_stride(alphabet):
    with pytest.raises(ValueError):
        px.fm_build(px.SentinelText("ACGT", alphabet), 0)


def test_lf_step_is_a_bijection(demo_fm):
    images = {px.lf_step(demo_fm, row) for row in range(demo_fm.rows)}
    assert images == set(range(demo_fm.rows))
    with pytest.raises(IndexOutOfRangeError):
        px.lf_step(demo_fm, demo_fm.rows)


def test_lf_cycle_spells_text_backwards(demo_fm):
    # starting from the row whose BWT character is the sentinel, LF steps
    # visit every row exactly once and read the terminated text right to left
    start = demo_fm.bwt.index("$")
    term = DEMO_TEXT + "$"
    row = start
    seen = []
    chars = []
    for _ in range(demo_fm.rows):
        seen.append(row)
        chars.append(demo_fm.bwt[row])
        row = px.lf_step(demo_fm, row)
    assert row == start
    assert len(set(seen)) == demo_fm.rows
    assert "".join(chars) == term[::-1]


def test_lf_step_tiny_text(alphabet):
    index = px.fm_build(px.SentinelText("A", alphabet), 1)
    assert px.lf_step(index, 0) == 1
    assert px.lf_step(index, 1) == 0


def test_fm_count_examples(demo_fm):
    assert px.fm_count(demo_fm, "TA").width == 2
    assert px.fm_count(demo_fm, "ATA").width == 1
    assert px.fm_count(demo_fm, "") == Interval(0, 12)
    assert px.fm_count(demo_fm, "GATTAGATACAT").width == 1
    assert px.fm_count(demo_fm, "CCC") == EMPTY


def test_fm_count_rejects_sentinel_and_unknown(demo_fm):
    with pytest.raises(UnknownCharacterError):
        px.fm_count(demo_fm, "A$")
    with pytest.raises(UnknownCharacterError):
        px.fm_count(demo_fm, "AXA")


def test_count_trace_shrinks_monotonically(demo_fm):
    trace = count_trace(demo_fm, "ATA")
    assert trace[0] == (0, Interval(0, 12))
    widths = [iv.width for _, iv in trace]
    assert widths == sorted(widths, reverse=True)


def test_fm_locate_examples(demo_fm):
    assert sorted(px.fm_locate(demo_fm, px.fm_count(demo_fm, "TA"))) == [3, 7]
    assert px.fm_locate(demo_fm, px.fm_count(demo_fm, "ATA")) == [6]
    assert px.fm_locate(demo_fm, EMPTY) == []


def test_fm_locate_step_bound(demo_fm):
    for pattern in ("TA", "ATA", "A", "T", "GAT", ""):
        interval = px.fm_count(demo_fm, pattern)
        positions, steps = locate_with_steps(demo_fm, interval)
        assert all(d < demo_fm.stride for d in steps)
        assert len(positions) == interval.width


def test_fm_matches_oracle_on_random_texts():
    rng = random.Random(77)
    for _ in range(25):
        sigma = rng.randint(2, 4)
        symbols = "ACGT"[:sigma]
        alphabet = px.Alphabet(symbols=symbols)
        text = "".join(rng.choice(symbols) for _ in range(rng.randint(1, 128)))
        st = px.SentinelText(text, alphabet)
        for stride in (1, 2, 4, 8):
            index = px.fm_build(st, stride)
            assert len(index.sa_samples) == -(-index.rows // stride)
            for _q in range(20):
                m = rng.randint(0, 5)
                pattern = "".join(rng.choice(symbols) for _ in range(m))
                expected = px.naive_substring(text, pattern)
                interval = px.fm_count(index, pattern)
                assert interval.width == len(expected)
                positions, steps = locate_with_steps(index, interval)
                assert sorted(positions) == expected
                assert all(d < stride for d in steps)
