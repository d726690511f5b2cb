import random

import pytest

from qtbraid import (
    BraidWord,
    Atom,
    WordError,
    concat,
    equal,
    expand,
    is_pure,
    parse_word,
    toric,
)
from qtbraid.quasitoric import (
    QuasitoricForm,
    factor,
    format_form_text,
    is_quasitoric,
    parse_form_text,
    parse_qt_form,
    qt_to_word,
)

from helpers import random_form, random_qt_word


class TestQtToWord:
    def test_all_positive_is_toric(self):
        for n in range(2, 6):
            for m in range(0, 4):
                form = QuasitoricForm(n, ((1,) * (n - 1),) * m)
                assert qt_to_word(form) == toric(n, m)

    def test_empty(self):
        assert qt_to_word(QuasitoricForm(4)).letters == ()

    def test_figure_signs(self):
        form = QuasitoricForm(4, ((1, 1, 1), (-1, -1, 1), (-1, 1, 1)))
        assert qt_to_word(form) == parse_word(4, "1 2 3 -1 -2 3 -1 2 3")


class TestParseQtForm:
    def test_toric_rows(self):
        form = parse_qt_form(toric(5, 3))
        assert form is not None
        assert form.rows == ((1, 1, 1, 1),) * 3

    def test_wrong_order_fails(self):
        assert parse_qt_form(parse_word(3, "2 1")) is None

    def test_wrong_length_fails(self):
        assert parse_qt_form(parse_word(3, "1 2 1")) is None

    def test_empty(self):
        form = parse_qt_form(BraidWord(4))
        assert form is not None and form.turns == 0

    def test_roundtrip(self):
        rng = random.Random(20)
        for _ in range(50):
            form = random_form(rng, rng.randint(2, 6), rng.randint(0, 5))
            assert parse_qt_form(qt_to_word(form)) == form

    def test_product_closure(self):
        rng = random.Random(21)
        for _ in range(50):
            n = rng.randint(2, 5)
            u = random_qt_word(rng, n)
            v = random_qt_word(rng, n)
            assert parse_qt_form(concat(u, v)) is not None


class TestIsQuasitoric:
    def test_delta0(self):
        for n in range(2, 7):
            assert is_quasitoric(toric(n, 1)) == 1

    def test_pure(self):
        assert is_quasitoric(BraidWord(3, (1, 1))) == 0

    def test_transposition_is_not(self):
        assert is_quasitoric(BraidWord(3, (1,))) is None

    def test_form_words_reduce_mod_n(self):
        rng = random.Random(22)
        for _ in range(60):
            n = rng.randint(2, 6)
            form = random_form(rng, n, rng.randint(0, 7))
            assert is_quasitoric(qt_to_word(form)) == form.turns % n


class TestFactor:
    def test_delta0(self):
        k, p = factor(toric(4, 1))
        assert k == 1
        assert equal(p, BraidWord(4))

    def test_delta1(self):
        for n in range(3, 7):
            d1 = expand(((Atom.d(1), 1),), n)
            k, p = factor(d1)
            assert k == 1
            assert equal(p, BraidWord(n, (-(n - 1), -(n - 1))))

    def test_toric_n_n(self):
        for n in range(3, 6):
            k, p = factor(toric(n, n))
            assert k == 0
            assert equal(p, expand(((Atom.t(1, n), 1),), n))

    def test_roundtrip_and_purity(self):
        rng = random.Random(23)
        for _ in range(60):
            n = rng.randint(2, 6)
            w = random_qt_word(rng, n)
            k, p = factor(w)
            assert is_pure(p)
            assert equal(concat(toric(n, 1) ** k, p), w)

    def test_rejects_non_member(self):
        with pytest.raises(WordError):
            factor(BraidWord(3, (1,)))


class TestFormFiles:
    def test_roundtrip(self):
        form = QuasitoricForm(4, ((1, -1, 1), (-1, -1, -1)))
        text = format_form_text(form)
        assert text == "+-+\n---"
        assert parse_form_text(text) == form

    def test_strand_inference(self):
        assert parse_form_text("++\n--").strands == 3

    def test_explicit_strands_checked(self):
        with pytest.raises(WordError):
            parse_form_text("++\n--", strands=4)

    def test_bad_character(self):
        with pytest.raises(WordError):
            parse_form_text("+x+")

    def test_empty_needs_strands(self):
        with pytest.raises(WordError):
            parse_form_text("")
        assert parse_form_text("", strands=5).turns == 0
