import pytest
from hypothesis import given
from hypothesis import strategies as st

from dynamik.classify import classify_tokens
from dynamik.style import Mode, StyleConfig, apply_mode, default_style
from dynamik.tokenizer import tokenize


def cues_for(text, mode, cfg=None):
    return apply_mode(classify_tokens(tokenize(text)), mode, cfg)


class TestDefaults:
    def test_default_sizes(self):
        cfg = default_style()
        assert cfg.keyword_size_pt == 18
        assert cfg.function_size_pt == 12

    def test_default_color(self):
        assert default_style().color_rgba == (255, 128, 130, 255)

    def test_default_background_and_typeface(self):
        cfg = default_style()
        assert cfg.background_rgba == (0, 0, 0, 255)
        assert cfg.typeface_name == "ZenMaruGothic Medium"

    def test_function_size_may_not_exceed_keyword_size(self):
        with pytest.raises(ValueError):
            StyleConfig(keyword_size_pt=12, function_size_pt=18)

    def test_sizes_must_be_positive(self):
        with pytest.raises(ValueError):
            StyleConfig(keyword_size_pt=0, function_size_pt=0)

    def test_color_channels_validated(self):
        with pytest.raises(ValueError):
            StyleConfig(color_rgba=(300, 0, 0, 255))


class TestModeExamples:
    def test_normal_the_gunman(self):
        cues = cues_for("the gunman", Mode.NORMAL)
        assert [(c.text, c.size_pt, c.visible) for c in cues] == [
            ("the", 18.0, True),
            ("gunman", 18.0, True),
        ]

    def test_dynamik_the_gunman(self):
        cues = cues_for("the gunman", Mode.DYNAMIK)
        assert [(c.text, c.size_pt, c.visible) for c in cues] == [
            ("the", 12.0, True),
            ("gunman", 18.0, True),
        ]

    def test_keyword_the_gunman(self):
        the, gunman = cues_for("the gunman", Mode.KEYWORD)
        assert not the.visible
        assert gunman.visible and gunman.size_pt == 18.0

    def test_keyword_mode_retains_hidden_cues(self):
        cues = cues_for("the gunman fled", Mode.KEYWORD)
        assert len(cues) == 3
        assert [c.text for c in cues] == ["the", "gunman", "fled"]


class TestPunctuationInheritance:
    def test_trailing_punct_follows_word(self):
        *_, gunman, period = cues_for("the gunman.", Mode.DYNAMIK)
        assert period.size_pt == gunman.size_pt == 18.0
        assert period.is_keyword

    def test_punct_after_function_word_shrinks(self):
        cues = cues_for("after them, nothing", Mode.DYNAMIK)
        comma = cues[2]
        assert comma.text == ","
        assert comma.size_pt == 12.0

    def test_punct_hidden_with_hidden_neighbor(self):
        cues = cues_for("after them, nothing", Mode.KEYWORD)
        comma = cues[2]
        assert not comma.visible

    def test_leading_punct_follows_next_word(self):
        quote, the, gunman = cues_for("« the gunman", Mode.DYNAMIK)
        assert quote.text == "«"
        assert quote.size_pt == the.size_pt == 12.0


words = st.one_of(
    st.sampled_from(["the", "a", "of", "never", "don't", "60", "gunman", "fled", "quickly", ","]),
    st.text(alphabet=st.characters(whitelist_categories=("Ll",)), min_size=1, max_size=8),
)
token_texts = st.lists(words, min_size=0, max_size=25).map(" ".join)


@given(token_texts)
def test_order_and_count_preserved_under_all_modes(text):
    classified = classify_tokens(tokenize(text))
    for mode in Mode:
        cues = apply_mode(classified, mode)
        assert [c.text for c in cues] == [c.surface for c in classified]


@given(token_texts)
def test_dynamik_sizes_subset_of_config_pair(text):
    cues = apply_mode(classify_tokens(tokenize(text)), Mode.DYNAMIK)
    assert {c.size_pt for c in cues} <= {18.0, 12.0}
    assert all(c.visible for c in cues)


@given(token_texts)
def test_keyword_visible_text_is_keyword_subsequence_of_normal(text):
    classified = classify_tokens(tokenize(text))
    normal = apply_mode(classified, Mode.NORMAL)
    keyword = apply_mode(classified, Mode.KEYWORD)
    keyword_subsequence = [c.text for c in normal if c.is_keyword]
    assert [c.text for c in keyword if c.visible] == keyword_subsequence


@given(token_texts)
def test_mode_transform_pure(text):
    classified = classify_tokens(tokenize(text))
    for mode in Mode:
        assert apply_mode(classified, mode) == apply_mode(classified, mode)
