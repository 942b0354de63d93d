import pytest
from hypothesis import given

from oppositions import (
    EXISTS,
    FORALL,
    Atom,
    MAnd,
    MNot,
    MOr,
    And,
    Implies,
    Not,
    Or,
    ParseError,
    Quantified,
    make_categorical,
    parse_corpus,
    parse_sentence,
    print_sentence,
)
from conftest import sentence_strategy

P = Atom("P")
Q = Atom("Q")


class TestSentences:
    def test_sugar_expands_to_mixed_representation(self):
        assert parse_sentence("A[P]") == Quantified(FORALL, P)

    def test_negated_universal(self):
        assert parse_sentence("~forall x. ~P(x)") == Not(Quantified(FORALL, MNot(P)))

    def test_u_sugar(self):
        assert parse_sentence("U[P]") == Or(
            Quantified(FORALL, P), Quantified(FORALL, MNot(P))
        )

    def test_all_sugar_tags(self):
        for form in "AEIOUY":
            assert parse_sentence(f"{form}[P]") == make_categorical(form, "P")

    def test_quantifier_body_extends_maximally(self):
        assert parse_sentence("forall x. P(x) & Q(x)") == Quantified(
            FORALL, MAnd(P, Q)
        )

    def test_matrix_precedence(self):
        # & binds tighter than |
        assert parse_sentence("exists x. P(x) | Q(x) & P(x)") == Quantified(
            EXISTS, MOr(P, MAnd(Q, P))
        )

    def test_sentence_precedence(self):
        s = parse_sentence("~A[P] & E[P] | I[P]")
        a, e, i = (make_categorical(f, "P") for f in "AEI")
        assert s == Or(And(Not(a), e), i)

    def test_binary_connectives_left_associative(self):
        a, e, i = (make_categorical(f, "P") for f in "AEI")
        assert parse_sentence("A[P] -> E[P] -> I[P]") == Implies(Implies(a, e), i)
        assert parse_sentence("A[P] & E[P] & I[P]") == And(And(a, e), i)

    def test_parentheses_override(self):
        a, e, i = (make_categorical(f, "P") for f in "AEI")
        assert parse_sentence("A[P] -> (E[P] -> I[P])") == Implies(a, Implies(e, i))

    def test_any_lowercase_variable_accepted(self):
        assert parse_sentence("forall v. P(v)") == Quantified(FORALL, P)


class TestSentenceErrors:
    def test_unknown_sugar_tag(self):
        with pytest.raises(ParseError, match="unknown sugar tag"):
            parse_sentence("B[P]")

    def test_free_variable_in_matrix(self):
        with pytest.raises(ParseError, match="free variable 'y'") as err:
            parse_sentence("forall x. P(y)")
        assert err.value.line == 1
        assert err.value.col == 13

    def test_atom_outside_quantifier(self):
        with pytest.raises(ParseError, match="free"):
            parse_sentence("P(x)")

    def test_trailing_input(self):
        with pytest.raises(ParseError, match="trailing"):
            parse_sentence("A[P] E[P]")

    def test_unexpected_character(self):
        with pytest.raises(ParseError, match="unexpected character"):
            parse_sentence("A[P] @ E[P]")

    def test_missing_dot(self):
        with pytest.raises(ParseError, match="expected '.'"):
            parse_sentence("forall x P(x)")

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_sentence("A[P] &")
        assert err.value.line == 1
        assert err.value.col == 7

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ParseError):
            parse_sentence("(A[P] & E[P]")


class TestCorpus:
    def test_two_entries(self):
        corpus = parse_corpus("A: A[P]\nO: O[P]")
        assert corpus.labels == ("A", "O")
        assert corpus.sentence("A") == make_categorical("A", "P")

    def test_duplicate_label(self):
        with pytest.raises(ParseError, match="duplicate label"):
            parse_corpus("A: A[P]\nA: E[P]")

    def test_hexagon_corpus(self):
        corpus = parse_corpus("\n".join(f"{f}: {f}[P]" for f in "AEIOUY"))
        assert len(corpus) == 6
        assert corpus.vocabulary.predicates == ("P",)

    def test_comments_and_blank_lines(self):
        text = "# header\n\nA: A[P]  # trailing note\n\nO: O[P]\n"
        corpus = parse_corpus(text)
        assert corpus.labels == ("A", "O")

    def test_crlf_accepted(self):
        corpus = parse_corpus("A: A[P]\r\nO: O[P]\r\n")
        assert corpus.labels == ("A", "O")

    def test_hyphenated_label(self):
        corpus = parse_corpus("A: A[P]\nA-copy: A[P]")
        assert corpus.labels == ("A", "A-copy")

    def test_error_reports_corpus_line(self):
        with pytest.raises(ParseError) as err:
            parse_corpus("A: A[P]\nE: E[P]\nI: B[P]")
        assert err.value.line == 3

    def test_error_column_offset_by_label(self):
        with pytest.raises(ParseError) as err:
            parse_corpus("Alpha: forall x. P(y)")
        assert err.value.line == 1
        assert err.value.col == 20

    def test_label_with_whitespace_rejected(self):
        with pytest.raises(ParseError, match="invalid label"):
            parse_corpus("two words: A[P]")

    def test_missing_colon(self):
        with pytest.raises(ParseError, match="label"):
            parse_corpus("just a sentence")

    def test_empty_corpus_rejected(self):
        with pytest.raises(ParseError, match="no entries"):
            parse_corpus("# only comments\n\n")

    def test_vocabulary_first_occurrence_order(self):
        corpus = parse_corpus("Q1: A[Q]\nP1: A[P]")
        assert corpus.vocabulary.predicates == ("Q", "P")


class TestRoundTrip:
    @given(sentence_strategy())
    def test_parse_inverts_print(self, sentence):
        assert parse_sentence(print_sentence(sentence)) == sentence

    @pytest.mark.parametrize(
        "text",
        [
            "A[P]",
            "forall x. P(x) & ~Q(x)",
            "~(exists x. P(x)) -> U[P]",
            "(A[P] | E[Q]) & ~Y[P]",
            "exists x. (P(x) -> Q(x)) | P(x)",
        ],
    )
    def test_print_of_parse_reparses_identically(self, text):
        tree = parse_sentence(text)
        assert parse_sentence(print_sentence(tree)) == tree
