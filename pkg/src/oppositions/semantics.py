"""Ground-truth classification of oppositions by finite-model enumeration.

Sentences of the monadic fragment without equality have the small-model
property: 2^k domain elements suffice for k predicates, so exhaustive
enumeration up to that bound decides every entailment question the
classifier asks.  Domains are nonempty throughout; the classical square
collapses over the empty domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Mapping

from .formula import (
    FORALL,
    Atom,
    MAnd,
    MImplies,
    MNot,
    MOr,
    Matrix,
    Sentence,
    And,
    Implies,
    Not,
    Or,
    Quantified,
    Vocabulary,
    sentence_predicates,
)
from .graph import (
    CONTRADICTORY,
    CONTRARY,
    EQUIVALENT,
    SUBCONTRARY,
    UNCONNECTED,
    OppositionGraph,
    Relation,
    subaltern,
)
from .parser import Corpus


class VocabularyMismatchError(ValueError):
    """A sentence uses predicates outside the vocabulary in force."""


@dataclass(frozen=True)
class Model:
    """Finite structure: domain {0..n-1} plus an extension per predicate."""

    domain_size: int
    extensions: Mapping[str, frozenset[int]]

    def __post_init__(self) -> None:
        if self.domain_size < 1:
            raise ValueError("domains are nonempty")
        for name, ext in self.extensions.items():
            if not ext <= frozenset(range(self.domain_size)):
                raise ValueError(f"extension of {name!r} outside the domain")


def default_bound(vocab: Vocabulary) -> int:
    """Domain bound 2^k, sound for the monadic fragment without equality."""
    return 2 ** len(vocab)


def _subsets(n: int) -> Iterator[frozenset[int]]:
    # binary-counter order: element j present iff bit j is set
    for bits in range(1 << n):
        yield frozenset(i for i in range(n) if bits >> i & 1)


def enumerate_models(vocab: Vocabulary, max_size: int) -> Iterator[Model]:
    """Every model with domain size 1..max_size, in deterministic order."""
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    for n in range(1, max_size + 1):
        for extensions in product(*(_subsets(n) for _ in vocab.predicates)):
            yield Model(n, dict(zip(vocab.predicates, extensions)))


def _eval_matrix(m: Matrix, model: Model, element: int) -> bool:
    if isinstance(m, Atom):
        try:
            return element in model.extensions[m.predicate]
        except KeyError:
            raise VocabularyMismatchError(
                f"predicate {m.predicate!r} not in the model vocabulary"
            ) from None
    if isinstance(m, MNot):
        return not _eval_matrix(m.body, model, element)
    if isinstance(m, MAnd):
        return _eval_matrix(m.left, model, element) and _eval_matrix(m.right, model, element)
    if isinstance(m, MOr):
        return _eval_matrix(m.left, model, element) or _eval_matrix(m.right, model, element)
    if isinstance(m, MImplies):
        return not _eval_matrix(m.left, model, element) or _eval_matrix(
            m.right, model, element
        )
    raise TypeError(f"not a matrix: {m!r}")


def evaluate(model: Model, s: Sentence) -> bool:
    """Tarskian truth of a closed sentence in a finite model."""
    if isinstance(s, Quantified):
        elements = range(model.domain_size)
        if s.quantifier == FORALL:
            return all(_eval_matrix(s.matrix, model, e) for e in elements)
        return any(_eval_matrix(s.matrix, model, e) for e in elements)
    if isinstance(s, Not):
        return not evaluate(model, s.body)
    if isinstance(s, And):
        return evaluate(model, s.left) and evaluate(model, s.right)
    if isinstance(s, Or):
        return evaluate(model, s.left) or evaluate(model, s.right)
    if isinstance(s, Implies):
        return not evaluate(model, s.left) or evaluate(model, s.right)
    raise TypeError(f"not a sentence: {s!r}")


@dataclass(frozen=True)
class Evidence:
    """Truth-combination evidence gathered over all enumerated models."""

    both_true: bool
    both_false: bool
    first_entails_second: bool
    second_entails_first: bool


def _shared_vocabulary(a: Sentence, b: Sentence, vocab: Vocabulary | None) -> Vocabulary:
    preds_a = sentence_predicates(a)
    preds_b = sentence_predicates(b)
    if vocab is not None:
        missing = [p for p in preds_a + preds_b if p not in vocab]
        if missing:
            raise VocabularyMismatchError(
                f"predicates {sorted(set(missing))} not in the given vocabulary"
            )
        return vocab
    if set(preds_a) != set(preds_b):
        raise VocabularyMismatchError(
            f"sentences use different predicates ({sorted(set(preds_a))} vs "
            f"{sorted(set(preds_b))}); pass an explicit shared vocabulary"
        )
    return Vocabulary(preds_a)


def classification_evidence(
    a: Sentence,
    b: Sentence,
    max_size: int | None = None,
    vocab: Vocabulary | None = None,
) -> Evidence:
    """Scan all models up to the bound for the four classification flags."""
    vocab = _shared_vocabulary(a, b, vocab)
    if max_size is None:
        max_size = default_bound(vocab)
    both_true = both_false = False
    ab = ba = True
    for model in enumerate_models(vocab, max_size):
        va = evaluate(model, a)
        vb = evaluate(model, b)
        both_true = both_true or (va and vb)
        both_false = both_false or (not va and not vb)
        ab = ab and (vb or not va)
        ba = ba and (va or not vb)
    return Evidence(both_true, both_false, ab, ba)


def classify(
    a: Sentence,
    b: Sentence,
    max_size: int | None = None,
    vocab: Vocabulary | None = None,
    names: tuple[str, str] = ("a", "b"),
) -> Relation:
    """Classify the opposition between two sentences.

    Equivalence is checked first: a pair of logical truths (or of
    falsehoods) satisfies the subcontrariety (resp. contrariety) evidence
    as well, and equivalence wins.  Subalternation requires genuine
    one-directional entailment between logically independent sentences,
    so equivalent sentences are never subalterns of each other.
    """
    ev = classification_evidence(a, b, max_size, vocab)
    if ev.first_entails_second and ev.second_entails_first:
        return EQUIVALENT
    if not ev.both_true and not ev.both_false:
        return CONTRADICTORY
    if not ev.both_true:
        return CONTRARY
    if not ev.both_false:
        return SUBCONTRARY
    if ev.first_entails_second:
        return subaltern(names[0], names[1])
    if ev.second_entails_first:
        return subaltern(names[1], names[0])
    return UNCONNECTED


def build_graph(corpus: Corpus, max_size: int | None = None) -> OppositionGraph:
    """Classify every unordered pair of corpus sentences."""
    if len(corpus) < 2:
        raise ValueError("a corpus needs at least two entries to build a graph")
    if max_size is None:
        max_size = default_bound(corpus.vocabulary)
    edges = {}
    for (la, sa), (lb, sb) in combinations(corpus.entries, 2):
        edges[frozenset((la, lb))] = classify(
            sa, sb, max_size, corpus.vocabulary, names=(la, lb)
        )
    return OppositionGraph(corpus.labels, edges)
