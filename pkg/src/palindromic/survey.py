import logging

from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Optional

from pydantic import ValidationError

from .canon import canonical_code
from .checkpoint import CheckpointStore
from .errors import OrderTooLargeError
from .generate import CONNECTED_ORDER_CAP, augment, chunked, enumerate_connected, graph_level
from .graph import Graph, bipartition, is_bald, is_connected, is_tree, is_triangle_free
from .hairing import HairCertificate, dehair, predict_class_of_hairing
from .matchings import count_perfect_matchings
from .models import (
    CensusEntry,
    GraphSource,
    SurveyCheckpoint,
    SurveyFilter,
    SurveyReport,
    Witness,
)
from .poly import IntPolynomial, PalindromeClass, PalindromeKind, classify
from .spectral import char_poly, char_poly_sachs

logger = logging.getLogger(__name__)

CENSUS_ORDER_CAP = 7
SACHS_WITNESS_CAP = 10
SURVEY_CHUNK_SIZE = 32


@dataclass(frozen=True)
class GraphRecord:
    """Everything a survey learns about one graph"""

    code: str
    order: int
    polynomial: IntPolynomial
    palindrome_class: PalindromeClass
    bipartite: bool
    hairing: bool
    core: Optional[str]
    tree: bool
    bald: bool
    triangle_free: bool
    violations: tuple[str, ...] = ()


def examine(g: Graph) -> GraphRecord:
    """Classify g and check the structural facts its polynomial must obey

    Every graph: a_0 = 1, a_1 = 0, |a_2| = |E|, bipartite iff odd coefficients
    vanish, and a hairing has the class predicted from its core. A palindromic
    or antipalindromic graph must also have even order and a perfect matching,
    agree with the Sachs expansion (n <= 10) and, if it is a tree, be a hairing.
    """

    code = canonical_code(g)
    polynomial = char_poly(g)
    verdict = classify(polynomial)
    bipartite = bipartition(g).is_bipartite
    certificate = dehair(g)
    hairing = isinstance(certificate, HairCertificate)
    tree = is_tree(g)
    violations = []

    if polynomial.coefficient(0) != 1 or polynomial.coefficient(1) != 0:
        violations.append(f"{code}: leading coefficients {polynomial.coeffs[:2]}")
    if abs(polynomial.coefficient(2)) != g.edge_count:
        violations.append(f"{code}: |a_2| = {abs(polynomial.coefficient(2))} but {g.edge_count} edges")
    odd_vanish = all(polynomial.coefficient(i) == 0 for i in range(1, g.n + 1, 2))
    if odd_vanish != bipartite:
        violations.append(f"{code}: bipartite={bipartite} but odd coefficients vanish={odd_vanish}")

    core = None
    if hairing:
        core = canonical_code(certificate.core_graph)
        predicted = predict_class_of_hairing(certificate.core_graph)
        if predicted != verdict:
            violations.append(f"{code}: hairing of {core} is {verdict.label}, expected {predicted.label}")

    if verdict.is_symmetric:
        if g.n % 2:
            violations.append(f"{code}: {verdict.label} graph of odd order")
        if count_perfect_matchings(g) < 1:
            violations.append(f"{code}: {verdict.label} graph without a perfect matching")
        if g.n <= SACHS_WITNESS_CAP and char_poly_sachs(g) != polynomial:
            violations.append(f"{code}: Sachs expansion disagrees with {polynomial.render()}")
    if tree and verdict.is_symmetric != hairing:
        violations.append(f"{code}: tree is {verdict.label} but hairing={hairing}")

    return GraphRecord(
        code=code,
        order=g.n,
        polynomial=polynomial,
        palindrome_class=verdict,
        bipartite=bipartite,
        hairing=hairing,
        core=core,
        tree=tree,
        bald=is_bald(g),
        triangle_free=is_triangle_free(g),
        violations=tuple(violations),
    )


def _accepts(g: Graph, survey_filter: SurveyFilter) -> bool:
    if g.n != survey_filter.order:
        return False
    if survey_filter.connected_only and not is_connected(g):
        return False
    if survey_filter.triangle_free and not is_triangle_free(g):
        return False
    return True


def classify_survey(graphs: Iterable[Graph], survey_filter: SurveyFilter) -> SurveyReport:
    """Tally classes, hairings, trees and bald graphs over the graphs passing the filter

    Violated invariants are collected in the report, never raised. Connected
    surveys of order <= 7 also keep a census of every graph.
    """

    report = SurveyReport.empty(survey_filter)
    keep_census = survey_filter.connected_only and survey_filter.order <= CENSUS_ORDER_CAP
    for g in graphs:
        if g.n == 0:
            logger.warning("Skipping graph of order 0")
            continue
        if not _accepts(g, survey_filter):
            continue

        record = examine(g)
        kind, absolute = record.palindrome_class.kind.value, record.palindrome_class.absolute
        report.graphs_examined += 1
        report.counts.add(kind, absolute)
        if record.hairing:
            report.hairing.add(kind, absolute)
        if record.tree:
            report.trees.add(kind, absolute)
        if record.bald:
            report.bald.add(kind, absolute)
        report.violations.extend(record.violations)

        if record.palindrome_class.is_symmetric:
            report.witnesses.append(
                Witness(
                    graph6=record.code,
                    order=record.order,
                    coefficients=record.polynomial.to_json(),
                    palindrome_class=record.palindrome_class.label,
                    hairing=record.hairing,
                    tree=record.tree,
                    bald=record.bald,
                    triangle_free=record.triangle_free,
                    core=record.core,
                )
            )
        if keep_census:
            report.census.append(
                CensusEntry(
                    graph6=record.code,
                    order=record.order,
                    coefficients=record.polynomial.to_json(),
                    hairing=record.hairing,
                    tree=record.tree,
                    bald=record.bald,
                    triangle_free=record.triangle_free,
                )
            )
    return report.finalize()


def conjecture_scan(report: SurveyReport) -> bool:
    """Whether palindromic witnesses have order 0 mod 4 and antipalindromic ones 2 mod 4"""

    for witness in report.witnesses:
        if witness.palindrome_class == PalindromeKind.PALINDROMIC.value and witness.order % 4 != 0:
            return False
        if witness.palindrome_class == PalindromeKind.ANTIPALINDROMIC.value and witness.order % 4 != 2:
            return False
    return True


def connected_census(order: int) -> list[CensusEntry]:
    """Census of every connected graph of the given order"""

    if order > CENSUS_ORDER_CAP:
        raise OrderTooLargeError(order, CENSUS_ORDER_CAP, "connected_census")
    survey_filter = SurveyFilter(order=order, connected_only=True)
    return classify_survey(enumerate_connected(order), survey_filter).census


def _survey_chunk(task: tuple[list[tuple[int, ...]], SurveyFilter]) -> SurveyReport:
    parents, survey_filter = task
    graphs = (Graph.from_masks(child) for parent in parents for child in augment(parent))
    return classify_survey(graphs, survey_filter)


def _load_checkpoint(store: CheckpointStore, key: str, total_chunks: int) -> Optional[SurveyCheckpoint]:
    if not store.exists(key):
        return None
    try:
        checkpoint = SurveyCheckpoint.model_validate(store.get(key))
    except ValidationError as e:
        logger.warning("Ignoring malformed checkpoint %s: %s", key, e)
        return None

    if checkpoint.total_chunks != total_chunks:
        logger.warning("Ignoring checkpoint %s made for %d chunks", key, checkpoint.total_chunks)
        return None
    return checkpoint


def run_survey(
    survey_filter: SurveyFilter,
    workers: int = 1,
    store: Optional[CheckpointStore] = None,
    resume: bool = False,
) -> SurveyReport:
    """Survey every graph of the filter's order produced by the builtin generator

    The canonical parents one order below are split into fixed chunks; each
    chunk is augmented and classified on its own (in a process pool when
    workers > 1) and merged in chunk order. With a store, progress is saved
    after every chunk and a resumed run skips chunks already merged. The final
    report does not depend on the worker count.

    Raises:
        ValueError: If the filter names a graph6 stream or workers < 1
        OrderTooLargeError: If the order exceeds 10
    """

    if survey_filter.source is not GraphSource.BUILTIN:
        raise ValueError("Invalid source: run_survey uses the builtin generator")
    if workers < 1:
        raise ValueError("Invalid workers count")
    n = survey_filter.order
    if n > CONNECTED_ORDER_CAP:
        raise OrderTooLargeError(n, CONNECTED_ORDER_CAP, "run_survey")

    if n == 1:
        return classify_survey([Graph(1)], survey_filter)

    parents = graph_level(n - 1, workers)
    chunks = chunked(parents, SURVEY_CHUNK_SIZE)
    key = survey_filter.checkpoint_key()

    report = SurveyReport.empty(survey_filter)
    start = 0
    if store is not None and resume:
        checkpoint = _load_checkpoint(store, key, len(chunks))
        if checkpoint is not None:
            report, start = checkpoint.report, checkpoint.next_chunk
            logger.info("Resuming %s at chunk %d of %d", key, start, len(chunks))
    elif store is not None and store.delete(key) is not None:
        logger.info("Discarded earlier progress for %s", key)

    tasks = [(list(chunk), survey_filter) for chunk in chunks[start:]]

    def record(index: int, partial: SurveyReport) -> None:
        nonlocal report
        report = report.merge(partial)
        logger.info("Chunk %d of %d done, %d graphs so far", index + 1, len(chunks), report.graphs_examined)
        if store is not None:
            store.set(
                key,
                SurveyCheckpoint(
                    key=key, next_chunk=index + 1, total_chunks=len(chunks), report=report
                ).model_dump(mode="json"),
            )

    if workers > 1 and len(tasks) > 1:
        with Pool(processes=workers) as pool:
            for offset, partial in enumerate(pool.imap(_survey_chunk, tasks)):
                record(start + offset, partial)
    else:
        for offset, task in enumerate(tasks):
            record(start + offset, _survey_chunk(task))

    return report.finalize()
