import logging
import math
import random
import time

from collections import Counter
from typing import Callable, Optional, Sequence

import numpy as np

from .canon import canonical_code
from .errors import PalindromicError
from .generate import enumerate_connected, enumerate_trees, random_graph, random_tree
from .graph import Graph, bipartition, cycle, is_bald, path, relabel
from .graph6 import parse_graph6, write_graph6
from .hairing import NotAHairing, dehair, hair_k, symplectic_check
from .matchings import forest_coefficient_identity
from .models import CellStatus, CheckResult, SurveyFilter
from .poly import IntPolynomial, PalindromeKind, classify, substitute_hairing
from .reconcile import reconcile_published_counts
from .spectral import char_poly, char_poly_sachs, tree_char_poly
from .survey import conjecture_scan, run_survey
from .tensor import (
    bald_seed,
    bipartite_split,
    counterexample_graph,
    family_generator,
    non_bipartite_bald_seed,
    product_charpoly,
    tensor_power_family,
)

logger = logging.getLogger(__name__)

TREE_HAIRING_ROWS = (
    (1, -1),
    (1, -3, 1),
    (1, -5, 5, -1),
    (1, -7, 12, -7, 1),
    (1, -7, 13, -7, 1),
    (1, -9, 22, -22, 9, -1),
    (1, -9, 24, -24, 9, -1),
    (1, -9, 25, -25, 9, -1),
)

COUNTEREXAMPLE_PRODUCT = IntPolynomial([1, 0, -22, 0, 127, 0, -212, 0, 127, 0, -22, 0, 1])
CHORDED_HEXAGON_POLY = IntPolynomial([1, 0, -7, 0, 7, 0, -1])
DEHAIR_ORDERS = (10**3, 10**4, 10**5, 10**6)


def chorded_hexagon() -> Graph:
    """C6 plus the chord 0-3"""

    return Graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])


def check_tree_hairings() -> str:
    rows = []
    for order in range(1, 6):
        for t in enumerate_trees(order):
            coeffs = tree_char_poly(hair_k(t, 1)).coeffs
            rows.append(tuple(coeffs[::2]))
    if Counter(rows) != Counter(TREE_HAIRING_ROWS):
        raise AssertionError(f"Even coefficient rows {sorted(rows)}")
    return f"{len(rows)} hairings of trees of order <= 5"


def check_sachs_oracle(max_order: int = 7) -> str:
    total = 0
    for n in range(1, max_order + 1):
        for g in enumerate_connected(n):
            if char_poly(g) != char_poly_sachs(g):
                raise AssertionError(f"{write_graph6(g)}: {char_poly(g)} vs {char_poly_sachs(g)}")
            total += 1
    return f"{total} connected graphs"


def check_forest_identity(max_order: int = 12) -> str:
    total = 0
    for n in range(1, max_order + 1):
        for t in enumerate_trees(n):
            if not forest_coefficient_identity(t) or tree_char_poly(t) != char_poly(t):
                raise AssertionError(f"Matching identity fails for {write_graph6(t)}")
            total += 1
    return f"{total} trees"


def check_hairing_identity(max_order: int = 6, multiplicities: Sequence[int] = (1, 2, 3)) -> str:
    total = 0
    for n in range(1, max_order + 1):
        for g in enumerate_connected(n):
            base = char_poly(g)
            for k in multiplicities:
                if char_poly(hair_k(g, k)) != substitute_hairing(base, n, k):
                    raise AssertionError(f"Hairing identity fails for {write_graph6(g)} with k={k}")
                total += 1
    return f"{total} graph and multiplicity pairs"


def check_tree_theorem(max_order: int = 14) -> str:
    symmetric = 0
    for n in range(1, max_order + 1):
        for t in enumerate_trees(n):
            verdict = classify(tree_char_poly(t))
            hairing = not isinstance(dehair(t), NotAHairing)
            if verdict.is_symmetric != hairing:
                raise AssertionError(f"{write_graph6(t)} is {verdict.label}, hairing={hairing}")
            if verdict.kind is PalindromeKind.PALINDROMIC and n % 4 != 0:
                raise AssertionError(f"Palindromic tree {write_graph6(t)} of order {n}")
            if verdict.kind is PalindromeKind.ANTIPALINDROMIC and n % 4 != 2:
                raise AssertionError(f"Antipalindromic tree {write_graph6(t)} of order {n}")
            symmetric += verdict.is_symmetric
    return f"{symmetric} (anti)palindromic trees, all hairings"


def check_order6_uniqueness() -> str:
    report = run_survey(SurveyFilter(order=6, connected_only=True))
    non_hairing = [
        w for w in report.witnesses if w.palindrome_class == PalindromeKind.ANTIPALINDROMIC.value and not w.hairing
    ]
    expected = canonical_code(chorded_hexagon())
    if [w.graph6 for w in non_hairing] != [expected]:
        raise AssertionError(f"Non-hairing antipalindromic graphs {[w.graph6 for w in non_hairing]}")
    if IntPolynomial.from_json(non_hairing[0].coefficients) != CHORDED_HEXAGON_POLY:
        raise AssertionError(f"Unexpected polynomial {non_hairing[0].coefficients}")
    if report.violations:
        raise AssertionError(f"Violations {report.violations}")
    return f"unique witness {expected}"


def check_counterexample() -> str:
    g = counterexample_graph()
    k2 = path(2)
    product = product_charpoly(char_poly(g), char_poly(k2))
    if product != COUNTEREXAMPLE_PRODUCT:
        raise AssertionError(f"Product polynomial {product}")
    if classify(product).kind is not PalindromeKind.PALINDROMIC:
        raise AssertionError("Product is not palindromic")
    if classify(char_poly(g)).is_symmetric:
        raise AssertionError("Factor is (anti)palindromic")
    return product.render()


def check_p4_square() -> str:
    split = bipartite_split(path(4), path(4))
    components = (split.even_component, split.odd_component)
    if any(c.n != 8 for c in components):
        raise AssertionError(f"Component orders {[c.n for c in components]}")
    if canonical_code(components[0]) != canonical_code(components[1]):
        raise AssertionError("Components are not isomorphic")
    for verdict in (split.even_class, split.odd_class):
        if verdict is None or verdict.kind is not PalindromeKind.PALINDROMIC:
            raise AssertionError(f"Component class {verdict}")
    if not all(isinstance(dehair(c), NotAHairing) for c in components):
        raise AssertionError("A component is a hairing")
    return canonical_code(components[0])


def check_symplectic(samples: int = 100, max_order: int = 16, seed: int = 0) -> str:
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_graph(rng.randint(1, max_order), rng.random(), rng)
        report = symplectic_check(g)
        if not report.all_ok:
            raise AssertionError(f"{write_graph6(g)}: {report}")
    return f"{samples} random graphs"


def check_bald_family() -> str:
    factors = [hair_k(path(2), 1), hair_k(path(3), 1), hair_k(path(4), 1)]
    members = list(family_generator(bald_seed(), factors))
    orders = [m.record.order for m in members]
    if orders != [16, 24, 32]:
        raise AssertionError(f"Member orders {orders}")
    if not all(m.record.bald and is_bald(m.graph) for m in members):
        raise AssertionError("A member has hairs")
    return f"orders {orders}"


def check_tensor_powers(max_power: int = 2) -> str:
    seed = non_bipartite_bald_seed()
    if classify(char_poly(seed)).kind is not PalindromeKind.PALINDROMIC or not is_bald(seed):
        raise AssertionError(f"Seed {write_graph6(seed)} is not bald and palindromic")
    members = list(tensor_power_family(seed, max_power))
    orders = [m.record.order for m in members]
    if orders != [seed.n**k for k in range(2, max_power + 1)]:
        raise AssertionError(f"Power orders {orders}")
    for member in members:
        if not member.record.bald or bipartition(member.graph).is_bipartite:
            raise AssertionError(f"Power of order {member.record.order} is bipartite or has hairs")
    return f"orders {orders}"


def check_codec_and_canon(
    samples: int = 10**4, max_order: int = 7, relabels: int = 100, seed: int = 0
) -> str:
    rng = random.Random(seed)
    for _ in range(samples):
        g = random_graph(rng.randint(0, 12), rng.random(), rng)
        text = write_graph6(g)
        if parse_graph6(text) != g or write_graph6(parse_graph6(text)) != text:
            raise AssertionError(f"Codec round trip fails for {text}")

    for n in range(1, max_order + 1):
        for g in enumerate_connected(n):
            code = canonical_code(g)
            for _ in range(relabels):
                perm = list(range(n))
                rng.shuffle(perm)
                if canonical_code(relabel(g, perm)) != code:
                    raise AssertionError(f"Canonical form of {code} depends on labeling")
    return f"{samples} codec samples, connected graphs up to order {max_order} relabeled {relabels} times"


def check_conjecture(orders: Sequence[int] = (2, 4, 6)) -> str:
    for n in orders:
        report = run_survey(SurveyFilter(order=n, connected_only=True))
        if not conjecture_scan(report):
            raise AssertionError(f"Order {n} report breaks the order conjecture")
    return f"orders {list(orders)}"


def check_reconciliation(workers: int = 1) -> str:
    reports = [run_survey(SurveyFilter(order=n, connected_only=True), workers) for n in (2, 4, 6, 8)]
    for report in reports:
        if report.violations:
            raise AssertionError(f"Order {report.order} violations {report.violations}")
    reports.append(run_survey(SurveyFilter(order=8, triangle_free=True), workers))
    document = reconcile_published_counts(reports)
    if document.violations:
        raise AssertionError(f"Witness violations {document.violations}")
    for order, column in ((2, "A."), (4, "P.")):
        reading = document.cell(order, column).readings[0]
        if reading.status is not CellStatus.MATCH:
            raise AssertionError(f"{column}({order}) connected reading is {reading.status.value}")
    return f"{len(document.cells)} cells"


def dehair_runtime_slope(orders: Sequence[int] = DEHAIR_ORDERS, seed: int = 0, repeats: int = 3) -> float:
    """Log-log slope of dehair running time on hairings of random trees"""

    rng = random.Random(seed)
    sizes, timings = [], []
    for order in orders:
        g = hair_k(random_tree(order, rng), 1)
        best = math.inf
        for _ in range(repeats):
            started = time.perf_counter()
            dehair(g)
            best = min(best, time.perf_counter() - started)
        logger.info("dehair on %d vertices took %.4fs", g.n, best)
        sizes.append(g.n)
        timings.append(best)
    slope, _ = np.polyfit(np.log(sizes), np.log(timings), 1)
    return float(slope)


def check_dehair_linearity() -> str:
    slope = dehair_runtime_slope()
    if not 0.8 <= slope <= 1.3:
        raise AssertionError(f"Fitted slope {slope:.3f}")
    return f"slope {slope:.3f}"


FAST_CHECKS: dict[str, Callable[[], str]] = {
    "tree-hairings": check_tree_hairings,
    "sachs-oracle": check_sachs_oracle,
    "forest-identity": check_forest_identity,
    "hairing-identity": check_hairing_identity,
    "tree-theorem": check_tree_theorem,
    "order6-uniqueness": check_order6_uniqueness,
    "counterexample": check_counterexample,
    "p4-square": check_p4_square,
    "symplectic": check_symplectic,
    "bald-family": check_bald_family,
    "conjecture": check_conjecture,
}

SLOW_CHECKS: dict[str, Callable[[], str]] = {
    "codec-canon": check_codec_and_canon,
    "tensor-powers": check_tensor_powers,
    "reconciliation": check_reconciliation,
    "dehair-linearity": check_dehair_linearity,
}


def run_check(name: str, check: Callable[[], str]) -> CheckResult:
    started = time.perf_counter()
    try:
        detail = check()
        passed = True
    except (AssertionError, PalindromicError) as e:
        detail = str(e)
        passed = False
    elapsed = time.perf_counter() - started
    logger.info("%s: %s in %.2fs", name, "passed" if passed else "FAILED", elapsed)
    return CheckResult(name=name, passed=passed, detail=detail, seconds=round(elapsed, 3))


def run_suite(include_slow: bool = False, only: Optional[Sequence[str]] = None) -> list[CheckResult]:
    """Run the invariant checks in a fixed order

    Raises:
        ValueError: If only names an unknown check
    """

    checks = dict(FAST_CHECKS)
    if include_slow:
        checks.update(SLOW_CHECKS)
    if only:
        unknown = [name for name in only if name not in FAST_CHECKS and name not in SLOW_CHECKS]
        if unknown:
            raise ValueError(f"Invalid check names {unknown}")
        checks = {name: {**FAST_CHECKS, **SLOW_CHECKS}[name] for name in only}
    return [run_check(name, check) for name, check in checks.items()]
