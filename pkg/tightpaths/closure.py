"""
From transactional data to basic antecedents.

Closed item sets of a dataset, ordered by inclusion, form a lattice whose
Hasse graph becomes a vertex-weighted acyclic graph once supports are
log-scaled. Tight pairs of that graph are the basic antecedents at the
matching confidence; `basic_antecedents` finds them directly on integer
supports instead.
"""
import logging
import math
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple, Union

from pydantic import BaseModel, PositiveInt, PrivateAttr, confloat, root_validator

from tightpaths.exceptions import InvalidThreshold, LatticeError
from tightpaths.graph.base import VertexWeightedDag
from tightpaths.graph.io import TextSource, data_lines
from tightpaths.models import VertexId

logger = logging.getLogger(__name__)

ItemSet = FrozenSet[str]
Confidence = Union[float, Fraction, str]


class TransactionalDataset(BaseModel):
    """
    Finite sequence of item sets; repeated transactions are allowed.

    :param items: Item identifiers, in first-appearance order.
    :param transactions: The transactions, each a subset of `items`.
    """

    items: Tuple[VertexId, ...]  # type: ignore
    transactions: Tuple[FrozenSet[VertexId], ...]  # type: ignore

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def transactions_within_items(cls, values):
        items = values["items"]
        if len(set(items)) != len(items):
            raise ValueError("items must be distinct")
        known = set(items)
        for index, transaction in enumerate(values["transactions"]):
            unknown = transaction - known
            if unknown:
                raise ValueError(
                    f"transaction {index} uses unknown items {sorted(unknown)}"
                )
        return values

    @classmethod
    def from_transactions(
        cls, transactions: Iterable[Iterable[str]]
    ) -> "TransactionalDataset":
        items: Dict[str, None] = {}
        collected = []
        for transaction in transactions:
            transaction = list(transaction)
            for item in transaction:
                items.setdefault(item)
            collected.append(frozenset(transaction))
        return cls(items=tuple(items), transactions=tuple(collected))

    def support(self, item_set: ItemSet) -> int:
        return sum(1 for transaction in self.transactions if item_set <= transaction)


class ClosureLattice(BaseModel):
    """
    Closed item sets with their supports and Hasse cover edges.

    Sets are in topological order: support descending, then size, then item
    order. A cover `(i, j)` means `closed_sets[i]` is a maximal closed proper
    subset of `closed_sets[j]`.
    """

    items: Tuple[VertexId, ...]  # type: ignore
    closed_sets: Tuple[FrozenSet[VertexId], ...]  # type: ignore
    supports: Tuple[PositiveInt, ...]
    covers: Tuple[Tuple[int, int], ...] = ()

    _successors: Dict[int, Tuple[int, ...]] = PrivateAttr()
    _predecessors: Dict[int, Tuple[int, ...]] = PrivateAttr()

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def consistent(cls, values):
        closed_sets = values["closed_sets"]
        supports = values["supports"]
        if len(closed_sets) != len(supports):
            raise ValueError("one support per closed set is required")
        if len(set(closed_sets)) != len(closed_sets):
            raise ValueError("closed sets must be distinct")
        for low, high in values["covers"]:
            if not (0 <= low < len(closed_sets) and 0 <= high < len(closed_sets)):
                raise ValueError(f"cover ({low}, {high}) is out of range")
            if not closed_sets[low] < closed_sets[high]:
                raise ValueError(f"cover ({low}, {high}) is not a proper inclusion")
            if supports[low] < supports[high]:
                raise ValueError(f"support increases along cover ({low}, {high})")
        return values

    def __init__(self, **data):
        super().__init__(**data)
        successors: Dict[int, List[int]] = {i: [] for i in range(len(self))}
        predecessors: Dict[int, List[int]] = {i: [] for i in range(len(self))}
        for low, high in self.covers:
            successors[low].append(high)
            predecessors[high].append(low)
        self._successors = {i: tuple(s) for i, s in successors.items()}
        self._predecessors = {i: tuple(p) for i, p in predecessors.items()}

    def __len__(self) -> int:
        return len(self.closed_sets)

    def label_of(self, item_set: Iterable[str]) -> str:
        members = set(item_set)
        return "{" + ",".join(item for item in self.items if item in members) + "}"

    def label(self, index: int) -> str:
        return self.label_of(self.closed_sets[index])

    def index_of(self, item_set: ItemSet) -> int:
        return self.closed_sets.index(frozenset(item_set))

    def support(self, item_set: ItemSet) -> int:
        return self.supports[self.index_of(item_set)]

    def cover_successors(self, index: int) -> Tuple[int, ...]:
        return self._successors[index]

    def cover_predecessors(self, index: int) -> Tuple[int, ...]:
        return self._predecessors[index]


class BasicAntecedentPair(BaseModel):
    antecedent: FrozenSet[str]
    consequent: FrozenSet[str]
    antecedent_support: PositiveInt
    consequent_support: PositiveInt
    confidence: confloat(gt=0, le=1)  # type: ignore

    class Config:
        frozen = True


def parse_transactions(text: TextSource) -> TransactionalDataset:
    """One transaction per line, items separated by whitespace."""
    transactions = [tokens for _, tokens in data_lines(text)]
    if not transactions:
        raise LatticeError("the dataset has no transactions")
    return TransactionalDataset.from_transactions(transactions)


def render_transactions(dataset: TransactionalDataset) -> str:
    return "".join(
        " ".join(item for item in dataset.items if item in transaction) + "\n"
        for transaction in dataset.transactions
    )


def mine_closures(dataset: TransactionalDataset, minsupp: int = 1) -> ClosureLattice:
    """
    All closed sets with support at least `minsupp`, and their cover edges.

    The closed sets are the intersections of nonempty groups of transactions,
    built incrementally one transaction at a time.
    """
    if minsupp < 1:
        raise LatticeError(f"minimum support must be at least 1, got {minsupp}")
    if not dataset.transactions:
        raise LatticeError("the dataset has no transactions")

    family: Set[ItemSet] = set()
    for transaction in dataset.transactions:
        family |= {transaction} | {closed & transaction for closed in family}

    position = {item: index for index, item in enumerate(dataset.items)}
    supported = [
        (closed, dataset.support(closed))
        for closed in family
        if dataset.support(closed) >= minsupp
    ]
    supported.sort(
        key=lambda entry: (
            -entry[1],
            len(entry[0]),
            sorted(position[item] for item in entry[0]),
        )
    )
    closed_sets = [closed for closed, _ in supported]
    logger.debug(
        "%d closed sets, %d with support >= %d", len(family), len(closed_sets), minsupp
    )
    return ClosureLattice(
        items=dataset.items,
        closed_sets=tuple(closed_sets),
        supports=tuple(support for _, support in supported),
        covers=tuple(_hasse_covers(closed_sets)),
    )


def _hasse_covers(closed_sets: List[ItemSet]) -> List[Tuple[int, int]]:
    covers = []
    for high, upper in enumerate(closed_sets):
        below = [low for low, lower in enumerate(closed_sets) if lower < upper]
        for low in below:
            lower = closed_sets[low]
            if not any(lower < closed_sets[middle] for middle in below):
                covers.append((low, high))
    covers.sort()
    return covers


def to_log_weighted_dag(
    lattice: ClosureLattice, *, contract: bool = False
) -> VertexWeightedDag:
    """
    Hasse graph with weight `ln(max support / support)` per closed set.

    Weight differences along a path are minus the log of its confidence.
    Covers between sets of equal support break the strict weight increase;
    they are rejected, or merged into one vertex when `contract` is set.
    """
    if not len(lattice):
        raise LatticeError("cannot build a graph from an empty lattice")
    representative = list(range(len(lattice)))

    def find(index: int) -> int:
        while representative[index] != index:
            representative[index] = representative[representative[index]]
            index = representative[index]
        return index

    for low, high in lattice.covers:
        if lattice.supports[low] == lattice.supports[high]:
            if not contract:
                raise LatticeError(
                    f"cover {lattice.label(low)} -> {lattice.label(high)} joins two "
                    f"sets of support {lattice.supports[low]}; merge them "
                    "(contract) or perturb the supports"
                )
            first, second = sorted((find(low), find(high)))
            representative[second] = first

    top = max(lattice.supports)
    kept = [index for index in range(len(lattice)) if find(index) == index]
    edges: Dict[Tuple[str, str], None] = {}
    for low, high in lattice.covers:
        source, target = find(low), find(high)
        if source != target:
            edges.setdefault((lattice.label(source), lattice.label(target)))
    return VertexWeightedDag(
        vertices=tuple(lattice.label(index) for index in kept),
        weights={
            lattice.label(index): math.log(top / lattice.supports[index])
            for index in kept
        },
        edges=tuple(edges),
    )


def as_fraction(confidence: Confidence) -> Fraction:
    """Read a confidence threshold as an exact decimal; floats use their repr."""
    try:
        if isinstance(confidence, float):
            value = Fraction(repr(confidence))
        else:
            value = Fraction(confidence)
    except (ValueError, ZeroDivisionError):
        raise InvalidThreshold(confidence, "not a number")
    if not 0 < value <= 1:
        raise InvalidThreshold(confidence, "confidence must lie in (0, 1]")
    return value


def basic_antecedents(
    lattice: ClosureLattice, confidence: Confidence
) -> List[BasicAntecedentPair]:
    """
    Pairs `(u, v)` of closed sets, `v` reachable from `u`, with
    `supp(v) / supp(u) >= confidence`, such that stepping to a cover
    successor of `v` or to a cover predecessor of `u` drops below it.

    Comparisons are exact: `a / b >= n / d` is tested as `a * d >= n * b`.
    """
    threshold = as_fraction(confidence)
    numerator, denominator = threshold.numerator, threshold.denominator
    supports = lattice.supports

    found: List[Tuple[int, int]] = []
    for root in range(len(lattice)):
        base = supports[root]
        closest: Optional[int] = min(
            (supports[p] for p in lattice.cover_predecessors(root)), default=None
        )
        visited: Set[int] = set()
        stack = [root]
        while stack:
            vertex = stack.pop()
            if vertex in visited:
                continue
            visited.add(vertex)
            may_extend = False
            for successor in lattice.cover_successors(vertex):
                if supports[successor] * denominator >= numerator * base:
                    if successor not in visited:
                        stack.append(successor)
                    may_extend = True
            if not may_extend and (
                closest is None or supports[vertex] * denominator < numerator * closest
            ):
                found.append((root, vertex))

    return [
        BasicAntecedentPair(
            antecedent=lattice.closed_sets[low],
            consequent=lattice.closed_sets[high],
            antecedent_support=supports[low],
            consequent_support=supports[high],
            confidence=supports[high] / supports[low],
        )
        for low, high in found
    ]


def render_lattice(lattice: ClosureLattice) -> str:
    """`c LABEL SUPPORT` per closed set, then `h LOW HIGH` per cover."""
    set_lines = (
        f"c {lattice.label(index)} {support}\n"
        for index, support in enumerate(lattice.supports)
    )
    cover_lines = (
        f"h {lattice.label(low)} {lattice.label(high)}\n"
        for low, high in lattice.covers
    )
    return "".join(set_lines) + "".join(cover_lines)


def render_antecedents(
    lattice: ClosureLattice, pairs: Iterable[BasicAntecedentPair]
) -> str:
    def items(item_set: ItemSet) -> str:
        return " ".join(i for i in lattice.items if i in item_set) or "{}"

    return "".join(
        f"{items(pair.antecedent)} -> {items(pair.consequent)}\t{pair.confidence:.6f}\n"
        for pair in pairs
    )
