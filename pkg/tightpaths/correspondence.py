from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Sequence,
    Set,
    Tuple,
)

from pydantic import BaseModel, root_validator

from tightpaths.models import Pair, VertexId

Order = FrozenSet[Pair]


def close_order(universe: Sequence[str], leq_pairs: Iterable[Pair]) -> Order:
    """
    Reflexive and transitive closure of an explicit `<=` pair list.

    Raises `ValueError` if the closure is not antisymmetric.
    """
    above: Dict[str, Set[str]] = {element: {element} for element in universe}
    for low, high in leq_pairs:
        if low not in above or high not in above:
            raise ValueError(f"pair ({low}, {high}) is outside the universe")
        above[low].add(high)
    for middle in universe:
        for low in universe:
            if middle in above[low]:
                above[low] |= above[middle]
    order = frozenset((low, high) for low in universe for high in above[low])
    for low, high in order:
        if low != high and (high, low) in order:
            raise ValueError(
                f"{low} and {high} are mutually related; not a partial order"
            )
    return order


class Correspondence(BaseModel):
    """
    Binary relation over a partially ordered universe.

    Pairs `(u, v)` are stored as predecessor lists: `lists[v]` holds every `u`
    related to `v`, in universe order.

    :param universe: Ordered elements; for graphs, a topological order.
    :param order: The `<=` relation as reflexive pairs `(low, high)`.
    :param lists: Predecessor list per element.
    """

    universe: Tuple[VertexId, ...]  # type: ignore
    order: Order
    lists: Dict[VertexId, Tuple[VertexId, ...]]  # type: ignore

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def normalize_lists(cls, values):
        universe = values["universe"]
        if len(set(universe)) != len(universe):
            raise ValueError("universe elements must be distinct")
        position = {element: index for index, element in enumerate(universe)}
        for low, high in values["order"]:
            if low not in position or high not in position:
                raise ValueError(f"order pair ({low}, {high}) is outside the universe")
        lists = values["lists"]
        for element, predecessors in lists.items():
            if element not in position:
                raise ValueError(f"list for unknown element {element!r}")
            if len(set(predecessors)) != len(predecessors):
                raise ValueError(f"duplicate entries in the list of {element!r}")
            for predecessor in predecessors:
                if predecessor not in position:
                    raise ValueError(f"unknown element {predecessor!r} in a list")
        values["lists"] = _sorted_lists(universe, position, lists)
        return values

    @classmethod
    def from_pairs(
        cls, universe: Sequence[str], order: Iterable[Pair], pairs: Iterable[Pair]
    ) -> "Correspondence":
        lists: Dict[str, List[str]] = {}
        for low, high in pairs:
            entries = lists.setdefault(high, [])
            if low not in entries:
                entries.append(low)
        return cls(
            universe=tuple(universe),
            order=frozenset(order),
            lists={element: tuple(entries) for element, entries in lists.items()},
        )

    def leq(self, low: str, high: str) -> bool:
        return low == high or (low, high) in self.order

    def lt(self, low: str, high: str) -> bool:
        return low != high and (low, high) in self.order

    def pairs(self) -> Set[Pair]:
        return {(low, high) for high in self.universe for low in self.lists[high]}

    def ordered_pairs(self) -> List[Pair]:
        return [(low, high) for high in self.universe for low in self.lists[high]]

    def size(self) -> int:
        return sum(len(entries) for entries in self.lists.values())

    def with_lists(self, lists: Mapping[str, Iterable[str]]) -> "Correspondence":
        """Same universe and order, new pairs; lists are assumed valid."""
        position = {element: index for index, element in enumerate(self.universe)}
        return self.copy(
            update={"lists": _sorted_lists(self.universe, position, lists)}
        )

    def with_pairs(self, pairs: Iterable[Pair]) -> "Correspondence":
        lists: Dict[str, List[str]] = {}
        for low, high in pairs:
            lists.setdefault(high, []).append(low)
        return self.with_lists(lists)

    def intersection(self, other: "Correspondence") -> "Correspondence":
        return self.with_pairs(self.pairs() & other.pairs())

    def union(self, other: "Correspondence") -> "Correspondence":
        return self.with_pairs(self.pairs() | other.pairs())

    def render(self) -> str:
        return "".join(
            f"{element}: {' '.join(self.lists[element])}\n" for element in self.universe
        )


def _sorted_lists(
    universe: Sequence[str],
    position: Mapping[str, int],
    lists: Mapping[str, Iterable[str]],
) -> Dict[str, Tuple[str, ...]]:
    return {
        element: tuple(
            sorted(dict.fromkeys(lists.get(element, ())), key=position.__getitem__)
        )
        for element in universe
    }
