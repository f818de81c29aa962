from typing import (
    AbstractSet,
    Any,
    Dict,
    Generic,
    Hashable,
    Iterable,
    Iterator,
    Set,
    Tuple,
    TypeVar,
)

from pydantic import BaseModel, confloat, constr, validator

VertexId = constr(regex=r"^\S+$")  # type: ignore
Pair = Tuple[str, str]

T = TypeVar("T")


class Path(BaseModel):
    """
    Sequence of vertices joined by edges, with its total cost.

    Vertices may repeat: paths are not necessarily simple.
    """

    vertices: Tuple[VertexId, ...]  # type: ignore
    cost: confloat(ge=0) = 0.0  # type: ignore

    class Config:
        frozen = True

    @validator("vertices")
    def nonempty(cls, vertices: Tuple[str, ...]) -> Tuple[str, ...]:
        if not vertices:
            raise ValueError("a path has at least one vertex")
        return vertices

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> str:
        return self.vertices[0]

    @property
    def last(self) -> str:
        return self.vertices[-1]

    @property
    def edges(self) -> Tuple[Pair, ...]:
        return tuple(zip(self.vertices, self.vertices[1:]))


class ResultSet(Generic[T]):
    """
    Duplicate-free collection remembering insertion order.

    Equality is set equality, also against plain sets of keys.
    """

    def __init__(self, items: Iterable[T] = ()):
        self._items: Dict[Hashable, T] = {}
        self.update(items)

    def key(self, item: T) -> Hashable:
        return item  # type: ignore

    def add(self, item: T) -> None:
        self._items.setdefault(self.key(item), item)

    def update(self, items: Iterable[T]) -> None:
        for item in items:
            self.add(item)

    def keys(self) -> Set[Any]:
        return set(self._items)

    def __iter__(self) -> Iterator[T]:
        return iter(self._items.values())

    def __len__(self) -> int:
        return len(self._items)

    def __contains__(self, item: object) -> bool:
        if item in self._items:
            return True
        try:
            return self.key(item) in self._items  # type: ignore
        except (AttributeError, TypeError):
            return False

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ResultSet):
            return self.keys() == other.keys()
        if isinstance(other, AbstractSet):
            return self.keys() == set(other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self._items)!r})"


class PathSet(ResultSet[Path]):
    def key(self, item: Path) -> Hashable:
        return item.vertices


class TightPathSet(PathSet):
    """Tight paths found at one threshold, keyed by their vertex sequence."""

    def pairs(self) -> "TightPairSet":
        """Endpoints of every path, in discovery order."""
        return TightPairSet((path.first, path.last) for path in self)


class TightPairSet(ResultSet[Pair]):
    """Endpoints `(first, last)` of tight paths."""
