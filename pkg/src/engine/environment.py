"""Immutable results of one program execution."""
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from typing import Any

from ..kernel.geom import Point, Shape
from ..kernel.scalar import Backend
from ..script.program import Step


class Environment(Mapping):
    """Insertion-ordered name -> Point | Line | Ray | Circle, tied to the backend that built it."""

    def __init__(self, objects: Mapping[str, Shape], backend: Backend, exports: tuple[str, ...] = ()):
        self._objects = dict(objects)
        self.backend = backend
        self.exports = tuple(exports)

    def __getitem__(self, name: str) -> Shape:
        return self._objects[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._objects)

    def __len__(self) -> int:
        return len(self._objects)

    def points(self) -> list[tuple[str, Point]]:
        return [(k, v) for k, v in self._objects.items() if isinstance(v, Point)]

    def exported_points(self) -> list[tuple[str, Point]]:
        """Exported names that ended up bound to points (optional steps may leave gaps)."""
        return [(n, self._objects[n]) for n in self.exports if isinstance(self._objects.get(n), Point)]

    def __repr__(self) -> str:
        return f"Environment({list(self._objects)}, backend={self.backend.name})"


@dataclass(frozen=True)
class TraceEntry:
    index: int
    step: Step
    inputs: tuple[Any, ...]
    produced: Shape | None
    # both candidates of a two-valued intersection, in lexicographic order
    candidates: tuple[Point, ...] = ()


Trace = tuple[TraceEntry, ...]
