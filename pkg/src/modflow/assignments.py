"""Residue labelings of edges (flows, tensions) and of vertices (colorings)."""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InvalidInput
from .graph import OrientedMultigraph


class _Labeling:
    __slots__ = ("modulus", "_values")

    def __init__(self, modulus: int, values: Mapping[Hashable, int]):
        if modulus < 1:
            raise InvalidInput("modulus must be a positive integer")
        self.modulus = modulus
        self._values = {key: int(v) % modulus for key, v in values.items()}

    @property
    def values(self) -> dict:
        return dict(self._values)

    def __getitem__(self, key):
        return self._values[key]

    def __contains__(self, key) -> bool:
        return key in self._values

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.modulus == other.modulus and self._values == other._values

    def __hash__(self):
        return hash((type(self).__name__, self.modulus, frozenset(self._values.items())))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(mod {self.modulus}, {self._values})"


class ModularAssignment(_Labeling):
    """Map from edge identity to a residue in ``0..m-1``."""

    __slots__ = ()

    @classmethod
    def of(cls, g: OrientedMultigraph, vector: Sequence[int], modulus: int) -> ModularAssignment:
        """From values listed in the canonical edge order of ``g``."""
        if len(vector) != g.n_edges:
            raise InvalidInput("vector length differs from the number of edges")
        return cls(modulus, dict(zip(g.edge_ids, vector)))

    @classmethod
    def zero(cls, g: OrientedMultigraph, modulus: int) -> ModularAssignment:
        return cls(modulus, {eid: 0 for eid in g.edge_ids})

    @property
    def support(self) -> frozenset:
        return frozenset(eid for eid, v in self._values.items() if v)

    def vector(self, g: OrientedMultigraph) -> tuple[int, ...]:
        try:
            return tuple(self._values[eid] for eid in g.edge_ids)
        except KeyError as exc:
            raise InvalidInput(f"no value for edge {exc.args[0]!r}") from None

    def restrict(self, edge_ids: Iterable[Hashable]) -> ModularAssignment:
        return ModularAssignment(self.modulus, {eid: self._values[eid] for eid in edge_ids})


class Coloring(_Labeling):
    """Map from vertex to a color in ``0..l-1``."""

    __slots__ = ()

    @classmethod
    def of(cls, g: OrientedMultigraph, vector: Sequence[int], modulus: int) -> Coloring:
        if len(vector) != g.n_vertices:
            raise InvalidInput("vector length differs from the number of vertices")
        return cls(modulus, dict(zip(g.vertices, vector)))
