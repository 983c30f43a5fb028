"""Colouring values."""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

LABELS: Tuple[int, int, int] = (1, 2, 3)

ListAssignment = Sequence[Iterable[int]]


@dataclass(frozen=True)
class Colouring:
    """Vertex labelling with labels 1, 2, 3.

    Label 0 marks a vertex outside the domain of a partial colouring (for
    example the private neighbourhood left open by a colouring family).
    """

    labels: Tuple[int, ...]

    @classmethod
    def of(cls, labels: Iterable[int]) -> "Colouring":
        return cls(labels=tuple(labels))

    @classmethod
    def from_classes(cls, n: int, classes: Dict[int, Iterable[int]]) -> "Colouring":
        labels = [0] * n
        for label, members in classes.items():
            for v in members:
                labels[v] = label
        return cls(labels=tuple(labels))

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    @property
    def is_total(self) -> bool:
        return all(label in LABELS for label in self.labels)

    def colour_class(self, label: int) -> Tuple[int, ...]:
        return tuple(v for v, lab in enumerate(self.labels) if lab == label)

    def classes(self) -> Dict[int, Tuple[int, ...]]:
        """Colour classes X, Y, Z keyed by label."""
        out: Dict[int, List[int]] = {label: [] for label in LABELS}
        for v, lab in enumerate(self.labels):
            if lab in out:
                out[lab].append(v)
        return {label: tuple(members) for label, members in out.items()}

    def domain(self) -> FrozenSet[int]:
        return frozenset(v for v, lab in enumerate(self.labels) if lab != 0)

    def with_labels(self, updates: Dict[int, int]) -> "Colouring":
        labels = list(self.labels)
        for v, lab in updates.items():
            labels[v] = lab
        return Colouring(labels=tuple(labels))
