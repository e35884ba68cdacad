"""Permutations on {0, ..., n-1} and their text forms.

Composition follows the right-action convention used throughout the package:
``(g * h)(x) = h(g(x))``, i.e. apply ``g`` first.  Conjugation is then
``x^g = g^-1 x g``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import DegreeMismatch

_CYCLE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse ``"(0 1)(2 3)"``; commas are accepted as separators too.

        The degree defaults to one more than the largest point mentioned.
        """
        cycles = []
        stripped = text.strip()
        for body in _CYCLE.findall(stripped):
            pts = [int(tok) for tok in body.replace(",", " ").split()]
            if pts:
                cycles.append(pts)
        if _CYCLE.sub("", stripped).strip():
            raise ValueError(f"unparseable cycle notation: {text!r}")
        top = max((max(c) for c in cycles), default=-1) + 1
        n = top if degree is None else degree
        if n < top:
            raise DegreeMismatch(f"point {top - 1} outside degree {n}")
        img = list(range(n))
        seen: set[int] = set()
        for c in cycles:
            if len(set(c)) != len(c) or seen & set(c):
                raise ValueError(f"cycles are not disjoint: {text!r}")
            seen |= set(c)
            for a, b in zip(c, c[1:] + c[:1]):
                img[a] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise DegreeMismatch("degrees differ")
        return Permutation(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            j = self.images[i]
            while j != i:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def as_permutation(obj, degree: int | None = None) -> Permutation:
    """Accept a Permutation, an image array, or a cycle-notation string."""
    if isinstance(obj, Permutation):
        perm = obj
    elif isinstance(obj, str):
        perm = Permutation.from_cycles(obj, degree)
    else:
        perm = Permutation(tuple(int(x) for x in obj))
    if degree is not None and perm.degree != degree:
        raise DegreeMismatch(f"expected degree {degree}, got {perm.degree}")
    return perm


def parse_generators(data: dict) -> tuple[int, list[Permutation]]:
    """Decode the group input record ``{"degree": n, "generators": [...]}``."""
    degree = int(data["degree"])
    gens = [as_permutation(g, degree) for g in data.get("generators", [])]
    return degree, gens


def load_group_file(path: str | Path) -> tuple[int, list[Permutation]]:
    with open(path, encoding="utf-8") as fh:
        return parse_generators(json.load(fh))


def check_degrees(gens: Sequence[Permutation], degree: int | None) -> int:
    degrees = {g.degree for g in gens}
    if degree is not None:
        degrees.add(degree)
    if len(degrees) > 1:
        raise DegreeMismatch(f"generators have degrees {sorted(degrees)}")
    if not degrees:
        raise DegreeMismatch("no generators and no degree given")
    return degrees.pop()


def to_tuples(gens: Iterable) -> list[tuple[int, ...]]:
    return [as_permutation(g).images for g in gens]
