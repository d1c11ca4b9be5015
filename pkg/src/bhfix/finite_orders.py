"""Skeletal finite linear orders and the finite-subset comparisons.

A finite order of size n is always the chain 0 < 1 < ... < n-1.  Arbitrary
finite carriers appear only as strictly sorted tuples together with an
explicit comparison function cmp(a, b) -> negative | 0 | positive (the
``functools.cmp_to_key`` convention).  Finite subsets are plain sorted
tuples; there is deliberately no wrapper class around them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TypeVar

E = TypeVar("E")
Cmp = Callable

LT, EQ, GT = -1, 0, 1


def sgn(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Embedding:
    """Strictly increasing map {0..m-1} -> {0..n-1} with m = len(images)."""

    images: tuple[int, ...]
    codomain_size: int

    def __post_init__(self) -> None:
        prev = -1
        for i in self.images:
            if not isinstance(i, int) or i <= prev:
                raise ValueError(f"images must be strictly increasing naturals: {self.images}")
            prev = i
        if prev >= self.codomain_size:
            raise ValueError(
                f"image {prev} out of range for codomain of size {self.codomain_size}"
            )

    @property
    def domain_size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]


def identity_embedding(n: int) -> Embedding:
    return Embedding(tuple(range(n)), n)


def compose(f: Embedding, g: Embedding) -> Embedding:
    """Diagrammatic composition: first f, then g."""
    if f.codomain_size != g.domain_size:
        raise ValueError(
            f"cannot compose {f.domain_size}->{f.codomain_size} with "
            f"{g.domain_size}->{g.codomain_size}"
        )
    return Embedding(tuple(g.images[i] for i in f.images), g.codomain_size)


def all_embeddings(m: int, n: int) -> list[Embedding]:
    """Every strictly increasing map m -> n (exhaustive; used by law checks)."""
    from itertools import combinations

    return [Embedding(c, n) for c in combinations(range(n), m)]


def inclusion_of(members: Sequence[E], carrier: Sequence[E]) -> Embedding:
    """Position map of a sorted subset into an enumerated carrier."""
    positions = []
    for x in members:
        for j, y in enumerate(carrier):
            if x == y:
                positions.append(j)
                break
        else:
            raise ValueError(f"subset member {x!r} not found in carrier")
    return Embedding(tuple(positions), len(carrier))


def finset_map(f: Callable[[E], object], members: Iterable[E]) -> tuple:
    """Image of a finite subset under a strictly order-preserving map."""
    return tuple(f(x) for x in members)


def sorted_subset(items: Iterable[E], cmp: Cmp) -> tuple[E, ...]:
    """Strictly sorted, deduplicated tuple under cmp."""
    from functools import cmp_to_key

    out: list[E] = []
    for x in sorted(items, key=cmp_to_key(cmp)):
        if not out or cmp(out[-1], x) < 0:
            out.append(x)
    return tuple(out)


def is_strictly_sorted(items: Sequence[E], cmp: Cmp) -> bool:
    return all(cmp(a, b) < 0 for a, b in zip(items, items[1:]))


def lt_fin(a: Iterable[E], b: Sequence[E], cmp: Cmp) -> bool:
    """Every element of a lies strictly below some element of b."""
    return all(any(cmp(s, t) < 0 for t in b) for s in a)


def leq_fin(a: Iterable[E], b: Sequence[E], cmp: Cmp) -> bool:
    """Every element of a lies at or below some element of b."""
    return all(any(cmp(s, t) <= 0 for t in b) for s in a)


# Singleton shorthands: one side of the comparison is a single element
# rather than a set.  Exposed separately because call sites use them heavily.

def fin_lt_elem(a: Iterable[E], t: E, cmp: Cmp) -> bool:
    """a < {t}: every element of a is strictly below t."""
    return all(cmp(s, t) < 0 for s in a)


def elem_lt_fin(s: E, b: Sequence[E], cmp: Cmp) -> bool:
    """{s} < b: some element of b lies strictly above s."""
    return any(cmp(s, t) < 0 for t in b)


def elem_leq_fin(s: E, b: Sequence[E], cmp: Cmp) -> bool:
    """{s} <= b: some element of b lies at or above s."""
    return any(cmp(s, t) <= 0 for t in b)
