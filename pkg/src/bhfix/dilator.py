"""The coded prae-dilator contract and support normal forms.

A prae-dilator assigns to every finite order n a decidable linear order of
*tokens* Tok_n, acts functorially on strictly increasing maps, and equips
every token with a finite support such that the token factors uniquely
through the inclusion of its support.  Because of that factorization, an
element of T_X for an arbitrary linearly ordered carrier X can always be
stored in *support normal form*: a strictly sorted support tuple over X
plus a full-support token at arity |support|.  All values in this package
keep that normal form; raw tokens exist only at module boundaries.

Token values must be hashable and their ``==`` must agree with
``compare_at`` equality at a fixed arity.  All operations are pure;
dilator instances hold no observable state and can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from typing import Any, Callable, Iterator, Sequence

from .errors import DilatorLawError
from .finite_orders import EQ, Embedding, finset_map, is_strictly_sorted

Token = Any
Cmp = Callable[[Any, Any], int]

# Bound for the generic normal-form search; concrete dilators override
# restrict_token and never hit it.
RESTRICT_SEARCH_BUDGET = 512


@dataclass(frozen=True)
class Enumeration:
    """A finite listing plus an honest claim about its completeness.

    ``exhaustive`` is True only when the listing provably contains every
    value in question; property checks propagate the flag so that a report
    can distinguish "verified on all" from "verified on a sample".
    """

    items: tuple
    exhaustive: bool

    def __iter__(self) -> Iterator:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]


class Dilator:
    """Contract for a coded prae-dilator over skeletal finite orders.

    Core obligations (the laws are *checked*, not assumed; see
    :mod:`bhfix.verify`):

    * ``compare_at(n, s, t)`` is a linear order on Tok_n;
    * ``map_token`` is functorial and strictly monotone;
    * ``supp_at`` is natural: supp(map(f, s)) = f[supp(s)];
    * every token is map_token(inclusion-of-its-support) of a unique
      full-support token.

    ``enumerate_at`` must return an initial segment of Tok_n under
    ``compare_at`` (exhaustive when Tok_n is finite and fits the budget).
    ``sample_at`` may return any deterministic finite subset and exists so
    that dilators with infinite token orders can still feed diverse inputs
    to the law checks; the default is the initial-segment enumeration.
    """

    name = "dilator"

    def compare_at(self, n: int, s: Token, t: Token) -> int:
        raise NotImplementedError

    def map_token(self, f: Embedding, tok: Token) -> Token:
        raise NotImplementedError

    def supp_at(self, n: int, tok: Token) -> tuple[int, ...]:
        raise NotImplementedError

    def enumerate_at(self, n: int, budget: int) -> Enumeration:
        raise NotImplementedError

    def sample_at(self, n: int, budget: int) -> Enumeration:
        return self.enumerate_at(n, budget)

    def restrict_token(self, n: int, tok: Token, positions: Sequence[int]) -> Token:
        """Preimage of tok under the inclusion of ``positions`` into 0..n-1.

        Generic fallback: search the enumeration at the lower arity.  Only
        guaranteed to succeed when that enumeration reaches the preimage;
        fails loudly otherwise.
        """
        k = len(positions)
        incl = Embedding(tuple(positions), n)
        candidates = self.enumerate_at(k, RESTRICT_SEARCH_BUDGET)
        for cand in candidates:
            if self.compare_at(n, self.map_token(incl, cand), tok) == EQ:
                return cand
        detail = "" if candidates.exhaustive else " within the search budget"
        raise DilatorLawError(
            f"{self.name}: no preimage of {self.format_token(n, tok)} under the "
            f"inclusion of {tuple(positions)} into 0..{n - 1}{detail}; "
            "support factorization failed"
        )

    def format_token(self, n: int, tok: Token) -> str:
        raise NotImplementedError

    def parse_token(self, n: int, text: str) -> Token:
        raise NotImplementedError


@dataclass(frozen=True)
class CodedElement:
    """An element of T_X in support normal form.

    ``support`` is strictly sorted in the carrier order and ``token`` has
    full support at arity len(support).  Equality is syntactic.
    """

    support: tuple
    token: Token

    @property
    def arity(self) -> int:
        return len(self.support)


def make_coded(dilator: Dilator, support: Sequence, token: Token) -> CodedElement:
    """Build a coded element, checking the full-support invariant."""
    k = len(support)
    supp = dilator.supp_at(k, token)
    if supp != tuple(range(k)):
        raise DilatorLawError(
            f"{dilator.name}: token {dilator.format_token(k, token)} does not use "
            f"its whole arity-{k} support (supp = {supp})"
        )
    return CodedElement(tuple(support), token)


def normal_form(dilator: Dilator, n: int, tok: Token) -> CodedElement:
    """Factor a raw token through the inclusion of its support.

    Returns the coded element over the carrier 0..n-1.  Failure to factor,
    or a factor that is not full-support, indicates a law-violating dilator
    and raises :class:`DilatorLawError`.
    """
    supp = dilator.supp_at(n, tok)
    full = dilator.restrict_token(n, tok, supp)
    incl = Embedding(supp, n)
    if dilator.compare_at(n, dilator.map_token(incl, full), tok) != EQ:
        raise DilatorLawError(
            f"{dilator.name}: restriction of {dilator.format_token(n, tok)} does not "
            "map back to the original token"
        )
    k = len(supp)
    if dilator.supp_at(k, full) != tuple(range(k)):
        raise DilatorLawError(
            f"{dilator.name}: restricted token {dilator.format_token(k, full)} is not "
            "full-support"
        )
    return CodedElement(supp, full)


def map_coded(f: Callable, coded: CodedElement) -> CodedElement:
    """Apply a strictly increasing carrier map to a coded element.

    The support is relabelled through f; the token is unchanged.
    """
    return CodedElement(finset_map(f, coded.support), coded.token)


def merge_supports(a: Sequence, b: Sequence, cmp: Cmp) -> tuple:
    """Union of two strictly sorted tuples under cmp."""
    out: list = []
    i = j = 0
    while i < len(a) and j < len(b):
        c = cmp(a[i], b[j])
        if c < 0:
            out.append(a[i])
            i += 1
        elif c > 0:
            out.append(b[j])
            j += 1
        else:
            out.append(a[i])
            i += 1
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def positions_in(members: Sequence, carrier: Sequence, cmp: Cmp) -> Embedding:
    """Inclusion of a sorted subset into a sorted carrier, located via cmp."""
    positions = []
    j = 0
    for x in members:
        while j < len(carrier) and cmp(carrier[j], x) < 0:
            j += 1
        if j >= len(carrier) or cmp(carrier[j], x) != 0:
            raise ValueError("support member missing from merged carrier")
        positions.append(j)
        j += 1
    return Embedding(tuple(positions), len(carrier))


def compare_coded(dilator: Dilator, cmp: Cmp, e1: CodedElement, e2: CodedElement) -> int:
    """Linear comparison of two coded elements over the same carrier.

    Both tokens are pushed into the merge of the two supports and compared
    there; the verdict does not depend on the choice of common carrier.
    """
    if e1 == e2:
        return EQ
    merged = merge_supports(e1.support, e2.support, cmp)
    t1 = dilator.map_token(positions_in(e1.support, merged, cmp), e1.token)
    t2 = dilator.map_token(positions_in(e2.support, merged, cmp), e2.token)
    verdict = dilator.compare_at(len(merged), t1, t2)
    if verdict == EQ:
        raise DilatorLawError(
            f"{dilator.name}: distinct coded elements compare equal "
            f"(token {dilator.format_token(len(merged), t1)})"
        )
    return verdict


def full_support_tokens(dilator: Dilator, k: int, budget: int) -> Enumeration:
    """Tokens at arity k whose support is all of 0..k-1, within budget."""
    sample = dilator.sample_at(k, budget)
    full = tuple(t for t in sample if dilator.supp_at(k, t) == tuple(range(k)))
    return Enumeration(full, sample.exhaustive)


def enumerate_coded(
    dilator: Dilator, carrier_sample: Sequence, budget: int, cmp: Cmp
) -> Enumeration:
    """All coded elements with support inside the sample and token within
    the per-arity budget, sorted by compare_coded.

    ``carrier_sample`` must be strictly sorted under cmp.  The result is
    exhaustive for T_X restricted to the sampled carrier only when every
    per-arity token enumeration was exhaustive.
    """
    sample = tuple(carrier_sample)
    if not is_strictly_sorted(sample, cmp):
        raise ValueError("carrier sample must be strictly sorted")
    out: list[CodedElement] = []
    exhaustive = True
    for k in range(len(sample) + 1):
        tokens = full_support_tokens(dilator, k, budget)
        exhaustive &= tokens.exhaustive
        if not tokens.items:
            continue
        for subset in combinations(sample, k):
            out.extend(CodedElement(subset, tok) for tok in tokens)
    out.sort(key=cmp_to_key(lambda a, b: compare_coded(dilator, cmp, a, b)))
    return Enumeration(tuple(out), exhaustive)
