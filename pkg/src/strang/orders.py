"""Exact arithmetic of densities of bounded discrete linear orders.

A density is -1 (empty order), an ordinal w*n+p below w^2, or infinity
(non-scattered order).  Order types produced by the hammock pipeline are
represented by finite terms; their densities are evaluated exactly by
iterated symbolic Hausdorff condensation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Optional, Sequence, Tuple, Union


class StrangError(Exception):
    pass


class NonScatteredOperand(StrangError):
    pass


class UnsupportedTermShape(StrangError):
    pass


_EMPTY, _VAL, _INF = -1, 0, 1

# All reachable densities are < w^2, so ranks stay tiny; the cap only
# guards against runaway recursion on malformed input.
MAX_RANK = 2**31


@total_ordering
@dataclass(frozen=True)
class Density:
    """-1, w*rank+part, or infinity; ordered lexicographically."""

    kind: int
    rank: int = 0
    part: int = 0

    @staticmethod
    def empty() -> "Density":
        return Density(_EMPTY)

    @staticmethod
    def val(rank: int, part: int) -> "Density":
        if rank < 0 or part < 0 or rank > MAX_RANK:
            raise ValueError(f"bad density w*{rank}+{part}")
        return Density(_VAL, rank, part)

    @staticmethod
    def finite(n_points: int) -> "Density":
        """Density of a finite order with n_points elements."""
        if n_points == 0:
            return Density.empty()
        return Density.val(0, n_points - 1)

    @staticmethod
    def infinite() -> "Density":
        return Density(_INF)

    @property
    def is_empty(self) -> bool:
        return self.kind == _EMPTY

    @property
    def is_infinite(self) -> bool:
        return self.kind == _INF

    def _key(self):
        return (self.kind, self.rank, self.part)

    def __lt__(self, other: "Density") -> bool:
        return self._key() < other._key()

    def render(self) -> str:
        if self.kind == _EMPTY:
            return "-1"
        if self.kind == _INF:
            return "INF"
        if self.rank == 0:
            return str(self.part)
        head = "w" if self.rank == 1 else f"w*{self.rank}"
        return head if self.part == 0 else f"{head}+{self.part}"

    def __str__(self) -> str:
        return self.render()

    @staticmethod
    def parse(text: str) -> "Density":
        text = text.strip()
        if text == "-1":
            return Density.empty()
        if text == "INF":
            return Density.infinite()
        if not text.startswith("w"):
            return Density.val(0, int(text))
        rest = text[1:]
        rank = 1
        if rest.startswith("*"):
            rest = rest[1:]
            num = ""
            while rest and rest[0].isdigit():
                num += rest[0]
                rest = rest[1:]
            rank = int(num)
        part = 0
        if rest.startswith("+"):
            part = int(rest[1:])
        elif rest:
            raise ValueError(f"bad density text {text!r}")
        return Density.val(rank, part)


def dot_sum_density(d1: Density, d2: Density) -> Density:
    """Density of the dot sum of two bounded discrete linear orders.

    The larger Hausdorff rank wins; equal ranks add their finite parts.
    The empty order is the identity.
    """
    if d1.is_infinite or d2.is_infinite:
        raise NonScatteredOperand("density undefined for non-scattered operand")
    if d1.is_empty:
        return d2
    if d2.is_empty:
        return d1
    if d1.rank > d2.rank:
        return d1
    if d2.rank > d1.rank:
        return d2
    return Density.val(d1.rank, d1.part + d2.part)


def dot_sum_all(ds: Iterable[Density]) -> Density:
    acc = Density.empty()
    for d in ds:
        acc = dot_sum_density(acc, d)
    return acc


def omega_mult_density(d: Density) -> Density:
    """d(L*w) = w*(HR(L)+1) for nonempty L; the empty order stays empty."""
    if d.is_infinite:
        raise NonScatteredOperand("density undefined for non-scattered operand")
    if d.is_empty:
        return d
    return Density.val(d.rank + 1, 0)


@dataclass(frozen=True)
class CornerDescriptor:
    """Blocks of an end-periodic order P-*w^star + M + P+*w.

    Each entry is the density of one bounded discrete summand; an empty
    periodic block means the corresponding corner is absent.
    """

    minus_block: Tuple[Density, ...]
    middle: Tuple[Density, ...]
    plus_block: Tuple[Density, ...]

    def __init__(self, minus_block=(), middle=(), plus_block=()):
        for d in (*minus_block, *middle, *plus_block):
            if d.is_infinite:
                raise NonScatteredOperand(
                    "density undefined for non-scattered operand"
                )
        object.__setattr__(self, "minus_block", tuple(minus_block))
        object.__setattr__(self, "middle", tuple(middle))
        object.__setattr__(self, "plus_block", tuple(plus_block))


def corner_combine(desc: CornerDescriptor) -> Density:
    """max of the two corner densities and the bounded middle density."""
    d_minus = omega_mult_density(dot_sum_all(desc.minus_block))
    d_plus = omega_mult_density(dot_sum_all(desc.plus_block))
    d_mid = dot_sum_all(desc.middle)
    return max(d_minus, d_mid, d_plus)


def msb_density_combine(
    middles: Sequence[Density], corners: Sequence[Density]
) -> Density:
    """Density of a scattered box from its four middle blocks and the
    (already omega-multiplied) corner values."""
    return max(dot_sum_all(middles), *corners, Density.empty())


# ---------------------------------------------------------------------------
# Order terms

@dataclass(frozen=True)
class OrderTerm:
    pass


@dataclass(frozen=True)
class Zero(OrderTerm):
    pass


@dataclass(frozen=True)
class One(OrderTerm):
    pass


@dataclass(frozen=True)
class Fin(OrderTerm):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Fin needs n >= 0")


@dataclass(frozen=True)
class Sum(OrderTerm):
    parts: Tuple[OrderTerm, ...]

    def __init__(self, *parts: OrderTerm):
        flat = []
        for p in parts:
            if isinstance(p, (tuple, list)):
                flat.extend(p)
            else:
                flat.append(p)
        object.__setattr__(self, "parts", tuple(flat))


@dataclass(frozen=True)
class OmegaProd(OrderTerm):
    arg: OrderTerm


@dataclass(frozen=True)
class OmegaStarProd(OrderTerm):
    arg: OrderTerm


@dataclass(frozen=True)
class Shuffle(OrderTerm):
    args: Tuple[OrderTerm, ...]

    def __init__(self, args: Iterable[OrderTerm]):
        args = tuple(args)
        if not args:
            raise ValueError("shuffle over an empty argument list is forbidden")
        object.__setattr__(self, "args", args)


def term_is_scattered(t: OrderTerm) -> bool:
    if isinstance(t, Shuffle):
        return False
    if isinstance(t, Sum):
        return all(term_is_scattered(p) for p in t.parts)
    if isinstance(t, (OmegaProd, OmegaStarProd)):
        return term_is_scattered(t.arg)
    return True


def _flatten(t: OrderTerm) -> list:
    """Flatten a term into a list of non-sum atoms, dropping zeroes."""
    if isinstance(t, Sum):
        out = []
        for p in t.parts:
            out.extend(_flatten(p))
        return out
    if isinstance(t, Zero):
        return []
    if isinstance(t, One):
        return [Fin(1)]
    if isinstance(t, Fin):
        return [] if t.n == 0 else [t]
    if isinstance(t, OmegaProd):
        arg = normalize_term(t.arg)
        return [] if isinstance(arg, Zero) else [OmegaProd(arg)]
    if isinstance(t, OmegaStarProd):
        arg = normalize_term(t.arg)
        return [] if isinstance(arg, Zero) else [OmegaStarProd(arg)]
    if isinstance(t, Shuffle):
        return [Shuffle(tuple(normalize_term(a) for a in t.args))]
    raise UnsupportedTermShape(f"unsupported term shape: {t!r}")


def normalize_term(t: OrderTerm) -> OrderTerm:
    """Normal form: flat sums, fused finite runs, finite pieces absorbed
    into an adjacent product over a nonempty bounded discrete argument
    (n + T*w = T*w and T*w^star + n = T*w^star for such T)."""
    atoms = _flatten(t)
    out: list = []
    for a in atoms:
        if out and isinstance(out[-1], Fin) and isinstance(a, Fin):
            out[-1] = Fin(out[-1].n + a.n)
        elif out and isinstance(out[-1], Fin) and isinstance(a, OmegaProd):
            out[-1] = a
        elif out and isinstance(out[-1], OmegaStarProd) and isinstance(a, Fin):
            pass
        else:
            out.append(a)
    if not out:
        return Zero()
    if len(out) == 1:
        return out[0]
    return Sum(*out)


def term_text(t: OrderTerm) -> str:
    t = normalize_term(t)

    def atom(a) -> str:
        if isinstance(a, Fin):
            return str(a.n)
        if isinstance(a, OmegaProd):
            inner = normalize_term(a.arg)
            if inner == Fin(1):
                return "w"
            return f"({term_text(inner)})w"
        if isinstance(a, OmegaStarProd):
            inner = normalize_term(a.arg)
            if inner == Fin(1):
                return "w*"
            return f"({term_text(inner)})w*"
        if isinstance(a, Shuffle):
            return "sh(" + ",".join(term_text(x) for x in a.args) + ")"
        raise UnsupportedTermShape(f"unsupported term shape: {a!r}")

    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Sum):
        return "+".join(atom(p) for p in t.parts)
    return atom(t)


# ---------------------------------------------------------------------------
# Density evaluation by symbolic Hausdorff condensation.
#
# A term is compiled to a normal form: a list of items
#   ("F", n)      n consecutive points
#   ("UP", nf)    nf repeated w times, ascending
#   ("DOWN", nf)  nf repeated w^star times, descending
# condensing once maps the list to the list of its ~1-classes.

_NF = list


def _to_nf(t: OrderTerm) -> _NF:
    t = normalize_term(t)
    atoms = t.parts if isinstance(t, Sum) else ([] if isinstance(t, Zero) else [t])
    nf: _NF = []
    for a in atoms:
        if isinstance(a, Fin):
            nf.append(("F", a.n))
        elif isinstance(a, OmegaProd):
            inner = _to_nf(a.arg)
            if inner:
                nf.append(("UP", inner))
        elif isinstance(a, OmegaStarProd):
            inner = _to_nf(a.arg)
            if inner:
                nf.append(("DOWN", inner))
        else:
            raise UnsupportedTermShape(f"unsupported term shape: {a!r}")
    return nf


def _nf_is_finite(nf: _NF) -> bool:
    return all(kind == "F" for kind, _ in nf)


def _nf_count(nf: _NF) -> int:
    return sum(n for _, n in nf)


def _drop_first_point(nf: _NF) -> _NF:
    kind, payload = nf[0]
    rest = nf[1:]
    if kind == "F":
        return ([("F", payload - 1)] if payload > 1 else []) + rest
    if kind == "UP":
        # peel one copy: V*w = V + V*w, then drop from the peeled copy
        return _drop_first_point(list(payload)) + [("UP", payload)] + rest
    raise UnsupportedTermShape("order has no first point")


def _drop_last_point(nf: _NF) -> _NF:
    kind, payload = nf[-1]
    front = nf[:-1]
    if kind == "F":
        return front + ([("F", payload - 1)] if payload > 1 else [])
    if kind == "DOWN":
        return front + [("DOWN", payload)] + _drop_last_point(list(payload))
    raise UnsupportedTermShape("order has no last point")


def _condense_item(kind: str, payload) -> tuple:
    """Quotient of a single item, with (left, right) end-class finiteness."""
    if kind == "F":
        return [("F", 1)], True, True
    inner: _NF = payload
    if _nf_is_finite(inner):
        # finitely many points repeated: one infinite class
        return [("F", 1)], (kind == "UP"), (kind == "DOWN")
    q, lf, rf = _condense1(inner)
    if kind == "UP":
        if rf and lf:
            # the last class of each copy merges with the next copy's first
            return [("F", 1), ("UP", _drop_first_point(q))], lf, False
        return [("UP", q)], lf, False
    else:
        if rf and lf:
            return [("DOWN", _drop_last_point(q)), ("F", 1)], False, rf
        return [("DOWN", q)], False, rf


def _condense1(nf: _NF) -> tuple:
    """One Hausdorff condensation step; returns (quotient, first-class and
    last-class finiteness as point sets)."""
    pieces = [_condense_item(kind, payload) for kind, payload in nf]
    items, lf, rf = list(pieces[0][0]), pieces[0][1], pieces[0][2]
    for nxt_items, nxt_lf, nxt_rf in pieces[1:]:
        if rf and nxt_lf:
            merged = _drop_first_point(list(nxt_items))
            items = items + merged
        else:
            items = items + list(nxt_items)
        rf = nxt_rf
    return items, lf, rf


def density_of_scattered_term(t: OrderTerm) -> Density:
    """Exact density of the order denoted by a shuffle-free term."""
    if not term_is_scattered(t):
        return Density.infinite()
    nf = _to_nf(t)
    if not nf:
        return Density.empty()
    rank = 0
    while not _nf_is_finite(nf):
        nf, _, _ = _condense1(nf)
        rank += 1
        if rank > 64:
            raise UnsupportedTermShape("condensation did not terminate")
    return Density.val(rank, _nf_count(nf) - 1)


def term_dot_sum(t1: OrderTerm, t2: OrderTerm) -> OrderTerm:
    """Dot sum of two order terms: t2's minimum is identified with t1's
    maximum, so one point is removed at the junction."""
    t1n, t2n = normalize_term(t1), normalize_term(t2)
    if isinstance(t1n, Zero):
        return t2n
    if isinstance(t2n, Zero):
        return t1n
    atoms = t2n.parts if isinstance(t2n, Sum) else (t2n,)
    head = atoms[0]
    if isinstance(head, Fin):
        rest = (Fin(head.n - 1),) + atoms[1:] if head.n > 1 else atoms[1:]
    elif isinstance(head, OmegaProd):
        # removing the minimum of T*w (T bounded discrete) is an isomorphism
        rest = atoms
    else:
        raise UnsupportedTermShape("dot sum needs a minimum on the right")
    return normalize_term(Sum(t1n, *rest))
