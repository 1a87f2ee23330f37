"""Algebra presentations: quiver, monomial relations and bisection.

Paths are stored rightmost-first (application order), so the path
written a b1 on paper is the tuple ("b1", "a").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .orders import StrangError

Path = Tuple[str, ...]  # arrow names, rightmost (first applied) first


class NoValidBisection(StrangError):
    pass


@dataclass(frozen=True)
class Quiver:
    vertices: Tuple[str, ...]
    arrows: Tuple[Tuple[str, str, str], ...]  # (name, source, target)

    def __post_init__(self):
        object.__setattr__(
            self, "_by_name", {name: (s, t) for name, s, t in self.arrows}
        )

    def source(self, arrow: str) -> str:
        return self._by_name[arrow][0]

    def target(self, arrow: str) -> str:
        return self._by_name[arrow][1]

    def has_arrow(self, arrow: str) -> bool:
        return arrow in self._by_name

    @property
    def arrow_names(self) -> List[str]:
        return [name for name, _, _ in self.arrows]

    def arrows_from(self, v: str) -> List[str]:
        return [name for name, s, _ in self.arrows if s == v]

    def arrows_into(self, v: str) -> List[str]:
        return [name for name, _, t in self.arrows if t == v]


def path_display(path: Path) -> Tuple[str, ...]:
    """Arrow names in paper display order, leftmost (last applied) first."""
    return tuple(reversed(path))


def path_from_display(names: Sequence[str]) -> Path:
    return tuple(reversed(tuple(names)))


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: FrozenSet[Path]
    binomial_relations: Tuple[Tuple[Path, str, Path], ...] = ()

    def __init__(self, quiver, relations=(), binomial_relations=()):
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "relations", frozenset(map(tuple, relations)))
        object.__setattr__(
            self, "binomial_relations", tuple(binomial_relations)
        )

    def path_is_composable(self, path: Path) -> bool:
        q = self.quiver
        if any(not q.has_arrow(a) for a in path):
            return False
        return all(
            q.source(path[i + 1]) == q.target(path[i])
            for i in range(len(path) - 1)
        )

    def max_relation_length(self) -> int:
        return max((len(r) for r in self.relations), default=2)


@dataclass(frozen=True)
class Bisection:
    sigma: Dict[str, int]
    epsilon: Dict[str, int]

    def __init__(self, sigma, epsilon):
        object.__setattr__(self, "sigma", dict(sigma))
        object.__setattr__(self, "epsilon", dict(epsilon))


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str) -> None:
        self.violations.append(msg)


def _two_letter_in_ideal(pres: Presentation, b: str, a: str) -> bool:
    """Whether the length-2 path ba lies in <rho> (i.e. ba is a relation)."""
    return (a, b) in pres.relations


def validate(pres: Presentation) -> ValidationReport:
    """Check the string-algebra axioms; violations are data, not errors."""
    rep = ValidationReport()
    q = pres.quiver
    seen = set()
    for name, s, t in q.arrows:
        if name in seen:
            rep.add(f"duplicate arrow name {name}")
        seen.add(name)
        for v in (s, t):
            if v not in q.vertices:
                rep.add(f"arrow {name} references unknown vertex {v}")
    for v in q.vertices:
        if len(q.arrows_from(v)) > 2:
            rep.add(f"outdegree > 2 at vertex {v}")
        if len(q.arrows_into(v)) > 2:
            rep.add(f"indegree > 2 at vertex {v}")

    for r in pres.relations:
        if len(r) < 2:
            rep.add(f"relation {'.'.join(path_display(r))} shorter than 2")
        elif not pres.path_is_composable(r):
            rep.add(f"relation {'.'.join(path_display(r))} is not a path")
    for r in pres.relations:
        for r2 in pres.relations:
            if r2 is r or len(r2) >= len(r):
                continue
            if any(
                r[i : i + len(r2)] == r2 for i in range(len(r) - len(r2) + 1)
            ):
                rep.add(
                    "relation has proper subrelation: "
                    f"{'.'.join(path_display(r2))} inside "
                    f"{'.'.join(path_display(r))}"
                )

    # unique continuation on both sides
    for a in q.arrow_names:
        conts = [
            b
            for b in q.arrow_names
            if q.source(b) == q.target(a) and not _two_letter_in_ideal(pres, b, a)
        ]
        if len(conts) > 1:
            rep.add(f"arrow {a} has two continuations {sorted(conts)}")
        pre = [
            b
            for b in q.arrow_names
            if q.target(b) == q.source(a) and not _two_letter_in_ideal(pres, a, b)
        ]
        if len(pre) > 1:
            rep.add(f"arrow {a} has two predecessors {sorted(pre)}")

    if not _admissible(pres):
        rep.add("ideal not admissible (a direct cycle avoids all relations)")
    return rep


def _admissible(pres: Presentation) -> bool:
    """Bounded certificate: the ideal is admissible iff the digraph of
    relation-free direct-path windows (last max-relation-length - 1
    arrows) is acyclic, i.e. no direct cycle avoids all relations."""
    q = pres.quiver
    window = max(1, pres.max_relation_length() - 1)

    def step(state: Path, b: str) -> Optional[Path]:
        if q.source(b) != q.target(state[-1]):
            return None
        new = state + (b,)
        for rl in range(2, len(new) + 1):
            if new[len(new) - rl :] in pres.relations:
                return None
        return new[-window:]

    color: Dict[Path, int] = {}  # 1 = on stack, 2 = done

    def has_cycle(state: Path) -> bool:
        color[state] = 1
        for b in q.arrow_names:
            nxt = step(state, b)
            if nxt is None:
                continue
            c = color.get(nxt)
            if c == 1:
                return True
            if c is None and has_cycle(nxt):
                return True
        color[state] = 2
        return False

    return not any(
        has_cycle((a,)) for a in q.arrow_names if (a,) not in color
    )


def compute_bisection(
    pres: Presentation, supplied: Optional[Bisection] = None
) -> Bisection:
    """Deterministic valid sigma/epsilon assignment, or verification of a
    supplied one.  Constraint propagation over:
      s(a1)=s(a2) => sigma(a1) = -sigma(a2)
      t(a1)=t(a2) => epsilon(a1) = -epsilon(a2)
      t(a1)=s(a2), a2a1 not in <rho> => sigma(a2) = -epsilon(a1)
    """
    q = pres.quiver
    # variables: ("s", a) and ("e", a); constraints var1 = -var2
    constraints: List[Tuple[Tuple[str, str], Tuple[str, str]]] = []
    names = q.arrow_names
    for i, a1 in enumerate(names):
        for a2 in names[i + 1 :]:
            if q.source(a1) == q.source(a2):
                constraints.append((("s", a1), ("s", a2)))
            if q.target(a1) == q.target(a2):
                constraints.append((("e", a1), ("e", a2)))
    for a1 in names:
        for a2 in names:
            if q.target(a1) == q.source(a2) and not _two_letter_in_ideal(
                pres, a2, a1
            ):
                constraints.append((("s", a2), ("e", a1)))

    assign: Dict[Tuple[str, str], int] = {}
    if supplied is not None:
        for a in names:
            if a not in supplied.sigma or a not in supplied.epsilon:
                raise NoValidBisection(f"supplied bisection misses arrow {a}")
            assign[("s", a)] = supplied.sigma[a]
            assign[("e", a)] = supplied.epsilon[a]
        for u, v in constraints:
            if assign[u] != -assign[v]:
                raise NoValidBisection(
                    f"supplied bisection violates {u} = -{v}"
                )
        return supplied

    adj: Dict[Tuple[str, str], List[Tuple[str, str]]] = {}
    for u, v in constraints:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    # lexicographically least valid assignment: visit arrows by name,
    # prefer +1, propagate the opposite sign along constraint edges
    for a in sorted(names):
        for var in (("s", a), ("e", a)):
            if var in assign:
                continue
            stack = [(var, 1)]
            while stack:
                u, val = stack.pop()
                if u in assign:
                    if assign[u] != val:
                        raise NoValidBisection("no valid bisection")
                    continue
                assign[u] = val
                for nb in adj.get(u, []):
                    stack.append((nb, -val))
    return Bisection(
        sigma={a: assign[("s", a)] for a in names},
        epsilon={a: assign[("e", a)] for a in names},
    )


def reduce_biserial(pres: Presentation) -> Presentation:
    """Syntactic special-biserial reduction: each binomial p = lambda q
    contributes both p and q as monomial relations."""
    if not pres.binomial_relations:
        return pres
    q = pres.quiver
    new_rels = set(pres.relations)
    for p, _tag, r in pres.binomial_relations:
        for path in (p, r):
            if not pres.path_is_composable(path) or len(path) < 2:
                raise StrangError(
                    f"binomial side {'.'.join(path_display(path))} is not a path"
                )
        if (
            q.source(p[0]) != q.source(r[0])
            or q.target(p[-1]) != q.target(r[-1])
        ):
            raise StrangError("binomial sides do not share source and target")
        new_rels.add(p)
        new_rels.add(r)
    return Presentation(pres.quiver, new_rels, ())
