"""The standard example algebras used throughout the test suite."""

from __future__ import annotations

from .presentation import Presentation, Quiver, path_from_display


def gp(n: int, m: int) -> Presentation:
    """One vertex, two loops a and b, relations ab, ba, a^n, b^m."""
    if n < 2 or m < 2:
        raise ValueError("gp needs n, m >= 2")
    quiver = Quiver(("v",), (("a", "v", "v"), ("b", "v", "v")))
    rels = [
        path_from_display(["a", "b"]),
        path_from_display(["b", "a"]),
        path_from_display(["a"] * n),
        path_from_display(["b"] * m),
    ]
    return Presentation(quiver, rels)


def lambda2() -> Presentation:
    """v1 => v2 -> v3 => v4 with relations cb, dc; domestic."""
    quiver = Quiver(
        ("v1", "v2", "v3", "v4"),
        (
            ("a", "v1", "v2"),
            ("b", "v1", "v2"),
            ("c", "v2", "v3"),
            ("d", "v3", "v4"),
            ("e", "v3", "v4"),
        ),
    )
    rels = [path_from_display(["c", "b"]), path_from_display(["d", "c"])]
    return Presentation(quiver, rels)


def gamma1() -> Presentation:
    """The H-equivalence example: rho = {ae, bd, bce}."""
    quiver = Quiver(
        ("v1", "v2", "v3", "v4"),
        (
            ("e", "v2", "v1"),
            ("d", "v2", "v3"),
            ("c", "v1", "v3"),
            ("b", "v3", "v4"),
            ("a", "v1", "v4"),
        ),
    )
    rels = [
        path_from_display(["a", "e"]),
        path_from_display(["b", "d"]),
        path_from_display(["b", "c", "e"]),
    ]
    return Presentation(quiver, rels)


def gamma_n(n: int) -> Presentation:
    """The stable-rank w*n family: a loop plus a b1/b2 two-cycle at v1-v2,
    then a ladder of c_i arrows and d_i/e_i parallel pairs."""
    if n < 2:
        raise ValueError("gamma_n needs n >= 2")
    vertices = tuple(f"v{i}" for i in range(1, 2 * n + 2))
    arrows = [
        ("a", "v1", "v1"),
        ("b2", "v1", "v2"),
        ("b1", "v2", "v1"),
    ]
    rels = [
        path_from_display(["a", "b1"]),
        path_from_display(["b2", "a"]),
        path_from_display(["a", "a"]),
        path_from_display(["b1", "b2"] * 3),
    ]
    for i in range(1, n):
        src_c = "v2" if i == 1 else f"v{2 * i}"
        arrows.append((f"c{i}", src_c, f"v{2 * i + 1}"))
        arrows.append((f"d{i}", f"v{2 * i + 1}", f"v{2 * i + 2}"))
        arrows.append((f"e{i}", f"v{2 * i + 1}", f"v{2 * i + 2}"))
        rels.append(path_from_display([f"d{i}", f"c{i}"]))
    rels.append(path_from_display(["c1", "b2"]))
    for i in range(1, n - 1):
        rels.append(path_from_display([f"c{i + 1}", f"d{i}"]))
    return Presentation(Quiver(vertices, tuple(arrows)), rels)


def gamma2() -> Presentation:
    """gamma_n(2) with the paper's arrow names c, d, e."""
    quiver = Quiver(
        ("v1", "v2", "v3", "v4"),
        (
            ("a", "v1", "v1"),
            ("b2", "v1", "v2"),
            ("b1", "v2", "v1"),
            ("c", "v2", "v3"),
            ("d", "v3", "v4"),
            ("e", "v3", "v4"),
        ),
    )
    rels = [
        path_from_display(["a", "b1"]),
        path_from_display(["b2", "a"]),
        path_from_display(["a", "a"]),
        path_from_display(["b1", "b2"] * 3),
        path_from_display(["c", "b2"]),
        path_from_display(["d", "c"]),
    ]
    return Presentation(quiver, rels)


def a2() -> Presentation:
    """Two vertices, one arrow; no bands anywhere."""
    return Presentation(Quiver(("v1", "v2"), (("a", "v1", "v2"),)), [])
