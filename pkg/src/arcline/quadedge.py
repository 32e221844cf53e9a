"""Quad-edge data structure (Guibas-Stolfi) for planar subdivisions.

Edges are integers.  Each undirected edge occupies a quadruple of slots:
slot 0 is the canonical directed edge, slot 1 its dual, slot 2 the reversed
edge, slot 3 the reversed dual.  Vertex origins are stored for the two
primal slots only.  `splice` is the single topology operator.
"""

from __future__ import annotations


def rot(e: int) -> int:
    return (e & ~3) | ((e + 1) & 3)


def sym(e: int) -> int:
    return e ^ 2


def invrot(e: int) -> int:
    return (e & ~3) | ((e + 3) & 3)


class QuadEdgeStore:
    __slots__ = ("onext", "org", "alive")

    def __init__(self):
        self.onext: list[int] = []
        self.org: list[int] = []  # vertex id at primal slots, -1 at dual slots
        self.alive: list[bool] = []  # one flag per quadruple

    def make_edge(self, a: int, b: int) -> int:
        """Create an isolated edge from vertex a to vertex b."""
        base = len(self.onext)
        e, erot, esym, etor = base, base + 1, base + 2, base + 3
        self.onext.extend((e, etor, esym, erot))
        self.org.extend((a, -1, b, -1))
        self.alive.append(True)
        return e

    def dest(self, e: int) -> int:
        return self.org[sym(e)]

    def set_org(self, e: int, v: int) -> None:
        self.org[e] = v

    def oprev(self, e: int) -> int:
        return rot(self.onext[rot(e)])

    def lnext(self, e: int) -> int:
        return rot(self.onext[invrot(e)])

    def lprev(self, e: int) -> int:
        return sym(self.onext[e])

    def rprev(self, e: int) -> int:
        return self.onext[sym(e)]

    def splice(self, a: int, b: int) -> None:
        onext = self.onext
        alpha = rot(onext[a])
        beta = rot(onext[b])
        onext[a], onext[b] = onext[b], onext[a]
        onext[alpha], onext[beta] = onext[beta], onext[alpha]

    def connect(self, a: int, b: int) -> int:
        """New edge from dest(a) to org(b) keeping both faces consistent."""
        e = self.make_edge(self.dest(a), self.org[b])
        self.splice(e, self.lnext(a))
        self.splice(sym(e), b)
        return e

    def delete_edge(self, e: int) -> None:
        self.splice(e, self.oprev(e))
        self.splice(sym(e), self.oprev(sym(e)))
        self.alive[e >> 2] = False

    def is_alive(self, e: int) -> bool:
        return self.alive[e >> 2]

    def primal_edges(self):
        """Yield one canonical directed edge per live undirected edge."""
        for q in range(len(self.alive)):
            if self.alive[q]:
                yield q << 2

    def ring(self, e: int) -> list[int]:
        """Edges around org(e) in counterclockwise order, starting at e."""
        out = [e]
        cur = self.onext[e]
        while cur != e:
            out.append(cur)
            cur = self.onext[cur]
        return out

    def face_cycle(self, e: int) -> list[int]:
        """Edges of the left face of e, walked via lnext."""
        out = [e]
        cur = self.lnext(e)
        while cur != e:
            out.append(cur)
            cur = self.lnext(cur)
        return out
