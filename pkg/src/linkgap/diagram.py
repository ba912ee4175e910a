"""Planar-diagram engine for standard 4-plat and 3-pretzel pictures.

Words are drawn the classical way: odd positions twist the two right-hand
strands (horizontal regions), even positions twist the two bottom strands
(vertical regions); odd-length words take the numerator closure, even-length
words the denominator closure.  Pretzels are three vertical twist columns
chained left to right and closed top and bottom.

Each crossing is an X with ports 0=NW, 1=SW, 2=SE, 3=NE in counterclockwise
order; the strand through ports 0-2 is "diagonal 0", through 1-3
"diagonal 1", and `over[c]` records which diagonal is on top.  From the arcs
and this rotation system the module derives faces, the checkerboard
colouring, Goeritz matrices, the Gordon-Litherland correction term, strand
orientations, crossing signs and linking numbers -- all in exact integer /
rational arithmetic.  Sign conventions were fixed once against known
determinant, signature and linking values and are validated by the test
suite; mirror-image ambiguity is harmless because only absolute values are
exposed upstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conway import PretzelWord, RationalWord

# Which diagonal lies on top in a positive twist, per region orientation.
# Together these make all-positive words alternating; flipping both mirrors
# the diagram, which no exposed quantity can see.
_H_PLUS_OVER = 0
_V_PLUS_OVER = 0

# Port coordinates used for crossing-sign cross products.
_PORT_VEC = {0: (-1, 1), 1: (-1, -1), 2: (1, -1), 3: (1, 1)}


@dataclass
class Diagram:
    over: list[int]              # over diagonal (0 or 1) per crossing
    arcs: list[tuple[int, int]]  # unordered pairs of half-edge ids (4*c + port)
    free_circles: int            # crossingless components

    @property
    def n_crossings(self) -> int:
        return len(self.over)


class _Plumbing:
    """Incremental wiring helper; junctions are negative node ids.

    Junction chains may contain parallel edges (a crossingless circle through
    two junctions, say), so the walks below track edge ids, not neighbours.
    """

    def __init__(self):
        self.over: list[int] = []
        self._adj: dict[int, list[tuple[int, int]]] = {}  # node -> (peer, edge id)
        self._next_junction = -1
        self._next_edge = 0

    def junction(self) -> int:
        j = self._next_junction
        self._next_junction -= 1
        self._adj[j] = []
        return j

    def crossing(self, over_diag: int) -> int:
        c = len(self.over)
        self.over.append(over_diag)
        for port in range(4):
            self._adj[4 * c + port] = []
        return c

    def connect(self, a: int, b: int) -> None:
        e = self._next_edge
        self._next_edge += 1
        self._adj[a].append((b, e))
        self._adj[b].append((a, e))

    def finish(self) -> Diagram:
        # Contract junction chains into arcs between half-edges; junction-only
        # cycles are crossingless circles.
        for node, nbrs in self._adj.items():
            expect = 1 if node >= 0 else 2
            if len(nbrs) != expect:
                raise AssertionError(f"node {node} has degree {len(nbrs)}")
        arcs = []
        seen_edges = set()
        for he in (n for n in self._adj if n >= 0):
            cur, edge = self._adj[he][0]
            if edge in seen_edges:
                continue
            seen_edges.add(edge)
            while cur < 0:
                cur, edge = next(
                    (peer, e) for peer, e in self._adj[cur] if e not in seen_edges
                )
                seen_edges.add(edge)
            arcs.append((he, cur))
        circles = 0
        for j in (n for n in self._adj if n < 0):
            start = next((e for _, e in self._adj[j] if e not in seen_edges), None)
            if start is None:
                continue
            circles += 1
            cur, edge = self._adj[j][0] if self._adj[j][0][1] == start else self._adj[j][1]
            seen_edges.add(edge)
            while cur != j or any(e not in seen_edges for _, e in self._adj[cur]):
                nxt = next(
                    ((peer, e) for peer, e in self._adj[cur] if e not in seen_edges),
                    None,
                )
                if nxt is None:
                    break
                cur, edge = nxt
                seen_edges.add(edge)
        return Diagram(self.over, arcs, circles)


def _twist_over(horizontal: bool, positive: bool) -> int:
    base = _H_PLUS_OVER if horizontal else _V_PLUS_OVER
    return base if positive else 1 - base


def build_rational_diagram(word: RationalWord) -> Diagram:
    """Standard 4-plat diagram of a Conway word (any integer entries)."""
    pl = _Plumbing()
    nw, ne = pl.junction(), pl.junction()
    sw, se = pl.junction(), pl.junction()
    pl.connect(nw, ne)
    pl.connect(sw, se)
    for pos, a in enumerate(word):
        horizontal = pos % 2 == 0
        over = _twist_over(horizontal, a > 0)
        for _ in range(abs(a)):
            c = pl.crossing(over)
            if horizontal:
                pl.connect(ne, 4 * c + 0)
                pl.connect(se, 4 * c + 1)
                ne, se = 4 * c + 3, 4 * c + 2
            else:
                pl.connect(sw, 4 * c + 0)
                pl.connect(se, 4 * c + 3)
                sw, se = 4 * c + 1, 4 * c + 2
    if len(word) % 2 == 1:
        pl.connect(nw, ne)
        pl.connect(sw, se)
    else:
        pl.connect(nw, sw)
        pl.connect(ne, se)
    return pl.finish()


def build_pretzel_diagram(cols: PretzelWord) -> Diagram:
    """Standard diagram of a 3-column pretzel."""
    pl = _Plumbing()
    tops, bottoms = [], []
    for a in cols:
        tl, tr = pl.junction(), pl.junction()
        sw, se = tl, tr
        over = _twist_over(False, a > 0)
        for _ in range(abs(a)):
            c = pl.crossing(over)
            pl.connect(sw, 4 * c + 0)
            pl.connect(se, 4 * c + 3)
            sw, se = 4 * c + 1, 4 * c + 2
        tops.append((tl, tr))
        bottoms.append((sw, se))
    for j in range(len(cols) - 1):
        pl.connect(tops[j][1], tops[j + 1][0])
        pl.connect(bottoms[j][1], bottoms[j + 1][0])
    pl.connect(tops[-1][1], tops[0][0])
    pl.connect(bottoms[-1][1], bottoms[0][0])
    return pl.finish()


# ---------------------------------------------------------------------------
# traversal: components, orientations, crossing signs


class _Traversal:
    def __init__(self, d: Diagram):
        self.d = d
        att = {}
        for h1, h2 in d.arcs:
            att[h1] = h2
            att[h2] = h1
        # comp[(c, diag)] and in_port[(c, diag)] per strand passage
        self.comp: dict[tuple[int, int], int] = {}
        self.in_port: dict[tuple[int, int], int] = {}
        self.passages: list[list[tuple[int, int]]] = []  # per component
        entered = set()
        for start in sorted(att):
            if start in entered:
                continue
            comp_id = len(self.passages)
            walk = []
            h = start
            while True:
                entered.add(h)
                c, p = divmod(h, 4)
                diag = p % 2
                self.comp[(c, diag)] = comp_id
                self.in_port[(c, diag)] = p
                walk.append((c, diag))
                out = 4 * c + (p + 2) % 4
                entered.add(out)  # the reverse direction enters here
                h = att[out]
                if h == start:
                    break
            self.passages.append(walk)

    def n_components(self) -> int:
        return len(self.passages) + self.d.free_circles

    def sign(self, c: int) -> int:
        over = self.d.over[c]
        under = 1 - over
        ox, oy = _direction(self.in_port[(c, over)])
        ux, uy = _direction(self.in_port[(c, under)])
        return 1 if ox * uy - oy * ux > 0 else -1


def _direction(in_port: int) -> tuple[int, int]:
    ix, iy = _PORT_VEC[in_port]
    ox, oy = _PORT_VEC[(in_port + 2) % 4]
    return ox - ix, oy - iy


def components(d: Diagram) -> int:
    if d.n_crossings == 0:
        return d.free_circles
    return _Traversal(d).n_components()


def linking_matrix(d: Diagram) -> list[list[Fraction]]:
    """Pairwise linking numbers (crossing components only, not free circles)."""
    tr = _Traversal(d)
    n = len(tr.passages)
    lk = [[Fraction(0)] * n for _ in range(n)]
    for c in range(d.n_crossings):
        i, j = tr.comp[(c, 0)], tr.comp[(c, 1)]
        if i != j:
            s = tr.sign(c)
            lk[i][j] += Fraction(s, 2)
            lk[j][i] += Fraction(s, 2)
    return lk


def total_linking_bound(d: Diagram) -> int:
    """Sum of |lk| over component pairs; a lower bound for unlinking."""
    lk = linking_matrix(d)
    total = Fraction(0)
    for i in range(len(lk)):
        for j in range(i + 1, len(lk)):
            total += abs(lk[i][j])
    if total.denominator != 1:
        raise AssertionError("non-integer linking number")
    return int(total)


def is_alternating(d: Diagram) -> bool:
    tr = _Traversal(d)
    for walk in tr.passages:
        if len(walk) < 2:
            continue
        overs = [d.over[c] == diag for c, diag in walk]
        for k in range(len(overs)):
            if overs[k] == overs[(k + 1) % len(overs)]:
                return False
    return True


# ---------------------------------------------------------------------------
# faces, checkerboard colouring, Goeritz matrix, Gordon-Litherland signature


def _faces(d: Diagram) -> tuple[list[int], int]:
    """Face id per half-edge, using next = rotate(other end of arc)."""
    att = {}
    for h1, h2 in d.arcs:
        att[h1] = h2
        att[h2] = h1
    face = [-1] * (4 * d.n_crossings)
    count = 0
    for start in range(4 * d.n_crossings):
        if face[start] != -1:
            continue
        h = start
        while face[h] == -1:
            face[h] = count
            o = att[h]
            c, p = divmod(o, 4)
            h = 4 * c + (p + 1) % 4
        count += 1
    return face, count


def _two_colour(d: Diagram, face: list[int], n_faces: int) -> list[int]:
    colour = [-1] * n_faces
    adj: dict[int, set[int]] = {i: set() for i in range(n_faces)}
    for h1, h2 in d.arcs:
        adj[face[h1]].add(face[h2])
        adj[face[h2]].add(face[h1])
    stack = [0]
    colour[0] = 0
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if colour[g] == -1:
                colour[g] = 1 - colour[f]
                stack.append(g)
            elif colour[g] == colour[f]:
                raise AssertionError("checkerboard colouring failed")
    return colour


def _corner_face(face: list[int], c: int, corner: int) -> int:
    # corner k sits between ports k and k+1; the face orbit through the
    # half-edge at port k+1 sweeps it.
    return face[4 * c + (corner + 1) % 4]


def _sym_signature(m: list[list[Fraction]]) -> int:
    """Signature (n+ minus n-) of a symmetric rational matrix, exactly."""
    n = len(m)
    m = [row[:] for row in m]
    alive = list(range(n))
    sig = 0
    while alive:
        pivot = next((i for i in alive if m[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in alive for j in alive if j != i and m[i][j] != 0),
                None,
            )
            if pair is None:
                break  # remaining block is zero
            i, j = pair
            for k in alive:  # row/col add makes a nonzero diagonal entry
                m[i][k] += m[j][k]
            for k in alive:
                m[k][i] += m[k][j]
            pivot = i
        d = m[pivot][pivot]
        sig += 1 if d > 0 else -1
        alive.remove(pivot)
        # Schur complement; the pivot row is left stale but never revisited.
        for i in alive:
            f = m[i][pivot] / d
            if f:
                for j in alive:
                    m[i][j] -= f * m[pivot][j]
    return sig


def _det(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            for c2 in range(col, n):
                m[r][c2] -= f * m[col][c2]
    return det


def _connected_pieces(d: Diagram) -> list[Diagram]:
    if d.n_crossings == 0:
        return []
    parent = list(range(d.n_crossings))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for h1, h2 in d.arcs:
        a, b = find(h1 // 4), find(h2 // 4)
        if a != b:
            parent[a] = b
    groups: dict[int, list[int]] = {}
    for c in range(d.n_crossings):
        groups.setdefault(find(c), []).append(c)
    if len(groups) == 1:
        return [Diagram(d.over, d.arcs, 0)]
    pieces = []
    for members in groups.values():
        index = {c: i for i, c in enumerate(members)}
        over = [d.over[c] for c in members]
        arcs = [
            (4 * index[h1 // 4] + h1 % 4, 4 * index[h2 // 4] + h2 % 4)
            for h1, h2 in d.arcs
            if h1 // 4 in index
        ]
        pieces.append(Diagram(over, arcs, 0))
    return pieces


def _goeritz(d: Diagram, face: list[int], colour: list[int], white: int):
    """Goeritz matrix (one face deleted) and correction term for one colour."""
    tr = _Traversal(d)
    white_faces = sorted(f for f in range(len(colour)) if colour[f] == white)
    index = {f: i for i, f in enumerate(white_faces)}
    n = len(white_faces)
    g = [[Fraction(0)] * n for _ in range(n)]
    mu = 0
    for c in range(d.n_crossings):
        corners = [_corner_face(face, c, k) for k in range(4)]
        if colour[corners[0]] == white:
            pair, axis_we = (corners[0], corners[2]), True
        else:
            pair, axis_we = (corners[1], corners[3]), False
        eta = -1 if axis_we == (d.over[c] == 0) else 1
        if eta == tr.sign(c):
            mu += eta
        u, v = index[pair[0]], index[pair[1]]
        if u != v:
            g[u][v] -= eta
            g[v][u] -= eta
            g[u][u] += eta
            g[v][v] += eta
    minor = [row[1:] for row in g[1:]]
    return minor, mu


def signature(d: Diagram) -> int:
    """Signed Gordon-Litherland signature; both colourings must agree."""
    total = 0
    for piece in _connected_pieces(d):
        face, n_faces = _faces(piece)
        if n_faces != piece.n_crossings + 2:
            raise AssertionError("Euler check failed on faces")
        colour = _two_colour(piece, face, n_faces)
        values = []
        for white in (0, 1):
            minor, mu = _goeritz(piece, face, colour, white)
            values.append(_sym_signature(minor) - mu)
        if values[0] != values[1]:
            raise AssertionError(f"colourings disagree: {values}")
        total += values[0]
    return total


def determinant(d: Diagram) -> int:
    """|det| of the link, from the Goeritz matrix."""
    result = 1
    for piece in _connected_pieces(d):
        face, n_faces = _faces(piece)
        colour = _two_colour(piece, face, n_faces)
        minor, _ = _goeritz(piece, face, colour, 0)
        value = _det(minor)
        if value.denominator != 1:
            raise AssertionError("non-integer Goeritz determinant")
        result *= abs(int(value))
    return result
