"""Rank-two Cartan graphs built from quiddity sequences, and their frieze patterns."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import SemiCartanGraph, generate_groupoid
from .errors import BudgetExceeded, InconsistentQuiddity, NotFinite, PreconditionViolated


@dataclass(frozen=True)
class QuidditySequence:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @classmethod
    def parse(cls, text: str):
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    def __len__(self):
        return len(self.entries)

    def rotations(self):
        e = self.entries
        return [e[k:] + e[:k] for k in range(len(e))]


@dataclass(frozen=True)
class FriezePattern:
    """Rows of a frieze; odd rows are offset by half a step to the right."""
    rows: tuple

    def __str__(self):
        width = max(len(str(v)) for row in self.rows for v in row)
        lines = []
        for r, row in enumerate(self.rows):
            pad = " " * ((width + 1) // 2) if r % 2 else ""
            lines.append(pad + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)


def cartan_graph_from_quiddity(q) -> SemiCartanGraph:
    """Cycle of ``len(q)`` vertices named ``1..n``.

    Edge ``k`` joins vertex ``k`` to vertex ``k+1`` (cyclically), has color 1
    for odd ``k`` and color 2 for even ``k`` (0-based colors 0 and 1), and
    carries the value ``q_k``.  At each vertex the entry ``-a_12`` is the value
    of its color-1 edge and ``-a_21`` the value of its color-2 edge, so (CG2)
    holds by construction.
    """
    if not isinstance(q, QuidditySequence):
        q = QuidditySequence(tuple(q))
    e = q.entries
    n = len(e)
    if n < 4:
        raise InconsistentQuiddity("a cycle needs at least four entries", e)
    if n % 2:
        raise InconsistentQuiddity("colors cannot alternate around an odd cycle", e)
    if any(v < 1 for v in e):
        raise InconsistentQuiddity("quiddity entries must be positive", e)
    names = [str(k) for k in range(1, n + 1)]
    gcm = {}
    edges = []
    for k in range(1, n + 1):
        prev = n if k == 1 else k - 1
        if k % 2:
            c1, c2 = e[k - 1], e[prev - 1]
        else:
            c1, c2 = e[prev - 1], e[k - 1]
        gcm[names[k - 1]] = [[2, -c1], [-c2, 2]]
        edges.append((names[k - 1], names[k % n], 0 if k % 2 else 1))
    return SemiCartanGraph.from_edges(2, gcm, edges, names)


def _slope_order(roots, a, b):
    return sorted(roots, key=lambda v: Fraction(v[b], v[a] + v[b]))


def frieze_from_cartan_graph(G: SemiCartanGraph, base=None, width=15, W=None) -> FriezePattern:
    """Frieze whose diagonals list root coefficients, walking the cycle from ``base``.

    At the ``k``-th vertex of the walk, ``a`` is the color of the step forward
    and ``b`` the other color; the positive roots ordered from ``alpha_a`` to
    ``alpha_b`` give the ``alpha_a`` coefficients on one diagonal and the
    ``alpha_b`` coefficients on the next.
    """
    if G.theta != 2 or not G.is_loopless() or not G.is_connected():
        raise PreconditionViolated("needs a connected loopless rank-two graph")
    if base is None:
        base = G.vertices[0]
    if W is None:
        try:
            W = generate_groupoid(G)
        except BudgetExceeded as exc:
            raise NotFinite("Weyl groupoid does not close under the budget", exc.witness) from exc
    pos = W.positive_roots()
    walk = [base]
    colors = []
    color = 0
    while True:
        nxt = G.r(walk[-1], color)
        colors.append(color)
        if nxt == base:
            break
        walk.append(nxt)
        color = 1 - color
    n = len(walk)
    depth = len(pos[base]) + 1
    diags = {}

    def put(d, col):
        d %= n
        if diags.setdefault(d, col) != col:
            raise NotFinite("root columns of adjacent vertices disagree", (d, diags[d], col))

    for k, x in enumerate(walk):
        a = colors[k]
        b = 1 - a
        R = _slope_order(pos[x], a, b)
        if len(R) + 1 != depth:
            raise NotFinite("positive root counts differ between vertices", x)
        put(k, (0,) + tuple(v[a] for v in R))
        put(k + 1, tuple(v[b] for v in R) + (0,))
    rows = []
    for r in range(depth):
        count = width if r % 2 == 0 else width - 1
        rows.append(tuple(diags[(x - r // 2) % n][r] for x in range(count)))
    return FriezePattern(tuple(rows))


def _entry(rows, r, x):
    """Value at row ``r`` and horizontal position ``x`` (half-integers on odd rows)."""
    k = x if r % 2 == 0 else x - 0.5
    if k != int(k) or not 0 <= k < len(rows[r]):
        return None
    return rows[r][int(k)]


def verify_conway_coxeter(p: FriezePattern) -> bool:
    """Every complete diamond satisfies ``left*right - top*bottom = 1``; interior entries are positive."""
    rows = p.rows
    if len(rows) < 3:
        return False
    for r in range(1, len(rows) - 1):
        if any(v <= 0 for v in rows[r]):
            return False
    for r in range(1, len(rows) - 1):
        for k in range(len(rows[r])):
            x = k if r % 2 == 0 else k + 0.5
            # the diamond with (r, x) on the left and (r, x + 1) on the right
            left, right = _entry(rows, r, x), _entry(rows, r, x + 1)
            top, bottom = _entry(rows, r - 1, x + 0.5), _entry(rows, r + 1, x + 0.5)
            if None in (left, right, top, bottom):
                continue
            if left * right - top * bottom != 1:
                return False
    return True


def quiddity_row(p: FriezePattern, n: int) -> tuple:
    """The first interior row beyond the ones, truncated to one period of length ``n``."""
    return p.rows[2][:n]
