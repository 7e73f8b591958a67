"""Form A skew diagrams and the letter bounds their fillings satisfy.

A skew diagram is of form A for a given p when it has at most p columns, its
middle columns (2 through p - 1) all end at a common row m, column 1 splits
into a body part (rows up to m) and a tail hanging directly below row m, and
column p is a head of g <= m boxes at the top. Semistandard lattice fillings
of such diagrams satisfy letter bounds that drive the feasibility analysis
of restriction chains:

  * a body box in column k forces its letter to appear at least p - k times
    in the reading-word prefix ending at that box,
  * a body box in column k <= p - 2 is bounded above by the position of its
    right neighbour within column k + 1,
  * writing gamma_i for the number of letters used at least i times and h_k
    for the body height of column k, every filling satisfies
    gamma_{p-k} >= h_k for all k, and gamma_{p-k+2} <= h_k for k >= 2.

verify_form_A_bounds checks all of these exhaustively on every form A
diagram up to a box budget.
"""

from dataclasses import dataclass

from .tableaux import SkewShape, SkewTableau, _walk_fillings

__all__ = [
    "FormADecomposition",
    "FormABoundsReport",
    "classify_form_A",
    "verify_form_A_bounds",
]


@dataclass(frozen=True)
class FormADecomposition:
    """Body, tail and head box counts of a form A diagram.

    m is the one based index of the common last row of the middle columns;
    for degenerate shapes without middle boxes it is the last row reached by
    the widest prefix of nonempty columns, and 0 for the empty shape.
    """

    p: int
    m: int
    body_boxes: int
    tail_height: int
    head_height: int


def classify_form_A(shape, p):
    """Return the FormADecomposition of shape for p columns, else None.

    None means the shape is not of form A: it is wider than p columns, its
    middle columns end at different rows, the tail does not start directly
    under row m, or the head reaches below the body.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    if shape.num_columns() > p:
        return None
    cols = [shape.column_rows(c) for c in range(p)]
    middles = [rows for rows in cols[1 : p - 1] if rows]
    if middles:
        ends = {rows[-1] for rows in middles}
        if len(ends) != 1:
            return None
        m = ends.pop() + 1
    else:
        # no middle boxes: take the last row of the widest nonempty prefix
        m = 0
        for rows in cols:
            if not rows:
                break
            m = max(m, rows[-1] + 1)
    col1 = cols[0]
    tail = [row for row in col1 if row >= m]
    body1 = [row for row in col1 if row < m]
    if tail and tail[0] != m:
        return None
    head = cols[p - 1]
    if middles and head and head[-1] >= m:
        return None
    body_boxes = len(body1) + sum(len(rows) for rows in middles)
    return FormADecomposition(
        p=p,
        m=m,
        body_boxes=body_boxes,
        tail_height=len(tail),
        head_height=len(head),
    )


@dataclass(frozen=True)
class FormABoundsReport:
    p: int
    max_boxes: int
    shapes_checked: int
    tableaux_checked: int
    counterexamples: tuple


def _form_a_shapes(p, max_boxes):
    """Yield (shape, heights, m, tail, head) for form A diagrams up to budget.

    heights[k] is the body height of column k + 1 (zero based k). Skew
    geometry forces the body heights to increase weakly from left to right,
    so empty columns can only form a prefix; at least one middle column must
    be nonempty for the body depth m to be defined. When column 2 is empty,
    column 1 is forced to be pure tail, which the h0 <= heights[1] constraint
    yields on its own. Every value of m from max(head, last body height) up
    to their sum produces a distinct valid diagram; larger m would leave an
    empty row between head and body, which only translates the lower part of
    the diagram without changing reading words, column memberships or any of
    the checked bounds, so those duplicates are not generated.
    """
    mids = p - 2

    def mid_heights(budget, minimum, acc):
        if len(acc) == mids:
            if acc[-1] > 0:
                yield tuple(acc)
            return
        room = mids - len(acc) - 1
        for h in range(minimum, budget // (room + 1) + 1):
            yield from mid_heights(budget - h, h, acc + [h])

    for hs in mid_heights(max_boxes, 0, []):
        used_mid = sum(hs)
        for h0 in range(0, min(hs[0], max_boxes - used_mid) + 1):
            for t in range(0, max_boxes - used_mid - h0 + 1):
                for g in range(0, max_boxes - used_mid - h0 - t + 1):
                    for m in range(hs[-1], hs[-1] + g + 1):
                        if g > m:
                            continue
                        shape = _build_form_a(p, hs, h0, t, g, m)
                        yield shape, (h0,) + hs, m, t, g


def _build_form_a(p, hs, h0, t, g, m):
    """SkewShape with body heights (h0, hs...), tail t, head g, body depth m."""
    heights = (h0,) + hs  # columns 1 .. p-1
    outer, inner = [], []
    for row in range(1, m + t + 1):
        cols = []
        if row <= g:
            cols.append(p)
        if row <= m:
            for k in range(1, p):  # one based body columns
                if row > m - heights[k - 1]:
                    cols.append(k)
        elif row <= m + t:
            cols.append(1)
        outer.append(max(cols))
        inner.append(min(cols) - 1)
    return SkewShape(tuple(outer), tuple(inner))


def verify_form_A_bounds(p, max_boxes, tableau_ceiling=2_000_000):
    """Exhaustively test the form A letter bounds up to a box budget.

    Every form A diagram for p with at most max_boxes boxes and nonempty
    middle columns is generated, classify_form_A is checked against the
    construction parameters, and every semistandard lattice filling is
    tested against the prefix, right-neighbour and gamma bounds. Collects
    counterexamples (none are expected). Raises RuntimeError when the number
    of fillings exceeds tableau_ceiling rather than silently truncating.
    """
    if p < 3:
        raise ValueError("the bounds need p >= 3")
    shapes = tableaux = 0
    counterexamples = []
    for shape, heights, m, t, g in _form_a_shapes(p, max_boxes):
        shapes += 1
        deco = classify_form_A(shape, p)
        if (
            deco is None
            or deco.m != m
            or deco.body_boxes != sum(heights)
            or deco.tail_height != t
            or deco.head_height != g
        ):
            counterexamples.append(
                ("classification", shape.outer, shape.inner, deco)
            )
            continue
        spans = shape.row_spans()
        word_cells = [
            (i, col)
            for i, (a, b) in enumerate(spans)
            for col in range(b - 1, a - 1, -1)
        ]
        col_tops = {}
        for col in range(p):
            rows = shape.column_rows(col)
            if rows:
                col_tops[col] = rows[0]
        for filling in _walk_fillings(shape, None):
            tableaux += 1
            if tableaux > tableau_ceiling:
                raise RuntimeError(
                    f"more than {tableau_ceiling} fillings; raise the ceiling"
                )
            grid = {}
            for i, (a, b) in enumerate(spans):
                for col in range(a, b):
                    grid[i, col] = filling[i][col - a]
            problems = _check_filling_bounds(
                p, m, heights, grid, word_cells, col_tops
            )
            for label, detail in problems:
                counterexamples.append(
                    (label, shape.outer, shape.inner, filling, detail)
                )
                if len(counterexamples) >= 50:
                    return FormABoundsReport(
                        p, max_boxes, shapes, tableaux, tuple(counterexamples)
                    )
    return FormABoundsReport(p, max_boxes, shapes, tableaux, tuple(counterexamples))


def _check_filling_bounds(p, m, heights, grid, word_cells, col_tops):
    """All bound violations of one filling; empty list means compliant."""
    problems = []
    counts = {}
    for i, col in word_cells:
        e = grid[i, col]
        counts[e] = counts.get(e, 0) + 1
        in_body = i < m and col < p - 1
        if not in_body:
            continue
        k = col + 1  # one based column index
        if counts[e] < p - k:
            problems.append(
                ("prefix-count", (i, col, e, counts[e], p - k))
            )
        if k <= p - 2:
            right = grid.get((i, col + 1))
            if right is None:
                problems.append(("missing-neighbour", (i, col)))
            else:
                h = i - col_tops[col + 1] + 1
                if e > h:
                    problems.append(("right-neighbour", (i, col, e, h)))
    full = {}
    for e in grid.values():
        full[e] = full.get(e, 0) + 1

    def gamma_of(i):
        return sum(1 for c in full.values() if c >= i)

    for k in range(1, p):
        h = heights[k - 1]
        if gamma_of(p - k) < h:
            problems.append(("gamma-lower", (k, gamma_of(p - k), h)))
        if k >= 2 and gamma_of(p - k + 2) > h:
            problems.append(("gamma-upper", (k, gamma_of(p - k + 2), h)))
    return problems
