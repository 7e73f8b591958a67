"""Partitions, skew tableaux and Littlewood-Richardson coefficients.

Partitions are tuples of weakly decreasing positive integers; trailing zeros
are stripped on input, so () is the empty partition. All arithmetic is plain
Python integer arithmetic, which is exact at any size. Enumeration is
backtracking over fillings in reading-word order, where the semistandard and
lattice conditions can be checked incrementally.
"""

from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Partition",
    "SkewShape",
    "SkewTableau",
    "check_partition",
    "contains",
    "is_semistandard",
    "reading_word",
    "is_lattice_word",
    "satisfies_lattice_property",
    "content",
    "enumerate_lr_tableaux",
    "lr_coefficient",
    "lr_nonzero_contents",
    "gamma",
]

Partition = tuple


def check_partition(parts):
    """Normalize to a partition tuple, stripping trailing zeros.

    Raises ValueError on negative or increasing entries.
    """
    parts = tuple(int(x) for x in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, part in enumerate(parts):
        if part < 1:
            raise ValueError(f"partition entries must be nonnegative and weakly decreasing: {parts}")
        if i and parts[i - 1] < part:
            raise ValueError(f"partition entries must weakly decrease: {parts}")
    return parts


def contains(outer, inner):
    """Whether the diagram of inner sits inside the diagram of outer."""
    outer = check_partition(outer)
    inner = check_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer/inner with inner contained in outer."""

    outer: tuple
    inner: tuple

    def __post_init__(self):
        outer = check_partition(self.outer)
        inner = check_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if len(inner) > len(outer) or any(
            inner[i] > outer[i] for i in range(len(inner))
        ):
            raise ValueError(f"inner {inner} does not fit inside outer {outer}")

    @property
    def size(self):
        return sum(self.outer) - sum(self.inner)

    def inner_padded(self):
        return self.inner + (0,) * (len(self.outer) - len(self.inner))

    def row_spans(self):
        """Per row: the half open column span (start, end), zero based."""
        inner = self.inner_padded()
        return tuple((inner[i], self.outer[i]) for i in range(len(self.outer)))

    def cells(self):
        """All (row, col) cells, zero based, rows top down, left to right."""
        return tuple(
            (i, j)
            for i, (a, b) in enumerate(self.row_spans())
            for j in range(a, b)
        )

    def column_rows(self, col):
        """Zero based rows occupied in the given zero based column."""
        return tuple(i for i, (a, b) in enumerate(self.row_spans()) if a <= col < b)

    def num_columns(self):
        return self.outer[0] if self.outer else 0


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew shape; row i carries outer[i] - inner[i] letters."""

    shape: SkewShape
    filling: tuple

    def __post_init__(self):
        filling = tuple(tuple(int(x) for x in row) for row in self.filling)
        object.__setattr__(self, "filling", filling)
        spans = self.shape.row_spans()
        if len(filling) != len(spans):
            raise ValueError(
                f"filling has {len(filling)} rows, shape has {len(spans)}"
            )
        for i, (a, b) in enumerate(spans):
            if len(filling[i]) != b - a:
                raise ValueError(
                    f"row {i} needs {b - a} letters, got {len(filling[i])}"
                )
        for row in filling:
            for x in row:
                if x < 1:
                    raise ValueError(f"letters must be positive integers: {x}")

    def entry(self, row, col):
        """Letter at zero based (row, col); col counts within the diagram."""
        a, b = self.shape.row_spans()[row]
        if not a <= col < b:
            raise IndexError(f"no cell at {(row, col)}")
        return self.filling[row][col - a]


def is_semistandard(tableau):
    """Rows weakly increase left to right, columns strictly increase down."""
    spans = tableau.shape.row_spans()
    for i, row in enumerate(tableau.filling):
        for j in range(1, len(row)):
            if row[j] < row[j - 1]:
                return False
        if i:
            a_prev, b_prev = spans[i - 1]
            a, b = spans[i]
            for col in range(max(a, a_prev), min(b, b_prev)):
                if tableau.entry(i, col) <= tableau.entry(i - 1, col):
                    return False
    return True


def reading_word(tableau):
    """Letters read row by row top to bottom, each row right to left."""
    return tuple(x for row in tableau.filling for x in reversed(row))


def is_lattice_word(word):
    """Every prefix contains each letter i at least as often as i + 1."""
    counts = {}
    for letter in word:
        counts[letter] = counts.get(letter, 0) + 1
        if letter > 1 and counts[letter] > counts.get(letter - 1, 0):
            return False
    return True


def satisfies_lattice_property(tableau):
    """Whether the reading word of the tableau is a lattice word."""
    return is_lattice_word(reading_word(tableau))


def content(tableau):
    """Letter multiplicities of a lattice tableau, always a partition.

    Raises ValueError when the reading word is not a lattice word, since the
    multiplicity vector need not be a partition then.
    """
    word = reading_word(tableau)
    if not is_lattice_word(word):
        raise ValueError("content requires the lattice property")
    if not word:
        return ()
    counts = [0] * max(word)
    for letter in word:
        counts[letter - 1] += 1
    return check_partition(counts)


def _walk_fillings(shape, target=None):
    """Yield semistandard lattice fillings of shape as per-row tuples.

    Cells are filled in reading-word order, so the row, column and lattice
    conditions each involve only letters already placed. target None means
    any letter multiplicities; otherwise exactly the given partition.
    """
    spans = shape.row_spans()
    order = []
    for i, (a, b) in enumerate(spans):
        for col in range(b - 1, a - 1, -1):
            order.append((i, col))
    ncells = len(order)
    if target is not None and sum(target) != ncells:
        return
    nletters = len(target) if target is not None else ncells
    counts = [0] * (nletters + 2)
    remaining = list(target) if target is not None else None
    grid = {}

    def rec(k, max_used):
        if k == ncells:
            yield tuple(
                tuple(grid[i, col] for col in range(a, b))
                for i, (a, b) in enumerate(spans)
            )
            return
        i, col = order[k]
        lo = grid.get((i - 1, col), 0) + 1
        hi = grid.get((i, col + 1), nletters)
        if remaining is None and max_used + 1 < hi:
            hi = max_used + 1
        for e in range(lo, hi + 1):
            if remaining is not None and remaining[e - 1] == 0:
                continue
            if e > 1 and counts[e] >= counts[e - 1]:
                continue
            counts[e] += 1
            if remaining is not None:
                remaining[e - 1] -= 1
            grid[i, col] = e
            yield from rec(k + 1, max_used if e <= max_used else e)
            del grid[i, col]
            counts[e] -= 1
            if remaining is not None:
                remaining[e - 1] += 1

    yield from rec(0, 0)


def enumerate_lr_tableaux(shape, content):
    """All Littlewood-Richardson tableaux of the shape with given content.

    These are the semistandard fillings whose reading word is a lattice word
    with the given letter multiplicities. The result is sorted row major
    lexicographically on the fillings, the canonical order callers may rely
    on. Raises ValueError when the box count and content size disagree.
    """
    content = check_partition(content)
    if shape.size != sum(content):
        raise ValueError(
            f"shape has {shape.size} boxes but content has size {sum(content)}"
        )
    fillings = sorted(_walk_fillings(shape, content))
    return [SkewTableau(shape, f) for f in fillings]


def lr_coefficient(outer, inner, content):
    """The Littlewood-Richardson coefficient c^outer_{inner, content}.

    Counts lattice semistandard fillings of outer/inner with the given
    content. Returns 0 when inner does not fit inside outer or when the
    sizes do not match, since no tableaux exist then.
    """
    outer = check_partition(outer)
    inner = check_partition(inner)
    content = check_partition(content)
    if not contains(outer, inner):
        return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    count = 0
    for _ in _walk_fillings(SkewShape(outer, inner), content):
        count += 1
    return count


def lr_nonzero_contents(outer, inner):
    """All contents nu with c^outer_{inner, nu} nonzero, sorted ascending.

    Cached globally: chain searches ask for the same small shapes over and
    over, and the answer only depends on the normalized pair.
    """
    return _lr_nonzero_contents(check_partition(outer), check_partition(inner))


@lru_cache(maxsize=None)
def _lr_nonzero_contents(outer, inner):
    if not contains(outer, inner):
        return ()
    seen = set()
    for filling in _walk_fillings(SkewShape(outer, inner), None):
        counts = {}
        for row in filling:
            for e in row:
                counts[e] = counts.get(e, 0) + 1
        if counts:
            top = max(counts)
            seen.add(tuple(counts.get(e, 0) for e in range(1, top + 1)))
        else:
            seen.add(())
    return tuple(sorted(seen))


def gamma(tableau, i):
    """Number of distinct letters occurring at least i times in the word."""
    if i < 1:
        raise ValueError("i must be a positive integer")
    counts = {}
    for letter in reading_word(tableau):
        counts[letter] = counts.get(letter, 0) + 1
    return sum(1 for c in counts.values() if c >= i)
