"""Commutation-pattern matrices: validation, named presets, text format.

A pattern is a symmetric 0/1 matrix with zero diagonal.  Entry 1 at
(i, j) declares coordinates i and j commuting (classically independent),
entry 0 leaves them free.  The two constant patterns ``comm`` (all
off-diagonal ones) and ``free`` (all zeros) mark the classical and the
maximally noncommutative ends of the family; everything in between mixes
the two regimes.

All indices on the public surface are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

Bits = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EpsilonMatrix:
    """A validated commutation pattern.  Build through :func:`make_epsilon`."""

    n: int
    entries: Bits

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [list(r) for r in self.entries]}


def make_epsilon(n: int, entries) -> EpsilonMatrix:
    """Validate ``entries`` as an n-by-n commutation pattern.

    Raises ValueError with a distinct message for each violation: wrong
    shape, non-bit entry, nonzero diagonal, broken symmetry.
    """
    if n < 1:
        raise ValueError("size must be a positive integer")
    rows = tuple(tuple(r) for r in entries)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected a {n}x{n} array of entries")
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if v not in (0, 1):
                raise ValueError(f"entry ({i + 1},{j + 1}) must be 0 or 1, got {v!r}")
    for i in range(n):
        if rows[i][i] != 0:
            raise ValueError(f"diagonal entry ({i + 1},{i + 1}) must be 0")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"matrix is not symmetric at ({i + 1},{j + 1})")
    return EpsilonMatrix(n, rows)


# Fixed patterns are embedded verbatim as data, never generated, so the
# fixtures cannot drift.  ``pairs-indep``: two classically independent
# pairs, free from each other.  ``pairs-free``: two free pairs, the
# pairs independent of each other.  ``cycle5``: five coordinates, each
# free from its two cyclic neighbours and independent of the rest (the
# smallest pattern not obtainable by iterated grouping).  ``trivial6``:
# a six-vertex pattern whose automorphism group is trivial.

_EX_D: Bits = (
    (0, 1, 0, 0),
    (1, 0, 0, 0),
    (0, 0, 0, 1),
    (0, 0, 1, 0),
)

_EX_E: Bits = (
    (0, 0, 1, 1),
    (0, 0, 1, 1),
    (1, 1, 0, 0),
    (1, 1, 0, 0),
)

_EX_F: Bits = (
    (0, 0, 1, 1, 0),
    (0, 0, 0, 1, 1),
    (1, 0, 0, 0, 1),
    (1, 1, 0, 0, 0),
    (0, 1, 1, 0, 0),
)

_TRIVIAL6: Bits = (
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 1),
    (0, 1, 0, 1, 0, 1),
    (0, 0, 1, 1, 1, 0),
)

_FIXED_PRESETS = {
    "ex-d": _EX_D,
    "pairs-indep": _EX_D,
    "ex-e": _EX_E,
    "pairs-free": _EX_E,
    "ex-f": _EX_F,
    "cycle5": _EX_F,
    "trivial6": _TRIVIAL6,
}

PRESET_NAMES = ("comm", "free", "block", "ex-d", "pairs-indep", "ex-e",
                "pairs-free", "ex-f", "cycle5", "trivial6")


def comm(n: int) -> EpsilonMatrix:
    """All off-diagonal entries 1: fully classical."""
    return make_epsilon(n, tuple(tuple(0 if i == j else 1 for j in range(n))
                                 for i in range(n)))


def free(n: int) -> EpsilonMatrix:
    """All entries 0: fully free."""
    return make_epsilon(n, tuple((0,) * n for _ in range(n)))


def block(n: int, m: int) -> EpsilonMatrix:
    """First n coordinates mutually commuting, remaining m free of everything."""
    size = n + m
    return make_epsilon(size, tuple(
        tuple(1 if i < n and j < n and i != j else 0 for j in range(size))
        for i in range(size)))


def preset(name: str, *params: int) -> EpsilonMatrix:
    """Look up a named pattern; ``comm``/``free`` take a size, ``block`` two."""
    if name == "comm":
        if len(params) != 1:
            raise ValueError("preset comm takes one size parameter")
        return comm(params[0])
    if name == "free":
        if len(params) != 1:
            raise ValueError("preset free takes one size parameter")
        return free(params[0])
    if name == "block":
        if len(params) != 2:
            raise ValueError("preset block takes two size parameters")
        return block(params[0], params[1])
    if name in _FIXED_PRESETS:
        if params:
            raise ValueError(f"preset {name} takes no parameters")
        entries = _FIXED_PRESETS[name]
        return make_epsilon(len(entries), entries)
    raise ValueError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")


def parse_eps_text(text: str) -> EpsilonMatrix:
    """Parse the plain text format: a size line, then n rows of n bits.

    Errors report the 1-based line and column of the offending token.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ValueError("line 1, column 1: missing size line")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ValueError("line 1, column 1: size must be an integer") from None
    if n < 1:
        raise ValueError("line 1, column 1: size must be positive")
    rows = []
    for r in range(n):
        lineno = r + 2
        if r + 1 >= len(lines):
            raise ValueError(f"line {lineno}, column 1: missing row {r + 1} of {n}")
        line = lines[r + 1]
        row = []
        pos = 0
        while pos < len(line):
            if line[pos].isspace():
                pos += 1
                continue
            col = pos + 1
            end = pos
            while end < len(line) and not line[end].isspace():
                end += 1
            tok = line[pos:end]
            if tok not in ("0", "1"):
                raise ValueError(f"line {lineno}, column {col}: expected 0 or 1, got {tok!r}")
            if len(row) == n:
                raise ValueError(f"line {lineno}, column {col}: more than {n} entries")
            row.append(int(tok))
            pos = end
        if len(row) != n:
            raise ValueError(f"line {lineno}, column {len(line) + 1}: "
                             f"expected {n} entries, got {len(row)}")
        rows.append(tuple(row))
    return make_epsilon(n, tuple(rows))


def format_eps_text(eps: EpsilonMatrix) -> str:
    lines = [str(eps.n)]
    lines += [" ".join(str(v) for v in row) for row in eps.entries]
    return "\n".join(lines) + "\n"


def validate_index(values, n: int) -> tuple[int, ...]:
    """Check a multi-index: every entry must lie in 1..n."""
    vals = tuple(values)
    for pos, v in enumerate(vals):
        if not isinstance(v, int) or not 1 <= v <= n:
            raise ValueError(f"index entry {pos + 1} is {v!r}, must lie in 1..{n}")
    return vals


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the image sequence."""

    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError("images must be a bijection of 1..n")

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self.n, tuple(self(other(p)) for p in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for p in range(1, self.n + 1):
            inv[self(p) - 1] = p
        return Permutation(self.n, tuple(inv))

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(n, tuple(range(1, n + 1)))
