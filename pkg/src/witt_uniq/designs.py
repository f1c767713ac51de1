"""Block designs and the exact-cover construction of the 4-(11,5,1) design."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Literal

from . import kernels


class VerificationError(Exception):
    """A checked property failed; ``witness`` carries the counterexample."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class BlockDesign:
    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        for b in blocks:
            if len(set(b)) != self.k or len(b) != self.k:
                raise ValueError(f"block {b} does not have {self.k} distinct points")
            if b[0] < 0 or b[-1] >= self.v:
                raise ValueError(f"block {b} has points outside [0, {self.v})")
        if len(set(blocks)) != len(blocks):
            raise ValueError("repeated block")
        object.__setattr__(self, "blocks", blocks)

    @property
    def b(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class ExactCoverInstance:
    columns: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        for r in rows:
            if list(r) != sorted(set(r)) or (r and (r[0] < 0 or r[-1] >= self.columns)):
                raise ValueError(f"row {r} is not a sorted subset of [0, {self.columns})")
        object.__setattr__(self, "rows", rows)


def verify_t_design(d: BlockDesign, t: int) -> int:
    """Return lambda if every t-subset lies in the same number of blocks.

    Raises VerificationError whose witness is ``(subset, first_count, count)``
    for the first t-subset (lexicographic) whose count differs from that of
    the first t-subset.
    """
    if not 1 <= t <= d.k:
        raise ValueError("need 1 <= t <= k")
    cover = Counter()
    for blk in d.blocks:
        cover.update(combinations(blk, t))
    lam = None
    for s in combinations(range(d.v), t):
        c = cover.get(s, 0)
        if lam is None:
            lam = c
        elif c != lam:
            raise VerificationError(
                f"{t}-subset {s} lies in {c} blocks, expected {lam}", (s, lam, c))
    return lam


def build_witt_instance(v: int = 11, k: int = 5, t: int = 4) -> ExactCoverInstance:
    """Columns are the t-subsets of [0, v), rows the k-subsets, both lexicographic."""
    col_index = {s: i for i, s in enumerate(combinations(range(v), t))}
    rows = [tuple(sorted(col_index[s] for s in combinations(blk, t)))
            for blk in combinations(range(v), k)]
    return ExactCoverInstance(len(col_index), tuple(rows))


Mode = Literal["first", "enumerate", "count"]
_MODES = {"first": kernels.MODE_FIRST, "enumerate": kernels.MODE_ENUMERATE,
          "count": kernels.MODE_COUNT}
_HEURISTICS = {"min-size": kernels.HEUR_MIN_SIZE, "leftmost": kernels.HEUR_LEFTMOST}


def exact_cover_solve(inst: ExactCoverInstance, mode: Mode = "enumerate",
                      heuristic: str = "min-size"):
    """Dancing-links search.

    ``count`` mode returns an int; otherwise a list of solutions, each a
    sorted tuple of row indices, in search order (column of minimum remaining
    size, ties by index; rows within a column by index).
    """
    count, sols = kernels.dlx_search(inst.columns, [list(r) for r in inst.rows],
                                     _MODES[mode], _HEURISTICS[heuristic])
    if mode == "count":
        return count
    return [tuple(sorted(s)) for s in sols]


def covers_exactly(inst: ExactCoverInstance, solution) -> bool:
    """Independent bitset check that the rows partition the columns."""
    acc = 0
    for r in solution:
        bits = 0
        for c in inst.rows[r]:
            bits |= 1 << c
        if acc & bits:
            return False
        acc |= bits
    return acc == (1 << inst.columns) - 1


def witt_design_from_solution(solution, v: int = 11, k: int = 5) -> BlockDesign:
    all_blocks = list(combinations(range(v), k))
    return BlockDesign(v, k, tuple(all_blocks[r] for r in solution))


def construct_witt_design() -> BlockDesign:
    inst = build_witt_instance()
    (sol,) = exact_cover_solve(inst, "first")
    return witt_design_from_solution(sol)


def block_intersection_profile(d: BlockDesign) -> dict[int, int]:
    """Ordered distinct block pairs counted by intersection size."""
    prof = Counter()
    sets = [frozenset(b) for b in d.blocks]
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j:
                prof[len(a & b)] += 1
    return dict(sorted(prof.items()))


def double_counting_holds(d: BlockDesign, t: int, lam: int) -> bool:
    return d.b * comb(d.k, t) == lam * comb(d.v, t)


# -- text format: "v=11 k=5 b=66" then one 1-based comma-separated block per line

def format_design(d: BlockDesign) -> str:
    lines = [f"v={d.v} k={d.k} b={d.b}"]
    lines += [",".join(str(p + 1) for p in blk) for blk in d.blocks]
    return "\n".join(lines) + "\n"


def parse_design(text: str) -> BlockDesign:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty design file")
    try:
        header = dict(tok.split("=", 1) for tok in lines[0].split())
        v, k, b = int(header["v"]), int(header["k"]), int(header["b"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad header line {lines[0]!r}") from exc
    blocks = []
    for ln in lines[1:]:
        pts = [int(p) - 1 for p in ln.split(",")]
        if pts != sorted(pts):
            raise ValueError(f"block line {ln!r} is not ascending")
        blocks.append(tuple(pts))
    if len(blocks) != b:
        raise ValueError(f"header says b={b} but file has {len(blocks)} blocks")
    if blocks != sorted(blocks):
        raise ValueError("block lines are not in lexicographic order")
    return BlockDesign(v, k, tuple(blocks))


def read_design(path) -> BlockDesign:
    with open(path) as fh:
        return parse_design(fh.read())


def write_design(d: BlockDesign, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_design(d))
