"""Exact-rational linear programs and a dense two-phase simplex solver.

All arithmetic is over fractions.Fraction; no floating point. Pivoting uses
Bland's rule, so the solver terminates on every input. Returned optimal
assignments are re-verified against every original constraint by exact
substitution before the solution is handed back.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

Rational = Fraction

LEQ = "<="
GEQ = ">="

DEFAULT_MAX_CELLS = 3_000_000


class LPSizeError(ValueError):
    """Instance exceeds the configured tableau-size guard."""


@dataclass
class RationalLP:
    sense: str  # "min" | "max"
    objective: list  # Fraction per variable
    rows: list  # (coeffs, relation, rhs)
    nonneg: Optional[list] = None  # per-variable nonnegativity, default all True
    var_names: Optional[list] = None
    row_names: Optional[list] = None
    name: str = "lp"

    def __post_init__(self):
        self.objective = [Fraction(c) for c in self.objective]
        nv = len(self.objective)
        self.rows = [
            ([Fraction(c) for c in coeffs], rel, Fraction(rhs))
            for coeffs, rel, rhs in self.rows
        ]
        for coeffs, rel, _ in self.rows:
            if len(coeffs) != nv:
                raise ValueError(f"{self.name}: row length {len(coeffs)} != {nv} vars")
            if rel not in (LEQ, GEQ):
                raise ValueError(f"{self.name}: unknown relation {rel!r}")
        if self.sense not in ("min", "max"):
            raise ValueError(f"{self.name}: sense must be min or max")
        if self.nonneg is None:
            self.nonneg = [True] * nv
        if self.var_names is None:
            self.var_names = [f"x{i}" for i in range(nv)]
        if self.row_names is None:
            self.row_names = [f"r{i}" for i in range(len(self.rows))]

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_rows(self) -> int:
        return len(self.rows)


@dataclass
class LPSolution:
    status: str  # "optimal" | "unbounded" | "infeasible"
    value: Optional[Fraction] = None
    values: Optional[list] = None  # per-variable, original order
    assignment: dict = field(default_factory=dict)  # var name -> Fraction


def _feasible(lp: RationalLP, x: Sequence[Fraction]) -> bool:
    for i, (flag, xi) in enumerate(zip(lp.nonneg, x)):
        if flag and xi < 0:
            return False
    for coeffs, rel, rhs in lp.rows:
        lhs = sum(c * xi for c, xi in zip(coeffs, x) if c)
        if rel == LEQ and lhs > rhs:
            return False
        if rel == GEQ and lhs < rhs:
            return False
    return True


def solve(lp: RationalLP, max_cells: int = DEFAULT_MAX_CELLS) -> LPSolution:
    """Exact optimum by two-phase tableau simplex with Bland's rule."""
    # free variables are split into a difference of two nonnegative ones
    split = []  # column index of the negative part, or None
    col_of_var = []
    ncols = 0
    for flag in lp.nonneg:
        col_of_var.append(ncols)
        if flag:
            split.append(None)
            ncols += 1
        else:
            split.append(ncols + 1)
            ncols += 2

    m = lp.num_rows
    est_cells = (m + 2) * (ncols + 2 * m + 1)
    if est_cells > max_cells:
        raise LPSizeError(
            f"{lp.name}: tableau of ~{est_cells} cells exceeds guard {max_cells}"
        )

    maximize = lp.sense == "max"
    obj = [Fraction(0)] * ncols
    for j, c in enumerate(lp.objective):
        cc = c if maximize else -c
        obj[col_of_var[j]] += cc
        if split[j] is not None:
            obj[split[j]] -= cc

    # build rows with rhs >= 0
    Z = Fraction(0)
    rows = []
    for coeffs, rel, rhs in lp.rows:
        r = [Z] * ncols
        for j, c in enumerate(coeffs):
            if c:
                r[col_of_var[j]] += c
                if split[j] is not None:
                    r[split[j]] -= c
        if rhs < 0:
            r = [-c for c in r]
            rhs = -rhs
            rel = GEQ if rel == LEQ else LEQ
        rows.append((r, rel, rhs))

    # slack / surplus / artificial columns
    nslack = len(rows)
    art_cols = []
    tab = []
    basis = []
    total = ncols + nslack  # artificials appended after
    for i, (r, rel, rhs) in enumerate(rows):
        row = list(r) + [Z] * nslack
        if rel == LEQ:
            row[ncols + i] = Fraction(1)
            basis.append(ncols + i)
            art_cols.append(None)
        else:
            row[ncols + i] = Fraction(-1)
            art_cols.append(True)  # placeholder, column index assigned below
            basis.append(None)
        row.append(rhs)
        tab.append(row)

    n_art = sum(1 for a in art_cols if a)
    if n_art:
        k = 0
        for i, a in enumerate(art_cols):
            row = tab[i]
            row.pop()  # rhs back out
            cols = [Z] * n_art
            if a:
                cols[k] = Fraction(1)
                basis[i] = total + k
                k += 1
            tab[i] = row + cols + [rows[i][2]]
        total += n_art

    ncols_t = total  # structural+slack+artificial columns (rhs is last)

    def pivot(pr: int, pc: int) -> None:
        prow = tab[pr]
        inv = Fraction(1) / prow[pc]
        tab[pr] = prow = [c * inv for c in prow]
        for i, row in enumerate(tab):
            if i != pr and row[pc]:
                f = row[pc]
                tab[i] = [a - f * b for a, b in zip(row, prow)]
        basis[pr] = pc

    def run_phase(costs: list) -> Optional[str]:
        """Maximize costs.x with Bland's rule; returns 'unbounded' or None."""
        # reduced costs maintained as an explicit objective row
        zrow = list(costs) + [Z]
        for i, b in enumerate(basis):
            if zrow[b]:
                f = zrow[b]
                zrow = [a - f * c for a, c in zip(zrow, tab[i])]
        while True:
            pc = -1
            for j in range(ncols_t):
                if zrow[j] > 0:
                    pc = j
                    break
            if pc < 0:
                return None
            pr = -1
            best = None
            for i, row in enumerate(tab):
                if row[pc] > 0:
                    ratio = row[-1] / row[pc]
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[pr]
                    ):
                        best = ratio
                        pr = i
            if pr < 0:
                return "unbounded"
            pivot(pr, pc)
            f = zrow[pc]
            if f:
                zrow = [a - f * c for a, c in zip(zrow, tab[pr])]

    if n_art:
        phase1 = [Z] * ncols_t
        for j in range(total - n_art, total):
            phase1[j] = Fraction(-1)
        status = run_phase(phase1)
        assert status is None  # phase 1 is always bounded
        art_value = sum(tab[i][-1] for i, b in enumerate(basis) if b >= total - n_art)
        if art_value != 0:
            return LPSolution(status="infeasible")
        # drive remaining artificials out of the basis where possible
        for i in range(len(basis)):
            if basis[i] >= total - n_art:
                for j in range(total - n_art):
                    if tab[i][j]:
                        pivot(i, j)
                        break
        # zero out artificial columns so they can never re-enter
        for row in tab:
            for j in range(total - n_art, total):
                row[j] = Z
    phase2 = list(obj) + [Z] * (ncols_t - ncols)
    status = run_phase(phase2)
    if status == "unbounded":
        return LPSolution(status="unbounded")

    xcols = [Z] * ncols_t
    for i, b in enumerate(basis):
        xcols[b] = tab[i][-1]
    x = []
    for j in range(lp.num_vars):
        v = xcols[col_of_var[j]]
        if split[j] is not None:
            v -= xcols[split[j]]
        x.append(v)
    value = sum(c * xi for c, xi in zip(lp.objective, x))
    if not _feasible(lp, x):
        raise AssertionError(f"{lp.name}: simplex returned an infeasible point")
    return LPSolution(
        status="optimal",
        value=value,
        values=x,
        assignment={name: xi for name, xi in zip(lp.var_names, x)},
    )


def dump_lp(lp: RationalLP) -> str:
    """Plain-text listing for debugging and golden tests."""
    lines = [f"# {lp.name}"]
    for name in lp.var_names:
        lines.append(f"var {name}")
    lines.append(f"{lp.sense} " + " ".join(str(c) for c in lp.objective))
    for coeffs, rel, rhs in lp.rows:
        lines.append("row " + " ".join(str(c) for c in coeffs) + f" {rel} {rhs}")
    return "\n".join(lines) + "\n"
