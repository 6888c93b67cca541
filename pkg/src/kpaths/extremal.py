"""Exhaustive extremal search over all k-path graphs of a fixed order.

The enumeration stream is cut into fixed-size batches; each batch is built
and diagonalized by a worker, and the per-batch candidate sets are merged in
batch order. The merge is a set operation, so the records do not depend on
the thread count or batch size.
"""

from __future__ import annotations

import enum
import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Iterable, Sequence

import numpy as np

from .errors import AlphaOutOfRange, BudgetExceeded, OutOfValidatedRange
from .g6codec import encode
from .kpathgraph import build_from_sequence, derive_color_sequence, generalized_fan, ribbon, weak_generalized_fan
from .seqcore import ColorSequence, count_closed_form, enumerate_sequences
from .spectra import TIE_TOL, batch_spectra

DEFAULT_BUDGET = 2_000_000
DEFAULT_BATCH = 1024
TABLE_ALPHAS = tuple(round(0.1 * i, 1) for i in range(1, 10))


class ObjectiveKind(str, enum.Enum):
    ALG_CONN = "alg_conn"
    ALPHA_INDEX = "alpha_index"
    # literal second-largest eigenvalue of A_alpha(G)
    ALPHA_LAMBDA2 = "alpha_lambda2"
    # alpha-index of the second-ranked graph; this is what the published
    # "max lambda_2(A_alpha)" tables contain
    ALPHA_INDEX_RUNNER_UP = "alpha_index_runner_up"


class Direction(str, enum.Enum):
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class Objective:
    kind: ObjectiveKind
    direction: Direction = Direction.MAX
    alpha: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ObjectiveKind(self.kind))
        object.__setattr__(self, "direction", Direction(self.direction))
        if self.kind is ObjectiveKind.ALG_CONN:
            if self.alpha is not None:
                raise ValueError("algebraic connectivity takes no alpha")
        elif self.alpha is None or not 0.0 <= self.alpha <= 1.0:
            raise AlphaOutOfRange(f"{self.kind.value} needs alpha in [0, 1], got {self.alpha}")

    @property
    def rank(self) -> int:
        return 2 if self.kind is ObjectiveKind.ALPHA_INDEX_RUNNER_UP else 1

    def label(self) -> str:
        text = f"{self.direction.value} {self.kind.value}"
        return text if self.alpha is None else f"{text} alpha={self.alpha:g}"


@dataclass(frozen=True)
class ExtremalRecord:
    k: int
    n: int
    objective: Objective
    value: float
    witness_g6: str
    witness_sequence: ColorSequence
    tie_count: int


class _Tracker:
    """Keeps every graph that can still belong to the top ``rank`` tie groups.

    Values are stored sign-adjusted so larger is always better. For rank 1
    the survivors are those within TIE_TOL of the best; for rank 2, those
    within TIE_TOL of the best value lying more than TIE_TOL below the top.
    Both thresholds only grow as more graphs arrive, so pruning is safe.
    """

    def __init__(self, rank: int):
        self.rank = rank
        self.values = np.empty(0)
        self.seqs: list[ColorSequence] = []

    def _floor(self, values: np.ndarray) -> float:
        top = values.max()
        if self.rank == 1:
            return top - TIE_TOL
        below = values[values < top - TIE_TOL]
        return below.max() - TIE_TOL if below.size else -np.inf

    def add(self, values: np.ndarray, seqs: Sequence[ColorSequence]) -> None:
        values = np.concatenate([self.values, values])
        seqs = self.seqs + list(seqs)
        if values.size == 0:
            return
        keep = values >= self._floor(values)
        self.values = values[keep]
        self.seqs = [s for s, kept in zip(seqs, keep) if kept]

    def merge(self, other: _Tracker) -> None:
        self.add(other.values, other.seqs)

    def result(self) -> tuple[float, ColorSequence, int] | None:
        if self.values.size == 0:
            return None
        top = self.values.max()
        if self.rank == 1:
            group = self.values >= top - TIE_TOL
        else:
            below = self.values < top - TIE_TOL
            if not below.any():
                return None
            second = self.values[below].max()
            group = below & (self.values >= second - TIE_TOL)
        members = [(s, v) for s, v, g in zip(self.seqs, self.values, group) if g]
        seq, value = min(members, key=lambda item: item[0].entries)
        return float(value), seq, len(members)


def _evaluate(k: int, n: int, seqs: list[ColorSequence], objectives: Sequence[Objective]) -> list[_Tracker]:
    adj = np.zeros((len(seqs), n, n))
    for b, seq in enumerate(seqs):
        g = build_from_sequence(seq, n)
        for u, v in g.edges():
            adj[b, u, v] = adj[b, v, u] = 1.0
    alphas = sorted({o.alpha for o in objectives if o.alpha is not None})
    with_lap = any(o.kind is ObjectiveKind.ALG_CONN for o in objectives)
    spectra = batch_spectra(adj, alphas, with_lap)
    slot = {a: i + (1 if with_lap else 0) for i, a in enumerate(alphas)}

    trackers = []
    for obj in objectives:
        if obj.kind is ObjectiveKind.ALG_CONN:
            values = spectra[:, 0, 1]
        elif obj.kind is ObjectiveKind.ALPHA_LAMBDA2:
            values = spectra[:, slot[obj.alpha], -2]
        else:
            values = spectra[:, slot[obj.alpha], -1]
        if obj.direction is Direction.MIN:
            values = -values
        tracker = _Tracker(obj.rank)
        tracker.add(np.array(values, copy=True), seqs)
        trackers.append(tracker)
    return trackers


def _batches(k: int, n: int, size: int, budget: int):
    stream = enumerate_sequences(k, n)
    seen = 0
    while True:
        batch = list(itertools.islice(stream, size))
        if not batch:
            return
        seen += len(batch)
        if seen > budget:
            raise BudgetExceeded(f"k={k}, n={n} has more than {budget} graphs")
        yield batch


def scan(
    k: int,
    n: int,
    objectives: Sequence[Objective],
    threads: int | None = None,
    budget: int = DEFAULT_BUDGET,
    batch_size: int = DEFAULT_BATCH,
) -> list[ExtremalRecord | None]:
    """One pass over every k-path of order n, evaluating all ``objectives``.

    Returns one record per objective; None where the objective is undefined
    (a runner-up among fewer than two distinct values).
    """
    objectives = list(objectives)
    try:
        expected = count_closed_form(k, n).count
    except OutOfValidatedRange:
        expected = None
    if expected is not None and expected > budget:
        raise BudgetExceeded(f"k={k}, n={n} has {expected} graphs, budget is {budget}")

    totals = [_Tracker(o.rank) for o in objectives]
    threads = threads or os.cpu_count() or 1
    batches = _batches(k, n, batch_size, budget)
    if threads == 1:
        for batch in batches:
            for total, part in zip(totals, _evaluate(k, n, batch, objectives)):
                total.merge(part)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            window = []
            for batch in batches:
                window.append(pool.submit(_evaluate, k, n, batch, objectives))
                if len(window) >= 2 * threads:
                    for total, part in zip(totals, window.pop(0).result()):
                        total.merge(part)
            for fut in window:
                for total, part in zip(totals, fut.result()):
                    total.merge(part)

    records: list[ExtremalRecord | None] = []
    for obj, total in zip(objectives, totals):
        res = total.result()
        if res is None:
            records.append(None)
            continue
        value, seq, ties = res
        if obj.direction is Direction.MIN:
            value = -value
        records.append(ExtremalRecord(k, n, obj, value, encode(build_from_sequence(seq, n)), seq, ties))
    return records


def search(k: int, n: int, obj: Objective, **kwargs) -> ExtremalRecord:
    record = scan(k, n, [obj], **kwargs)[0]
    if record is None:
        raise ValueError(f"{obj.label()} is undefined for k={k}, n={n} (fewer than two distinct values)")
    return record


def sweep(k: int, n_values: Iterable[int], objectives: Sequence[Objective], **kwargs) -> list[ExtremalRecord]:
    """Records for every (n, objective) cell; undefined cells are left out."""
    out = []
    for n in n_values:
        out.extend(r for r in scan(k, n, objectives, **kwargs) if r is not None)
    return out


def format_value(value: float, precision: int = 4) -> str:
    q = Decimal(value).quantize(Decimal(1).scaleb(-precision), rounding=ROUND_HALF_EVEN)
    if q == 0:
        q = abs(q)
    return f"{q:f}"


def format_table(records: Sequence[ExtremalRecord], sep: str = ",", precision: int = 4, header: bool = True) -> str:
    with_alpha = any(r.objective.alpha is not None for r in records)
    lines = []
    if header:
        cols = ["n"] + (["alpha"] if with_alpha else []) + ["value", "g6", "sequence", "tie_count"]
        lines.append(sep.join(cols))
    for r in records:
        row = [str(r.n)]
        if with_alpha:
            row.append("" if r.objective.alpha is None else f"{r.objective.alpha:g}")
        row += [format_value(r.value, precision), r.witness_g6, str(r.witness_sequence), str(r.tie_count)]
        lines.append(sep.join(row))
    return "\n".join(lines) + "\n"


# --- conjecture checking -------------------------------------------------

LAMBDA2_READINGS = ("runner-up", "literal")


@dataclass(frozen=True)
class Check:
    n: int
    claim: str
    objective: Objective
    expected: ColorSequence
    witness: ColorSequence
    value: float
    tie_count: int

    @property
    def passed(self) -> bool:
        return self.witness == self.expected and self.tie_count == 1

    def line(self) -> str:
        status = "ok  " if self.passed else "FAIL"
        alpha = "" if self.objective.alpha is None else f" alpha={self.objective.alpha:g}"
        text = f"{status} n={self.n} {self.claim}{alpha}: value={self.value:.6f} witness=<{self.witness}> ties={self.tie_count}"
        if not self.passed:
            text += f" expected=<{self.expected}>"
        return text


@dataclass
class VerificationReport:
    k: int
    lambda2_reading: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        head = f"k={self.k} lambda2-reading={self.lambda2_reading}: {len(self.checks)} checks, {len(self.violations)} violations"
        return [head] + [f"note: {n}" for n in self.notes] + [c.line() for c in self.checks]


def verify_conjectures(
    k: int,
    n_values: Iterable[int],
    alphas: Sequence[float] = TABLE_ALPHAS,
    lambda2_reading: str = "runner-up",
    **kwargs,
) -> VerificationReport:
    """Check the conjectured extremal families on every order in ``n_values``.

    Per order: max/min algebraic connectivity are attained uniquely by the
    generalized fan / the ribbon; max alpha-index by the generalized fan for
    every alpha; and the lambda_2 claim by the weak generalized fan, where
    ``lambda2_reading`` picks the quantity (see ObjectiveKind).
    """
    if lambda2_reading not in LAMBDA2_READINGS:
        raise ValueError(f"lambda2_reading must be one of {LAMBDA2_READINGS}")
    lam_kind = ObjectiveKind.ALPHA_INDEX_RUNNER_UP if lambda2_reading == "runner-up" else ObjectiveKind.ALPHA_LAMBDA2
    report = VerificationReport(k, lambda2_reading)
    for n in n_values:
        if n == k + 1:
            report.notes.append(f"n={n}: only K_{n}, extremality is vacuous; skipped")
            continue
        fan = derive_color_sequence(generalized_fan(k, n), k)
        rib = derive_color_sequence(ribbon(k, n), k)
        weak = derive_color_sequence(weak_generalized_fan(k, n), k)
        plan = [
            ("max a(G) = generalized fan", Objective(ObjectiveKind.ALG_CONN, Direction.MAX), fan),
            ("min a(G) = ribbon", Objective(ObjectiveKind.ALG_CONN, Direction.MIN), rib),
        ]
        for a in alphas:
            plan.append(("max alpha-index = generalized fan", Objective(ObjectiveKind.ALPHA_INDEX, Direction.MAX, a), fan))
        for a in alphas:
            plan.append((f"{lam_kind.value} = weak generalized fan", Objective(lam_kind, Direction.MAX, a), weak))
        records = scan(k, n, [p[1] for p in plan], **kwargs)
        skipped_runner_up = False
        for (claim, obj, expected), rec in zip(plan, records):
            if rec is None:
                skipped_runner_up = True
                continue
            report.checks.append(Check(n, claim, obj, expected, rec.witness_sequence, rec.value, rec.tie_count))
        if skipped_runner_up:
            report.notes.append(f"n={n}: a single graph, so no runner-up exists; weak-fan check skipped")
    return report
