"""Most-reliable-graph search, table reproduction and non-existence certificates."""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .constructions import complement_family, fcg_positions
from .enumeration import enumerate_hamiltonian, enumerate_hd
from .graph import Multigraph, encode_graph6
from .hamiltonian import find_hamiltonian_cycle, ore_condition
from .relpoly import (
    CROSSING,
    EQUAL,
    FIRST,
    ComparisonVerdict,
    RelPoly,
    coefficient_vector_descending,
    compare_on_unit_interval,
    reliability,
)

UNIQUE = "UniqueDominant"
MULTIPLE = "MultipleDominant"
NONE = "NoDominant"


class AnalysisError(ValueError):
    pass


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("HAMREL_JOBS", "1") or 1)
    return max(1, jobs)


def reliabilities(graphs: Sequence[Multigraph], jobs: int | None = None) -> list[RelPoly]:
    """RelPoly of every graph, in input order whatever the worker count."""
    jobs = resolve_jobs(jobs)
    if jobs == 1 or len(graphs) < 2:
        return [reliability(G) for G in graphs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(reliability, graphs, chunksize=max(1, len(graphs) // (8 * jobs))))


@dataclass
class UMRReport:
    n: int
    m: int
    candidates: int
    outcome: str
    dominant: list[int] = field(default_factory=list)
    dominant_vectors: list[list[int]] = field(default_factory=list)
    front: list[int] = field(default_factory=list)
    method: str = "coefficients"
    crossing: tuple[int, int, ComparisonVerdict] | None = None

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "m": self.m,
            "candidates": self.candidates,
            "outcome": self.outcome,
            "method": self.method,
            "dominant": self.dominant,
            "dominant_vectors": self.dominant_vectors,
            "front": self.front,
        }
        if self.crossing is not None:
            i, j, v = self.crossing
            d["crossing"] = {"first": i, "second": j, **v.to_dict()}
        return d


def _ge(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x >= y for x, y in zip(a, b))


def search_umr(
    graphs: Sequence[Multigraph],
    polys: Sequence[RelPoly] | None = None,
    jobs: int | None = None,
) -> UMRReport:
    """Find a uniformly most reliable graph among the candidates, if one exists.

    Coefficient dominance settles most cases.  When the maximal coefficient
    vectors are incomparable, the exact sign analysis on (0, 1) decides;
    a missing dominant is reported with a certified crossing.
    """
    if not graphs:
        raise AnalysisError("search_umr needs at least one candidate")
    n, m = graphs[0].n, graphs[0].m
    for G in graphs:
        if (G.n, G.m) != (n, m):
            raise AnalysisError(f"candidates mix (n, m)=({n}, {m}) and ({G.n}, {G.m})")
    if polys is None:
        polys = reliabilities(graphs, jobs)
    vectors = [P.N for P in polys]
    distinct = sorted(set(vectors), reverse=True)
    maximal = [v for v in distinct if not any(w != v and _ge(w, v) for w in distinct)]
    first_of = {v: vectors.index(v) for v in maximal}
    front = sorted(first_of.values())
    report = UMRReport(n, m, len(graphs), NONE, front=front)

    winner = None
    if len(maximal) == 1:
        winner = maximal[0]
    else:
        report.method = "exact"
        verdicts: dict[tuple, ComparisonVerdict] = {}
        for a in maximal:
            for b in maximal:
                if a < b:
                    v = compare_on_unit_interval(RelPoly(m, a), RelPoly(m, b))
                    verdicts[(a, b)] = v
                    if v.kind == CROSSING and report.crossing is None:
                        report.crossing = (first_of[a], first_of[b], v)

        def beats(a, b):
            if a == b:
                return True
            if a < b:
                return verdicts[(a, b)].kind in (FIRST, EQUAL)
            return verdicts[(b, a)].kind not in (FIRST, CROSSING)

        for a in maximal:
            if all(beats(a, b) for b in maximal):
                winner = a
                break
    if winner is None:
        return report
    report.crossing = None
    report.dominant = [i for i, v in enumerate(vectors) if v == winner]
    report.outcome = UNIQUE if len(report.dominant) == 1 else MULTIPLE
    report.dominant_vectors = [coefficient_vector_descending(polys[report.dominant[0]], n)]
    return report


# --- published tables ----------------------------------------------------------------------


@dataclass
class TableRow:
    table: str
    key: str
    expected: list
    got: list | None
    match: bool
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "key": self.key,
            "expected": self.expected,
            "got": self.got,
            "match": self.match,
        }


def _data_rows(name: str) -> list[dict]:
    text = resources.files("hamrel").joinpath("data", name).read_text()
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    return list(csv.DictReader(lines))


def published_vectors(table: str) -> list[tuple[int, int, list[int]]]:
    return [
        (int(r["n"]), int(r["m"]), [int(x) for x in r["vector"].split()])
        for r in _data_rows("published.csv")
        if r["table"] == table
    ]


TABLES = ("T2", "T3", "T4")


def reproduce_table(
    table: str, rows: Sequence[int] | None = None, jobs: int | None = None
) -> list[TableRow]:
    """Regenerate a published table and flag each row as matching or not.

    ``rows`` restricts T3/T4 to the listed n values (T2 to chord indices).
    """
    import time

    key = table.upper()
    if key in ("T2", "T2-FCG"):
        out = []
        for r, (p, u, v) in zip(_data_rows("fcg_16_3.csv"), fcg_positions(16, 3)):
            idx = int(r["cut"])
            if rows is not None and idx not in rows:
                continue
            exp = [r["total"], int(r["p1"]), int(r["p2"]), int(r["v1"]), int(r["v2"])]
            got = [f"{p.numerator}/{p.denominator}" if p.denominator != 1 else str(p.numerator),
                   u + 1, v + 1, u, v]
            out.append(TableRow("T2", str(idx), exp, got, exp == got))
        return out
    if key not in ("T3", "T4"):
        raise AnalysisError(f"unknown table {table!r}; choose from {', '.join(TABLES)}")
    out = []
    for n, m, expected in published_vectors(key):
        if rows is not None and n not in rows:
            continue
        t0 = time.perf_counter()
        graphs = enumerate_hamiltonian(n, 3) if key == "T3" else enumerate_hd(n)
        rep = search_umr(graphs, jobs=jobs)
        got = rep.dominant_vectors[0] if rep.dominant_vectors else None
        out.append(
            TableRow(key, f"({n},{m})", expected, got, got == expected, time.perf_counter() - t0)
        )
    return out


# --- non-existence certificates ---------------------------------------------------------------


@dataclass
class Certificate:
    n: int
    m: int
    names: tuple[str, str]
    graphs: tuple[Multigraph, Multigraph]
    cycles: tuple[list[int] | None, list[int] | None]
    ore: tuple[bool, bool]
    verdict: ComparisonVerdict

    @property
    def ok(self) -> bool:
        return all(c is not None for c in self.cycles) and self.verdict.kind == CROSSING

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "graphs": {nm: encode_graph6(G) for nm, G in zip(self.names, self.graphs)},
            "hamiltonian_cycles": dict(zip(self.names, self.cycles)),
            "ore": dict(zip(self.names, self.ore)),
            "verdict": self.verdict.to_dict(),
            "ok": self.ok,
        }


def verify_nonexistence(n: int) -> Certificate:
    """Build the complement pair for n and certify that their reliabilities cross."""
    if n < 6:
        raise AnalysisError(f"need n >= 6, got n={n}")
    names = ("g1", "g2") if n % 2 == 0 else ("g3", "g4")
    if n % 2 and n < 7:
        raise AnalysisError(f"odd n must be >= 7, got n={n}")
    G, H = (complement_family(nm, n) for nm in names)
    A, B = reliability(G), reliability(H)
    return Certificate(
        n,
        G.m,
        names,
        (G, H),
        (find_hamiltonian_cycle(G), find_hamiltonian_cycle(H)),
        (ore_condition(G), ore_condition(H)),
        compare_on_unit_interval(A, B),
    )


# --- output helpers ------------------------------------------------------------------------


def _jsonable(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    raise TypeError(f"not serializable: {type(x).__name__}")


def to_json(obj) -> str:
    return json.dumps(obj, default=_jsonable, sort_keys=True)


def rows_to_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["table", "key", "expected", "got", "status"])
    for r in rows:
        fmt = lambda v: " ".join(map(str, v)) if v is not None else ""  # noqa: E731
        w.writerow([r.table, r.key, fmt(r.expected), fmt(r.got), "MATCH" if r.match else "MISMATCH"])
    return buf.getvalue()
