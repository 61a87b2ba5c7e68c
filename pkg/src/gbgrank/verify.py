"""Brute-force oracles and the formula-versus-oracle comparison harness."""

from __future__ import annotations

import csv
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .genfun import FormulaParams, formula, resolve
from .partitions import enumerate_bounded, enumerate_frequency_bounded, enumerate_self_conjugate
from .qseries import Series
from .residue import CyclotomicRank, check_prime, gbg_rank, rank_of_k_omega_j

FAMILIES = ("unrestricted", "self_conjugate", "frequency_bounded")

FAMILY_OF = {
    "g": "unrestricted",
    "g_omega": "unrestricted",
    "bg2": "unrestricted",
    "gsc2": "self_conjugate",
    "gsc_odd": "self_conjugate",
    "gtilde": "frequency_bounded",
}

DEFAULT_ORDER = 30


@dataclass(frozen=True)
class OracleSpec:
    family: str
    t: int
    bound: int
    k: int
    order: int
    j: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        check_prime(self.t)
        if self.bound < 0 or self.order < 0:
            raise ValueError("bound and order must be non-negative")
        if not 0 <= self.j <= self.t - 1:
            raise ValueError(f"j must lie in 0..{self.t - 1}")
        if self.family == "self_conjugate" and self.j != 0:
            raise ValueError("self-conjugate oracle supports integral ranks only")

    @property
    def rank(self) -> CyclotomicRank:
        return rank_of_k_omega_j(self.t, self.k, self.j)


def enumerate_family(family: str, t: int, bound: int, order: int) -> Iterator:
    if family == "unrestricted":
        return enumerate_bounded(bound, order)
    if family == "self_conjugate":
        return enumerate_self_conjugate(bound, order)
    if family == "frequency_bounded":
        return enumerate_frequency_bounded(bound, t, order)
    raise ValueError(f"unknown family {family!r}")


@lru_cache(maxsize=256)
def rank_bins(family: str, t: int, bound: int, order: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Coefficient lists of the family's series, binned by canonical GBG-rank."""
    bins: dict[tuple[int, ...], list[int]] = {}
    for pi in enumerate_family(family, t, bound, order):
        canon = gbg_rank(pi, t).canon
        coeffs = bins.get(canon)
        if coeffs is None:
            coeffs = bins[canon] = [0] * (order + 1)
        coeffs[pi.norm] += 1
    return {canon: tuple(c) for canon, c in bins.items()}


def oracle_series(spec: OracleSpec) -> Series:
    coeffs = rank_bins(spec.family, spec.t, spec.bound, spec.order).get(spec.rank.canon)
    if coeffs is None:
        return Series.zero(spec.order)
    return Series(coeffs, spec.order)


@dataclass(frozen=True)
class Cell:
    formula: str
    t: int
    N: int
    nu: int
    k: int
    order: int = DEFAULT_ORDER
    j: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "formula", resolve(self.formula))
        if self.formula == "g_omega" and self.j is None:
            raise ValueError("g_omega cells need j")
        if self.formula != "g_omega" and self.j is not None:
            raise ValueError(f"{self.formula} cells take no j")
        self.params()

    def params(self) -> FormulaParams:
        return FormulaParams(self.t, self.N, self.nu, self.k, self.order, self.j)

    def oracle_spec(self) -> OracleSpec:
        return OracleSpec(FAMILY_OF[self.formula], self.t, self.t * self.N + self.nu, self.k, self.order, self.j or 0)

    def as_dict(self) -> dict:
        d = {"formula": self.formula, "t": self.t, "N": self.N, "nu": self.nu, "k": self.k, "order": self.order}
        if self.j is not None:
            d["j"] = self.j
        return d


@dataclass
class VerificationReport:
    cell: Cell
    formula_coeffs: list[int]
    oracle_coeffs: list[int]
    matched: bool
    first_divergence: Optional[int]
    elapsed: float = field(default=0.0)

    def to_json(self) -> dict:
        # exact integers as decimal strings
        return {
            "cell": self.cell.as_dict(),
            "matched": self.matched,
            "first_divergence": self.first_divergence,
            "formula_coeffs": [str(c) for c in self.formula_coeffs],
            "oracle_coeffs": [str(c) for c in self.oracle_coeffs],
            "elapsed": round(self.elapsed, 6),
        }


FormulaFn = Callable[[FormulaParams], Series]


def verify_cell(cell: Cell, formula_fn: Optional[FormulaFn] = None) -> VerificationReport:
    """Compare the closed form for ``cell`` with its oracle through the cell's order.

    ``formula_fn`` replaces the registered formula, e.g. to check that the
    harness notices a deliberately broken one.
    """
    start = time.perf_counter()
    p = cell.params()
    got = formula_fn(p) if formula_fn is not None else formula(cell.formula, p)
    want = oracle_series(cell.oracle_spec())
    diff = got.first_difference(want)
    if diff is None and got.order != want.order:
        diff = min(got.order, want.order) + 1
    return VerificationReport(
        cell=cell,
        formula_coeffs=list(got.coeffs),
        oracle_coeffs=list(want.coeffs),
        matched=diff is None,
        first_divergence=diff,
        elapsed=time.perf_counter() - start,
    )


# --- grids ------------------------------------------------------------------

GridValue = Union[int, Sequence[int], str, dict]


def _values(spec: GridValue, t: int, key: str) -> list[int]:
    if isinstance(spec, bool):
        raise ValueError(f"{key}: expected integers, got {spec!r}")
    if isinstance(spec, int):
        return [spec]
    if isinstance(spec, str):
        if spec == "all" and key == "nu":
            return list(range(t))
        if spec == "all" and key == "j":
            return list(range(1, t))
        lo, sep, hi = spec.partition("..")
        if sep:
            return list(range(int(lo), int(hi) + 1))
        raise ValueError(f"{key}: cannot interpret {spec!r}")
    if isinstance(spec, dict):
        return list(range(int(spec["min"]), int(spec["max"]) + 1))
    return [int(v) for v in spec]


def expand_grid(config: dict) -> list[Cell]:
    """Expand a grid config into cells.

    Config layout::

        {"order": 30,
         "grids": [{"formula": "2.1", "t": [2, 3], "N": "0..3",
                    "nu": "all", "k": "-2..2"}, ...]}

    Integer lists, single integers, "lo..hi" ranges and {"min", "max"} are
    accepted for t, N, nu, k and j; "all" expands nu to 0..t-1 and j to
    1..t-1.  A grid-level "order" overrides the top-level one.
    """
    cells = []
    default_order = int(config.get("order", DEFAULT_ORDER))
    for grid in config.get("grids", []):
        unknown = set(grid) - {"formula", "t", "N", "nu", "k", "j", "order"}
        if unknown:
            raise ValueError(f"unknown grid keys: {sorted(unknown)}")
        name = resolve(str(grid["formula"]))
        order = int(grid.get("order", default_order))
        for t in _values(grid["t"], 0, "t"):
            Ns = _values(grid["N"], t, "N")
            nus = _values(grid.get("nu", "all"), t, "nu")
            ks = _values(grid["k"], t, "k")
            js = _values(grid.get("j", "all"), t, "j") if name == "g_omega" else [None]
            for N, nu, k, j in itertools.product(Ns, nus, ks, js):
                cells.append(Cell(name, t, N, nu, k, order, j))
    return cells


def load_config(path: Union[str, Path]) -> dict:
    with open(path) as fh:
        return json.load(fh)


def verify_grid(cells: Iterable[Cell], workers: int = 1) -> list[VerificationReport]:
    cells = list(cells)
    if workers <= 1 or len(cells) < 2:
        return [verify_cell(c) for c in cells]
    # oracle caches are per process; chunk so each worker reuses its enumerations
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(verify_cell, cells, chunksize=max(1, len(cells) // (4 * workers))))


def summarize(reports: Sequence[VerificationReport]) -> dict:
    by_formula: dict[str, list[int]] = {}
    for r in reports:
        counts = by_formula.setdefault(r.cell.formula, [0, 0])
        counts[0 if r.matched else 1] += 1
    return {
        "cells": len(reports),
        "matched": sum(r.matched for r in reports),
        "mismatched": sum(not r.matched for r in reports),
        "by_formula": {name: {"matched": m, "mismatched": x} for name, (m, x) in by_formula.items()},
    }


def write_jsonl(reports: Iterable[VerificationReport], path: Union[str, Path]) -> None:
    with open(path, "w") as fh:
        for r in reports:
            fh.write(json.dumps(r.to_json()) + "\n")


CSV_FIELDS = ("formula", "t", "N", "nu", "k", "j", "order", "matched", "first_divergence", "elapsed")


def write_csv(reports: Iterable[VerificationReport], path: Union[str, Path]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for r in reports:
            c = r.cell
            writer.writerow({
                "formula": c.formula, "t": c.t, "N": c.N, "nu": c.nu, "k": c.k,
                "j": "" if c.j is None else c.j, "order": c.order,
                "matched": int(r.matched),
                "first_divergence": "" if r.first_divergence is None else r.first_divergence,
                "elapsed": f"{r.elapsed:.6f}",
            })
