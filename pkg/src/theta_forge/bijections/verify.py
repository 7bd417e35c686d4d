"""Exhaustive verification of maps over enumerable domains."""
from __future__ import annotations

import time
from typing import Callable, Iterable

from ..errors import ParameterDomain, ThetaForgeError
from ..report import CheckReport
from .pairs import FixedPoint

KINDS = ("injection", "involution", "sign_reversing")


def _out(r):
    return r.output if hasattr(r, "output") else r


def verify_map(
    kind: str,
    fn: Callable,
    domain: Callable[[int], Iterable],
    n_range: Iterable[int],
    name: str | None = None,
    params: dict | None = None,
) -> CheckReport:
    """Check one property of fn on domain(n) for every n in n_range.

    FixedPoint results are outside the paired part of the domain and are skipped.
    An exception raised by fn counts as a totality failure.
    """
    if kind not in KINDS:
        raise ParameterDomain(f"kind must be one of {KINDS}, got {kind!r}")
    ns = list(n_range)
    start = time.perf_counter()
    checked = 0
    witness = None
    for n in ns:
        seen = {}
        for x in domain(n):
            try:
                r = fn(x)
            except (ThetaForgeError, ValueError) as exc:
                witness = {"index": n, "expected": "defined", "actual": f"{x!r}: {exc}"}
                break
            if isinstance(r, FixedPoint):
                continue
            checked += 1
            y = _out(r)
            if kind == "injection":
                if y in seen:
                    witness = {"index": n, "expected": repr(seen[y]), "actual": repr(x)}
                    break
                seen[y] = x
            elif kind == "involution":
                back = fn(y)
                if _out(back) != x:
                    witness = {"index": n, "expected": repr(x), "actual": repr(_out(back))}
                    break
            else:
                if len(y.first) % 2 == len(x.first) % 2:
                    witness = {"index": n, "expected": "parity flip", "actual": repr(x)}
                    break
        if witness:
            break
    return CheckReport(
        name=name or f"{kind}:{getattr(fn, '__name__', 'map')}",
        params=params or {},
        range=(min(ns), max(ns)) if ns else (),
        status="fail" if witness else "pass",
        witness=witness,
        runtime_ms=int(1000 * (time.perf_counter() - start)),
        extra={"checked": checked},
    )
