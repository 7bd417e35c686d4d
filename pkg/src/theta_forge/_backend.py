"""Kernel backend selection.

Set THETA_FORGE_NO_JIT=1 to force the pure-numpy kernels; they are also used
automatically when numba is not importable.
"""
import os

_FLAG = "THETA_FORGE_NO_JIT"


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def default_backend() -> str:
    if os.environ.get(_FLAG, "").strip().lower() in ("1", "true", "yes", "on"):
        return "numpy"
    return "numba" if _numba_available() else "numpy"


def default_order(fallback: int = 200) -> int:
    """Truncation order N, overridable through THETA_FORGE_ORDER."""
    raw = os.environ.get("THETA_FORGE_ORDER", "").strip()
    if not raw:
        return fallback
    try:
        n = int(raw)
    except ValueError:
        return fallback
    return n if n >= 0 else fallback
