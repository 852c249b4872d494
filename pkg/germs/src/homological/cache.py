"""
Per-w cache of the generator coefficient w_hat, where
log(phi_{0,w}) = w_hat * y(y-x) d/dy.
"""

from threading import Lock
from typing import Dict, Tuple

from ..errors import InvariantBreach
from ..invariants import GermSpec, l_field
from ..series import Series2


def generator_coefficient(w: Series2, order: int) -> Series2:
    """w_hat known to `order`; the generator of phi_{0,w} is computed at order+2."""
    spec = GermSpec(Series2.zero(order + 2), w, order + 2)
    L = l_field(spec)
    if not L.ax.is_zero():
        raise InvariantBreach("log(phi_{0,w}) has a nonzero d/dx component")
    return L.ay


class GeneratorCache:
    """Thread-safe memo of generator_coefficient keyed by (order, w)."""

    def __init__(self):
        self._lock = Lock()
        self._store: Dict[Tuple, Series2] = {}

    def get(self, w: Series2, order: int) -> Series2:
        key = (order, w.at_order(order + 2).layers)
        with self._lock:
            cached = self._store.get(key)
        if cached is not None:
            return cached
        value = generator_coefficient(w, order)
        with self._lock:
            return self._store.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._store.clear()

    def __len__(self) -> int:
        with self._lock:
            return len(self._store)


GENERATOR_CACHE = GeneratorCache()
