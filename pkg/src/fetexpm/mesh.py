"""Partition of the artificial-time interval [0, 1] into elements.

Each element [t_e, t_{e+1}] maps onto the reference interval [-1, 1] by
``tau = scale * t - shift`` with ``scale = 2 / width`` and
``shift = (t_{e+1} + t_e) / width``.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class TimeMesh:
    """Element boundaries plus the per-element local-time map coefficients."""

    nodes: np.ndarray
    scale: np.ndarray
    shift: np.ndarray

    @property
    def num_elements(self) -> int:
        return len(self.scale)


def uniform_mesh(num_elements: int) -> TimeMesh:
    """Mesh with ``num_elements`` equal elements covering [0, 1].

    Nodes sit at i / num_elements; the map coefficients are stored in exact
    integer form (scale = 2 * num_elements, shift = 2 * i + 1) rather than
    recomputed from node differences.
    """
    num_elements = int(num_elements)
    if num_elements < 1:
        raise ValueError("number of elements must be >= 1")
    idx = np.arange(num_elements + 1)
    nodes = idx / num_elements
    scale = np.full(num_elements, 2.0 * num_elements)
    shift = 2.0 * idx[:-1] + 1.0
    for arr in (nodes, scale, shift):
        arr.setflags(write=False)
    return TimeMesh(nodes=nodes, scale=scale, shift=shift)
