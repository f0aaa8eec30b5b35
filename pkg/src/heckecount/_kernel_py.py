"""Pure-Python product kernel; same contract as the compiled ``_kernel``."""
from __future__ import annotations

import numpy as np

INT64_MAX = 2**63 - 1


def row_products(word, succ, rises, ndeg):
    """
    Compute T_u T_v for one u and every basis element v.

    ``word`` is a reduced word for u (0-based generators, leftmost letter
    applied last). Returns CSR arrays ``(offsets, targets, coeffs)``: the
    product for v occupies rows ``offsets[v]:offsets[v+1]``, with ``targets``
    the indices of the basis elements w (ascending) and ``coeffs[k, d]`` the
    coefficient of hbar^d. ``ndeg`` must exceed the word length.
    """
    word = [int(g) for g in np.asarray(word)]
    succ_l = np.asarray(succ).tolist()
    rises_l = np.asarray(rises).tolist()
    nperm = np.asarray(succ).shape[1]
    if len(word) >= ndeg:
        raise ValueError("ndeg must exceed the word length")

    offsets = [0]
    targets: list[int] = []
    coeffs: list[list[int]] = []
    top = ndeg - 1
    for v in range(nperm):
        state = {v: [1] + [0] * top}
        for g in reversed(word):
            sg, rg = succ_l[g], rises_l[g]
            new: dict[int, list[int]] = {}
            for w, c in state.items():
                t = sg[w]
                acc = new.get(t)
                if acc is None:
                    new[t] = list(c)
                else:
                    for d in range(ndeg):
                        acc[d] += c[d]
                if not rg[w]:
                    acc = new.get(w)
                    if acc is None:
                        new[w] = [0] + c[:top]
                    else:
                        for d in range(top):
                            acc[d + 1] += c[d]
            state = new
        for w in sorted(state):
            c = state[w]
            if any(c):
                targets.append(w)
                coeffs.append(c)
        offsets.append(len(targets))

    if any(abs(x) > INT64_MAX for row in coeffs for x in row):
        raise OverflowError("structure constant exceeds int64")
    return (
        np.asarray(offsets, dtype=np.int64),
        np.asarray(targets, dtype=np.int32),
        np.asarray(coeffs, dtype=np.int64).reshape(len(coeffs), ndeg),
    )
