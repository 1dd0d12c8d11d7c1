import itertools

import pytest

from smoothehrhart import counting


def naive_count(P, t, strict=False):
    """Scan the whole bounding box of tP and test every inequality."""
    lo = [t * min(v[i] for v in P.vertices) for i in range(P.dim)]
    hi = [t * max(v[i] for v in P.vertices) for i in range(P.dim)]
    total = 0
    for x in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        vals = (h.value(x) - t * h.rhs for h in P.halfspaces)
        if all(v < 0 for v in vals) if strict else all(v <= 0 for v in vals):
            total += 1
    return total


@pytest.fixture(params=["cython", "python"])
def backend(request):
    if request.param == "cython" and counting._kernel_c is None:
        pytest.skip("compiled kernel not built")
    return request.param
