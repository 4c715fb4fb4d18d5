"""Long cross-checks, deselected by default (run with ``pytest -m slow``)."""

import pytest

from hurwitzmon.groups import centralizer
from hurwitzmon.hurwitz import apply_rep_tuple, orbit, pseudo_coxeter


@pytest.mark.slow
def test_plain_bfs_agrees_with_class_engine_on_sextic_orbit(rep32, sl2_32, sextic_pair):
    # about three minutes: a hash-set BFS over all 983040 plain tuples
    t = apply_rep_tuple(rep32, sextic_pair[0])
    H = centralizer(sl2_32, pseudo_coxeter(t))
    O = orbit(t, H)
    assert len(O) == 983040
