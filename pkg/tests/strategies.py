from hypothesis import strategies as st

from eqsig.diagram import Locus, Region, SymmetricDiagram, FIXED, off_axis_pair, on_axis
from eqsig.goeritz import EquivariantGoeritz
from eqsig.matrix import SymIntMatrix


def sym_matrices(m, lo=-5, hi=5):
    upper = st.lists(st.integers(lo, hi), min_size=m * (m + 1) // 2,
                     max_size=m * (m + 1) // 2)

    def build(vals):
        rows = [[0] * m for _ in range(m)]
        it = iter(vals)
        for i in range(m):
            for j in range(i, m):
                rows[i][j] = rows[j][i] = next(it)
        return SymIntMatrix(rows)

    return upper.map(build)


@st.composite
def goeritz_forms(draw, max_n=5, lo=-5, hi=5):
    n = draw(st.integers(1, max_n))
    return EquivariantGoeritz(draw(sym_matrices(n, lo, hi)), draw(sym_matrices(n, lo, hi)),
                              draw(st.integers(-6, 6)) * 2)


@st.composite
def diagrams(draw, max_n=4, max_crossings=8):
    """Random valid admissible diagrams (incidence data only)."""
    n = draw(st.integers(1, max_n))
    regions = [FIXED] + [Region(i, m) for i in range(1, n + 1) for m in (False, True)]
    crossings = []
    for k in range(draw(st.integers(0, max_crossings))):
        eta = draw(st.sampled_from((1, -1)))
        eps = draw(st.sampled_from((None, 1, -1)))
        if draw(st.booleans()):
            i = draw(st.integers(1, n))
            crossings.append(on_axis(f"h{k}", Region(i, False), Region(i, True), eta,
                                     Locus.ON_AXIS_H, eps))
        else:
            r1 = draw(st.sampled_from(regions))
            r2 = draw(st.sampled_from(regions))
            if r1.is_fixed and r2.is_fixed:
                r2 = Region(1, False)
            crossings.extend(off_axis_pair(f"x{k}", r1, r2, eta, eps))
    return SymmetricDiagram(n, tuple(crossings))
