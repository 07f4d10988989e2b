import csv
import io
import json

import pytest
from hypothesis import given, settings, strategies as st
from fractions import Fraction

from hypercatalan import sequences as sq
from hypercatalan.catalan_core import fuss
from hypercatalan.series import TruncatedSeries, solve_S
from hypercatalan.type_vectors import enumerate_types

from reference_values import (
    CAYLEY_ROWS,
    GEODE_CAYLEY_ROWS,
    GEODE_RIORDAN,
    GEODE_SCHROEDER,
    JUMBO_RIORDAN_DISPLAYED,
    RIORDAN_A005043,
    RIORDAN_DISPLAYED,
    SCHROEDER,
    TUTRANK_CATALAN,
    TUTRANK_RIORDAN,
)


def _row(p, lead, n):
    row = p.row(lead)
    return [row.get((f,), 0) for f in range(1, n + 1)]


def test_schroeder():
    assert sq.schroeder(9).sequence(9) == SCHROEDER


def test_riordan_full_and_displayed_truncation():
    assert sq.riordan(11).sequence(11) == RIORDAN_A005043
    # dropping t10 reproduces the published display
    assert sq.riordan(11, max_degree=9).sequence(11) == RIORDAN_DISPLAYED


def test_cayley_rows():
    p = sq.cayley(7)
    for lead, vals in CAYLEY_ROWS.items():
        assert _row(p, lead, lead) == vals
    assert p.coefficient(0, 0) == 1


def test_geode_projections():
    assert sq.project_geode("schroeder", 6).sequence(6) == GEODE_SCHROEDER
    assert sq.project_geode("riordan", 8).sequence(8) == GEODE_RIORDAN
    p = sq.project_geode("cayley", 5)
    for lead, vals in GEODE_CAYLEY_ROWS.items():
        assert _row(p, lead, lead) == vals
    with pytest.raises(ValueError):
        sq.project_geode("nope", 3)


def test_jumbo_riordan():
    assert sq.project_jumbo("riordan", 7, max_degree=4).sequence(7) == JUMBO_RIORDAN_DISPLAYED
    full = sq.project_jumbo("riordan", 7).sequence(7)
    assert full[:5] == JUMBO_RIORDAN_DISPLAYED[:5]
    assert full[5:] == [90, 297]


def test_jumbo_layers():
    e = sq.project_jumbo("edge_layers", 3)
    assert e.coefficient(0, 0, 0) == 1
    assert e.coefficient(2, 1, 1) == 2
    assert e.coefficient(3, 1, 2) == 5
    v = sq.project_jumbo("vertex_layers", 2, max_k1=2)
    assert v.coefficient(0, 0, 0) == 1


def test_tutrank_projections():
    assert sq.tutrank_catalan(11).sequence(11, start=1) == TUTRANK_CATALAN
    full = sq.tutrank_catalan(11, minus_one=False).sequence(11)
    assert full == [1] + TUTRANK_CATALAN[:10]
    assert sq.tutrank_riordan(11).sequence(11, start=1) == TUTRANK_RIORDAN


def test_fuss_reversion():
    assert sq.fuss_reversion(2, 4) == [1, 2, 5, 14]
    assert sq.fuss_reversion(3, 4) == [1, 3, 12, 55]
    assert sq.fuss_check(6, 6).passed
    with pytest.raises(ValueError):
        sq.fuss_reversion(1, 3)


def test_euler_prefactor():
    s = solve_S(2, 3)
    plain = sq.project(s, sq.LAYERS_VEF)
    euler = sq.project(s, sq.ProjectionSpec(sq.LAYERS_VEF.variables, euler_prefactor=True))
    shifted = {(a + 2, b + 1, c): v for (a, b, c), v in plain.terms.items()}
    assert euler.terms == shifted


_types = enumerate_types(3, 4)
_series = st.dictionaries(
    st.sampled_from(_types), st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3)), max_size=6
).map(lambda d: TruncatedSeries(d, 3, 4))


@settings(max_examples=40, deadline=None)
@given(_series, _series, st.sampled_from([sq.SCHROEDER, sq.RIORDAN, sq.CAYLEY, sq.LAYERS_EVF]))
def test_projection_linear(a, b, spec):
    lhs = sq.project(a + b, spec)
    rhs = sq.project(a, spec) + sq.project(b, spec)
    assert lhs.terms == rhs.terms


def test_exports():
    assert sq.to_bfile([1, 1, 3], offset=0) == "0 1\n1 1\n2 3\n"
    rows = list(csv.reader(io.StringIO(sq.sequence_to_csv([1, 2], 1))))
    assert rows == [["index", "value"], ["1", "1"], ["2", "2"]]
    doc = json.loads(sq.projection_to_json(sq.schroeder(4)))
    assert doc["oeis"] == "A001003"
    assert [t["coefficient"] for t in doc["terms"]] == [1, 1, 3, 11]
    table = sq.table_to_csv(sq.cayley(2).rows([1, 2]), "v", "f")
    assert table.splitlines()[0] == "v,f,coefficient"


def test_format_orders():
    p = sq.schroeder(3)
    assert p.format(descending=True) == "3*v^2 + v + 1"
    assert p.format(descending=False) == "1 + v + 3*v^2"


def test_spec_validation():
    with pytest.raises(ValueError):
        sq.ProjectionSpec(())
    with pytest.raises(ValueError):
        sq.ProjectionSpec((("v", (1, 0)),))
