import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bms.errors import DivisibilityError, SchemaError
from bms.mspace import (
    compose,
    enumerate_homs,
    identity,
    is_isomorphism,
    morphism_from_dict,
    morphism_to_dict,
    new_morphism,
    new_space,
    space_from_dict,
    space_to_dict,
)


def test_new_space_examples():
    ab = new_space(["a", "b"], [1, 2])
    assert ab.mult("a") == 1 and ab.mult("b") == 2
    assert len(new_space([], [])) == 0
    assert new_space(["p"], [1]).mults == (1,)


def test_new_space_errors():
    with pytest.raises(SchemaError):
        new_space(["a", "a"], [1, 2])
    with pytest.raises(SchemaError):
        new_space(["a"], [0])
    with pytest.raises(SchemaError):
        new_space(["a"], [-3])
    with pytest.raises(SchemaError):
        new_space(["a", "b"], [1])


def test_new_morphism_zeta():
    x4 = new_space(["x"], [4])
    v2 = new_space(["v"], [2])
    m = new_morphism(x4, v2, {"x": "v"})
    assert m.zeta("x") == 2


def test_new_morphism_divisibility_error_reports_point():
    x1 = new_space(["x"], [1])
    v2 = new_space(["v"], [2])
    with pytest.raises(DivisibilityError) as err:
        new_morphism(x1, v2, {"x": "v"})
    assert "'x'" in str(err.value) and "2" in str(err.value) and "1" in str(err.value)


def test_identity_has_unit_zeta():
    ab = new_space(["a", "b"], [3, 5])
    assert identity(ab).zetas == (1, 1)


def test_compose_with_identity():
    x4 = new_space(["x"], [4])
    v2 = new_space(["v"], [2])
    f = new_morphism(x4, v2, {"x": "v"})
    assert compose(f, identity(v2)) == f
    assert compose(identity(x4), f) == f


def test_compose_zeta_multiplies():
    # ({x},4)->({v},2)->({w},1): 4 = 2*2 by direct evaluation
    x4 = new_space(["x"], [4])
    v2 = new_space(["v"], [2])
    w1 = new_space(["w"], [1])
    f = new_morphism(x4, v2, {"x": "v"})
    g = new_morphism(v2, w1, {"v": "w"})
    assert compose(f, g).zetas == (4,)


def test_compose_mismatch():
    x4 = new_space(["x"], [4])
    v2 = new_space(["v"], [2])
    other = new_space(["v"], [4])
    f = new_morphism(x4, v2, {"x": "v"})
    g = new_morphism(other, x4, {"v": "x"})
    with pytest.raises(SchemaError):
        compose(f, g)


def test_is_isomorphism():
    ab = new_space(["a", "b"], [2, 2])
    assert is_isomorphism(identity(ab))
    swap = new_morphism(ab, ab, {"a": "b", "b": "a"})
    assert is_isomorphism(swap)
    x4 = new_space(["x"], [4])
    v2 = new_space(["v"], [2])
    assert not is_isomorphism(new_morphism(x4, v2, {"x": "v"}))


def test_iso_iff_two_sided_inverse():
    spaces = [
        new_space([], []),
        new_space(["a"], [2]),
        new_space(["a", "b"], [1, 2]),
        new_space(["a", "b"], [2, 2]),
    ]
    for x, y in itertools.product(spaces, repeat=2):
        for f in enumerate_homs(x, y):
            invertible = any(
                compose(f, g) == identity(x) and compose(g, f) == identity(y)
                for g in enumerate_homs(y, x)
            )
            assert invertible == is_isomorphism(f)


def test_enumerate_homs_counts():
    x = new_space(["x"], [2])
    y = new_space(["y1", "y2"], [1, 2])
    # both targets divide 2, checked exhaustively by hand
    assert len(enumerate_homs(x, y)) == 2
    # 2 does not divide 1 at y1, so no map exists
    assert len(enumerate_homs(y, x)) == 0
    # the empty space is initial
    assert len(enumerate_homs(new_space([], []), y)) == 1
    assert len(enumerate_homs(x, new_space([], []))) == 0


def test_enumerate_homs_order_and_validity():
    x = new_space(["x1", "x2"], [4, 4])
    y = new_space(["y1", "y2"], [2, 4])
    homs = enumerate_homs(x, y)
    targets = [h.targets for h in homs]
    assert targets == sorted(targets, key=lambda t: tuple(y.index(l) for l in t))
    assert len(set(homs)) == len(homs)
    for h in homs:
        assert new_morphism(x, y, h.mapping) == h


def test_space_json_round_trip():
    ab = new_space(["a", "b"], [1, 2])
    data = space_to_dict(ab)
    assert data == {"points": [{"label": "a", "mult": 1}, {"label": "b", "mult": 2}]}
    assert space_from_dict(data) == ab


def test_morphism_json_round_trip():
    x4 = new_space(["x"], [4])
    v2 = new_space(["v"], [2])
    f = new_morphism(x4, v2, {"x": "v"})
    data = morphism_to_dict(f)
    assert data["map"] == {"x": "v"}
    assert morphism_from_dict(data) == f


def test_bad_json_shapes():
    with pytest.raises(SchemaError):
        space_from_dict({"pts": []})
    with pytest.raises(SchemaError):
        space_from_dict({"points": [{"label": "a"}]})
    with pytest.raises(SchemaError):
        morphism_from_dict({"dom": {"points": []}, "cod": {"points": []}})


@st.composite
def chained_morphisms(draw):
    """A composable pair built so that divisibility holds by construction."""
    n = draw(st.integers(1, 3))
    base = [draw(st.integers(1, 3)) for _ in range(n)]
    z = new_space([f"z{i}" for i in range(n)], base)
    k1 = [draw(st.integers(1, 3)) for _ in range(n)]
    y = new_space([f"y{i}" for i in range(n)], [b * k for b, k in zip(base, k1)])
    k2 = [draw(st.integers(1, 3)) for _ in range(n)]
    x = new_space([f"x{i}" for i in range(n)], [m * k for m, k in zip(y.mults, k2)])
    f = new_morphism(x, y, {f"x{i}": f"y{i}" for i in range(n)})
    g = new_morphism(y, z, {f"y{i}": f"z{i}" for i in range(n)})
    return f, g


@settings(max_examples=60, deadline=None)
@given(chained_morphisms())
def test_zeta_multiplicativity_property(pair):
    f, g = pair
    fg = compose(f, g)
    assert fg.zetas == tuple(zf * g.zeta(t) for zf, t in zip(f.zetas, f.targets))
