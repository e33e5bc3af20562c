from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

import susa as sa
from tests.strategies import frustum_sides, positive_rationals


def test_cuboid_prism_and_pyramid():
    assert sa.volume_cuboid(sa.Cuboid(1, 1, 1)) == 1
    assert sa.volume_prism(sa.PrismSpec(6, 5)) == 30
    assert sa.volume_pyramid(sa.PyramidSpec(6, 5)) == 10


@settings(max_examples=500)
@given(positive_rationals, positive_rationals)
def test_three_pyramids_fill_a_prism(base_area, h):
    assert 3 * sa.volume_pyramid(sa.PyramidSpec(base_area, h)) == sa.volume_prism(
        sa.PrismSpec(base_area, h)
    )


@settings(max_examples=500)
@given(positive_rationals)
def test_wing_is_a_cube_less_a_square_pyramid(h):
    assert sa.volume_square_pyramid(h) == h**3 / 3
    assert sa.volume_wing(h) == h**3 - sa.volume_square_pyramid(h)
    assert sa.volume_wing(h) == sa.volume_pyramid(sa.PyramidSpec(2 * h * h, h))


def test_descriptors_reject_bad_parameters():
    with pytest.raises(ValueError):
        sa.Cuboid(0, 1, 1)
    with pytest.raises(ValueError):
        sa.SquareFrustum(7, 10, 1)
    with pytest.raises(ValueError):
        sa.SquareFrustum(7, 7, 1)
    with pytest.raises(ValueError):
        sa.NgonFrustum(2, 10, 7, 1)
    with pytest.raises(ValueError):
        sa.TruncatedTriangularPrism(0, 0, 0, 1, 1)
    with pytest.raises(ValueError):
        sa.GrainHeap(4, 0)
    with pytest.raises(ValueError):
        sa.RotationSolid("pyramid", 1)


def test_descriptors_accept_numerals():
    assert sa.SquareFrustum("10", "7", "1;30") == sa.SquareFrustum(10, 7, Fraction(3, 2))


def test_frustum_of_bm_85194():
    frustum = sa.SquareFrustum(10, 7, sa.convert(sa.Quantity.of(18, "kus"), "nindan").value)
    volume = sa.Quantity(sa.volume_frustum_babylonian(frustum), sa.NINDAN3)
    assert sa.convert(volume, "sar").value == 1314
    assert sa.format_sex(sa.convert(volume, "sar").value) == "21,54"


@settings(max_examples=1000)
@given(frustum_sides())
def test_babylonian_and_egyptian_frustum_rules_agree(sides):
    frustum = sa.SquareFrustum(*sides)
    assert sa.volume_frustum_babylonian(frustum) == sa.volume_frustum_egyptian(frustum)


@settings(max_examples=500)
@given(frustum_sides())
def test_frustum_is_a_pyramid_less_its_apex(sides):
    a, b, h = sides
    frustum = sa.SquareFrustum(a, b, h)
    apex = sa.frustum_apex_extension(frustum)
    whole = sa.volume_pyramid(sa.PyramidSpec(a * a, h + apex))
    top = sa.volume_pyramid(sa.PyramidSpec(b * b, apex))
    assert whole - top == sa.volume_frustum_egyptian(frustum)


def test_frustum_top_from_slope():
    depth = sa.convert(sa.Quantity.of(18, "kus"), "nindan").value
    assert sa.frustum_top_from_slope(10, depth) == 7
    assert sa.frustum_top_from_slope(10, depth, sa.Slope(Fraction(1, 2))) == Fraction(17, 2)
    with pytest.raises(ValueError):
        sa.frustum_top_from_slope(3, 2)


def test_ngon_frustum():
    square = sa.NgonFrustum(4, 10, 7, Fraction(3, 2))
    assert sa.volume_frustum_ngon(square) == sa.volume_frustum_egyptian(sa.SquareFrustum(10, 7, Fraction(3, 2)))
    hexagon = sa.volume_frustum_ngon(sa.NgonFrustum(6, 2, 1, 3))
    expected = 6 * sympy.Integer(3) / 12 * sympy.sqrt(3) * 7
    assert abs(hexagon - sympy.N(expected, 60)) < sympy.Float("1e-45")


def test_slope_angle():
    assert sa.slope_angle(sa.Slope(1)) == 45
    assert abs(sa.slope_angle(sa.Slope(2)) - sympy.N(sympy.deg(sympy.atan(sympy.Rational(1, 2))), 60)) < 1e-40


def test_rotation_solids():
    sphere = sa.volume_rotation(sa.RotationSolid("sphere", 3))
    assert abs(sphere - sympy.N(36 * sympy.pi, 60)) < 1e-40
    cylinder = sa.volume_rotation(sa.RotationSolid(sa.RotationKind.cylinder, 1, 2))
    cone = sa.volume_rotation(sa.RotationSolid(sa.RotationKind.cone, 1, 2))
    assert abs(cylinder - 3 * cone) < 1e-40


def test_volume_precision():
    coarse = sa.volume_rotation(sa.RotationSolid("sphere", 1), precision=5)
    assert str(coarse) == "4.1888"


def test_truncated_prism():
    prism = sa.TruncatedTriangularPrism(x=4, x1=3, x2=3, y=6, h=3)
    assert prism.z == 10
    assert sa.volume_truncated_prism(prism) == 72


def test_truncated_prism_with_unequal_ends():
    prism = sa.TruncatedTriangularPrism(x=4, x1=1, x2=2, y=6, h=3)
    assert sa.volume_truncated_prism(prism) == 4 * 6 * 3 / Fraction(2) + (1 + 2) * 6 * 3 / Fraction(3)


def test_grain_heap_of_smt_14():
    heap = sa.GrainHeap(4, 3)
    assert sa.grain_heap_dims(heap) == (6, 10)
    assert sa.volume_grain_heap(heap) == 72
    assert sa.grain_heap_parts(heap) == (36, 18, 18)
    assert sa.volume_truncated_prism(sa.grain_heap_as_truncated_prism(heap)) == 72


def test_grain_heap_with_another_slope():
    heap = sa.GrainHeap(4, 3, slope_x=2)
    assert sa.grain_heap_dims(heap) == (3, 7)
    with pytest.raises(sa.UnsupportedSlopeError):
        sa.volume_grain_heap(heap)
    assert sa.volume_of(heap) == sa.volume_truncated_prism(sa.grain_heap_as_truncated_prism(heap))


def test_solve_grain_heap_top():
    volume = sa.Quantity.of("14,24", "sar")
    assert sa.solve_grain_heap_top(volume, sa.Quantity.of(3, "nindan")) == 4
    assert sa.solve_grain_heap_top(72, 3) == 4
    assert sa.solve_grain_heap_top(volume, sa.Quantity.of(6, "gi")) == 4


def test_solve_grain_heap_top_errors():
    with pytest.raises(sa.InfeasibleHeapError):
        sa.solve_grain_heap_top(35, 3)
    with pytest.raises(ValueError):
        sa.solve_grain_heap_top(72, 0)


@settings(max_examples=500)
@given(positive_rationals, positive_rationals)
def test_grain_heap_round_trip(x, h):
    heap = sa.GrainHeap(x, h)
    assert sa.solve_grain_heap_top(sa.volume_grain_heap(heap), h) == x
    assert sum(sa.grain_heap_parts(heap)) == sa.volume_grain_heap(heap)


@pytest.mark.parametrize(
    "solid",
    [
        sa.Cuboid(1, 2, 3),
        sa.PrismSpec(6, 5),
        sa.PyramidSpec(6, 5),
        sa.SquareFrustum(10, 7, Fraction(3, 2)),
        sa.NgonFrustum(6, 2, 1, 3),
        sa.TruncatedTriangularPrism(4, 1, 2, 6, 3),
        sa.GrainHeap(4, 3),
        sa.RotationSolid("cone", Fraction(1, 2), 2),
    ],
)
def test_solid_json(solid):
    data = sa.solid_to_json(solid)
    assert sa.SOLID_KINDS[data["kind"]] is type(solid)
    assert sa.solid_from_json(data) == solid


def test_solid_json_shape():
    assert sa.solid_to_json(sa.SquareFrustum(10, 7, Fraction(3, 2))) == {
        "kind": "frustum",
        "a": "10",
        "b": "7",
        "h": "1;30",
    }
    assert sa.solid_to_json(sa.RotationSolid("sphere", 1))["solid"] == "sphere"


@pytest.mark.parametrize(
    "data",
    [
        {"kind": "tesseract"},
        {"kind": "cuboid", "a": "1", "b": "1"},
        {"kind": "cuboid", "a": "1", "b": "1", "c": "1", "d": "1"},
        {"kind": "frustum", "a": "7", "b": "10", "h": "1"},
    ],
)
def test_solid_from_json_rejects(data):
    with pytest.raises(ValueError):
        sa.solid_from_json(data)


def test_volume_of():
    frustum = sa.SquareFrustum(10, 7, Fraction(3, 2))
    assert sa.volume_of(frustum) == sa.volume_of(frustum, "egyptian") == Fraction(219, 2)
    assert sa.volume_of(sa.GrainHeap(4, 3)) == 72
    with pytest.raises(TypeError):
        sa.volume_of(sa.Slope(1))


@pytest.mark.parametrize("r", [Fraction(1, 60), Fraction(1, 2), 1, Fraction(7, 2), 30, 3600])
def test_sphere_is_twice_the_cylinder_less_the_sphere(r):
    sphere = sa.volume_rotation(sa.RotationSolid("sphere", r))
    cylinder = sa.volume_rotation(sa.RotationSolid("cylinder", r, 2 * r))
    assert abs(sphere - 2 * (cylinder - sphere)) <= 1e-12 * sphere


def test_heap_with_only_the_wings_has_no_top():
    assert sa.solve_grain_heap_top(36, 3) == 0


@settings(max_examples=1000)
@given(positive_rationals, positive_rationals)
def test_grain_heap_is_a_truncated_prism(x, h):
    heap = sa.GrainHeap(x, h)
    assert sa.volume_grain_heap(heap) == sa.volume_truncated_prism(sa.TruncatedTriangularPrism(x, h, h, 2 * h, h))


@settings(max_examples=200, deadline=None)
@given(frustum_sides())
def test_square_ngon_frustum_is_exact(sides):
    a, b, h = sides
    assert sa.volume_frustum_ngon(sa.NgonFrustum(4, a, b, h)) == sa.volume_frustum_egyptian(sa.SquareFrustum(a, b, h))


def test_solid_json_keeps_non_terminating_values_exact():
    cuboid = sa.Cuboid(Fraction(1, 7), 1, 1)
    data = sa.solid_to_json(cuboid)
    assert data["a"] == "1/7"
    assert data["b"] == "1"
    assert sa.solid_from_json(data) == cuboid


def test_solid_json_accepts_integer_parameters():
    assert sa.solid_from_json({"kind": "cuboid", "a": 1, "b": "2", "c": 3}) == sa.Cuboid(1, 2, 3)


@pytest.mark.parametrize("value", [1.5, True, None, "1/0"])
def test_solid_json_rejects_inexact_parameters(value):
    with pytest.raises(ValueError) as error:
        sa.solid_from_json({"kind": "cuboid", "a": value, "b": "1", "c": "1"})
    assert "cuboid.a" in str(error.value)
