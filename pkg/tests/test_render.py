import pytest

from partition_ot import (
    Permutation,
    RenderSpec,
    UnsupportedRenderError,
    render,
    render_ascii,
    validate_array,
)

P42 = validate_array([4, 2], 1)
PLANE = validate_array([[3, 2], [1]], 2)
SWAP = Permutation.from_one_line("2 1")


def test_ascii_rows():
    assert render_ascii(P42) == "####\n##\n"
    assert render_ascii(validate_array([1], 1)) == "#\n"


def test_ascii_with_highlight_and_arrows():
    text = render_ascii(P42, SWAP)
    assert text == "##xx\n##\n(2, 0) -> (0, 2)\n(3, 0) -> (0, 3)\n"


def test_ascii_only_flat():
    with pytest.raises(UnsupportedRenderError):
        render(PLANE, RenderSpec(format="ascii"))


def test_svg_single_square():
    text = render(validate_array([1], 1), RenderSpec(format="svg"))
    assert text.count("<rect") == 1
    assert text.startswith("<svg ") and text.endswith("</svg>\n")


def test_svg_flat_highlight_colors():
    text = render(P42, RenderSpec(format="svg"), sigma=SWAP)
    assert text.count('fill="#9467bd"') == 4  # shared cells
    assert text.count('fill="#ff7f0e"') == 2  # moved cells
    assert text.count("<line") == 2  # one arrow per moved cell


def test_svg_cubes_three_faces_per_cell():
    text = render(PLANE, RenderSpec(format="svg"))
    assert text.count("<polygon") == 3 * PLANE.n


def test_svg_cube_highlight():
    sigma = Permutation.from_one_line("1 3 2")
    text = render(PLANE, RenderSpec(format="svg"), sigma=sigma)
    assert text.count('fill="#9467bd"') == 5  # top faces of shared cubes
    assert text.count('fill="#ff7f0e"') == 1  # top face of the moved cube


def test_svg_determinism():
    spec = RenderSpec(format="svg")
    assert render(PLANE, spec) == render(PLANE, spec)


def test_tikz_flat_and_cubes():
    flat = render(P42, RenderSpec(format="tikz"), sigma=SWAP)
    assert flat.count("\\filldraw") == 6
    assert flat.count("\\draw[->, dashed]") == 2
    cubes = render(PLANE, RenderSpec(format="tikz"))
    assert cubes.count("\\filldraw") == 3 * PLANE.n
    assert "cycle;" in cubes


def test_unsupported_combinations():
    solid = validate_array([[[1]]], 3)
    for fmt in ("ascii", "svg", "tikz"):
        with pytest.raises(UnsupportedRenderError):
            render(solid, RenderSpec(format=fmt))
    with pytest.raises(UnsupportedRenderError):
        render(P42, RenderSpec(format="png"))
