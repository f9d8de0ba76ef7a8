import pytest

from germglue import (GermSurjection, GluingDatum, Polynomial, Subspace,
                      fiber_product_presentation, make_germ, origin_subspace,
                      self_glue)


@pytest.fixture(scope="session")
def line():
    return make_germ("line", ["x"], [])


@pytest.fixture(scope="session")
def plane():
    return make_germ("plane", ["x1", "x2"], [])


@pytest.fixture(scope="session")
def node():
    return make_germ("node", ["x", "y"], ["x*y"])


@pytest.fixture(scope="session")
def cusp():
    return make_germ("cusp", ["x", "y"], ["y^2 - x^3"])


@pytest.fixture(scope="session")
def point():
    return make_germ("pt", [], [])


def glue_at_point(X, Y, name):
    """Glue two germs at a reduced point."""
    pt = make_germ(f"pt_{name}", [], [])
    a = GermSurjection(X, pt, [Polynomial.zero(0)] * X.nvars)
    b = GermSurjection(Y, pt, [Polynomial.zero(0)] * Y.nvars)
    return fiber_product_presentation(GluingDatum(X, Y, pt, a, b), name=name)


@pytest.fixture(scope="session")
def node_gluing(line):
    other = make_germ("line2", ["y"], [])
    return glue_at_point(line, other, "node_glued")


@pytest.fixture(scope="session")
def cusp_line_gluing(cusp):
    other = make_germ("linew", ["w"], [])
    return glue_at_point(cusp, other, "cusp_line")


@pytest.fixture(scope="session")
def plane_line_gluing(plane):
    other = make_germ("linew2", ["w"], [])
    return glue_at_point(plane, other, "plane_line")


@pytest.fixture(scope="session")
def self_line(line):
    return self_glue(line, origin_subspace(line), name="self_line")


@pytest.fixture(scope="session")
def self_plane_line(plane):
    axis = Subspace(plane, ["x2"], name="axis")
    return self_glue(plane, axis, name="self_plane_line")


@pytest.fixture(scope="session")
def self_plane_origin(plane):
    return self_glue(plane, origin_subspace(plane), name="self_plane_origin")


@pytest.fixture(scope="session")
def two_cusps(cusp):
    other = make_germ("cusp2", ["s", "t"], ["t^2 - s^3"])
    return glue_at_point(cusp, other, "two_cusps")


@pytest.fixture(scope="session")
def self_node_branch(node):
    branch = Subspace(node, ["x"], name="branch")
    return self_glue(node, branch, name="self_node_branch")
