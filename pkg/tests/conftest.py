"""Shared fixtures: the session-wide enumeration run and the worked
five-by-five example used across module tests.

Set QUILTS_STRETCH=1 to extend the enumeration to order 12 (roughly two
hours); the default stops at order 11, which keeps the suite in the
minutes range.
"""

import os

import pytest

from quilts import pipeline, sequences
from quilts.dissection import Dissection
from quilts.planemaps import PlaneTriangulation

STRETCH = bool(os.environ.get("QUILTS_STRETCH"))
ORDER_MAX = 12 if STRETCH else 11


@pytest.fixture(scope="session")
def order_results():
    return pipeline.run_orders(ORDER_MAX)


@pytest.fixture(scope="session")
def table(order_results):
    return sequences.build_table(order_results)


# The five-by-five, order-eight worked example: one 3-square, three
# 2-squares and four units, with a four-corner crossing at (3, 4).
FIG1_SQUARES = ((0, 0, 3), (3, 0, 2), (3, 2, 2), (0, 3, 2),
                (2, 3, 1), (2, 4, 1), (3, 4, 1), (4, 4, 1))

# Its contact structure as a disk triangulation.  Vertices 0..3 are the
# cardinals N, E, S, W; vertices 4..11 are the squares in the order
# above.  Rotations list neighbours clockwise; the crossing is resolved
# through the 6-9 (third square over sixth) contact.
FIG1_ROTATIONS = (
    (1, 5, 4, 3),
    (2, 11, 6, 5, 0),
    (3, 7, 9, 10, 11, 1),
    (0, 4, 7, 2),
    (0, 5, 6, 8, 7, 3),
    (0, 1, 6, 4),
    (5, 1, 11, 10, 9, 8, 4),
    (4, 8, 9, 2, 3),
    (4, 6, 9, 7),
    (8, 6, 10, 2, 7),
    (6, 11, 2, 9),
    (6, 1, 2, 10),
)


@pytest.fixture(scope="session")
def fig1_dissection():
    d = Dissection(5, FIG1_SQUARES)
    d.validate()
    return d


@pytest.fixture(scope="session")
def fig1_triangulation():
    return PlaneTriangulation(8, FIG1_ROTATIONS)
