"""Shared fixtures: small hand-checked instances."""

import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from tetherpath.model import Instance, TurnPoint, build_corridor  # noqa: E402


def make_instance(alpha, budget, turns) -> Instance:
    return Instance(Fraction(alpha), Fraction(budget),
                    tuple(TurnPoint(Fraction(t), Fraction(h)) for t, h in turns))


TENT = make_instance(1, 1, [(0, 0), (3, 3), (6, 0)])
FLAT = make_instance(1, 2, [(0, 0), (3, 3), (6, 0)])
W = make_instance(1, 1, [(0, 0), (3, 3), (5, 1), (8, 4), (10, 2)])
CAP = make_instance(1, 1, [(0, 3), (3, 0), (6, 3)])
RISE = make_instance(1, Fraction(3, 2), [(0, 0), (4, 4), (6, 2), (9, 5)])


@pytest.fixture
def tent():
    return build_corridor(TENT)


@pytest.fixture
def flat():
    return build_corridor(FLAT)


@pytest.fixture
def w_corridor():
    return build_corridor(W)


@pytest.fixture
def cap():
    return build_corridor(CAP)


@pytest.fixture
def rise():
    return build_corridor(RISE)


def instance_json(instance: Instance) -> str:
    from tetherpath.data_loader import dumps, instance_to_dict
    return dumps(instance_to_dict(instance))


@pytest.fixture
def write_instance(tmp_path):
    """Write an instance file and return its path."""
    def _write(instance: Instance, name: str = 'instance.json'):
        path = tmp_path / name
        path.write_text(instance_json(instance), encoding='utf-8')
        return path
    return _write
