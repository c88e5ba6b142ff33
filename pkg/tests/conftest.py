"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the stabilizer-chain machinery: group
closure is computed by repeated multiplication over plain sets, so order,
membership and intersection claims can be checked against an independent
path.
"""

import pytest

from cprforge.paper_cases import corpus as _corpus
from cprforge.perm_core import Permutation, compose


def closure_set(gens, degree):
    """All products of the generators, by breadth-first multiplication."""
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                c = compose(e, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def closure_order(gens, degree):
    return len(closure_set(gens, degree))


@pytest.fixture(scope="session")
def graph_corpus():
    return _corpus()
