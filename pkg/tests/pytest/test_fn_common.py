"""common function for all eulerian tests"""

import random

import sympy

from exactpoly import Polynomial, VarSet
from genpoly import brute_spaces
from tests.pytest.golden_data.data_model import GoldenPoly


def to_sympy(p: Polynomial) -> sympy.Expr:
    """independent oracle: the same polynomial as a sympy expression"""
    symbols = sympy.symbols(" ".join(p.varset.names), seq=True)
    return sympy.Add(
        *(
            sympy.Integer(c) * sympy.Mul(*(v**e for v, e in zip(symbols, exp)))
            for exp, c in p.items()
        )
    )


def same_as_sympy(p: Polynomial, expr: sympy.Expr) -> bool:
    """p equals expr after expansion"""
    return sympy.expand(to_sympy(p) - expr) == 0


def random_polynomial(rng: random.Random, varset: VarSet, terms: int = 4, degree: int = 3) -> Polynomial:
    """small random polynomial with coefficients in -5..5"""
    return Polynomial(
        varset,
        {
            tuple(rng.randint(0, degree) for _ in varset): rng.randint(-5, 5)
            for _ in range(terms)
        },
    )


def golden_polynomial(golden: GoldenPoly) -> Polynomial:
    """golden terms over the varset of its kind"""
    return golden.to_polynomial(brute_spaces[golden.kind][1])
