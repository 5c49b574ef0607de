"""Exact q-series computations for G-Fano quantum periods and moonshine checks.

Coefficients are returned as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _gfano
from ._gfano import GfanoError

__all__ = [
    "GfanoError",
    "multiply",
    "divide",
    "compose",
    "reverse",
    "pow_rational",
    "laplace",
    "inverse_laplace",
    "regular_shift",
    "normalize",
    "eta_product",
    "klein_j",
    "hauptmodul",
    "mirror_map",
    "catalog_operator",
    "holomorphic_solution",
    "apply_operator",
    "iseries",
    "gseries",
    "families",
    "verify_identity",
    "verify_all",
    "epsilon",
    "iota",
    "frame_shape",
    "hecke_check",
]


def _enc(values):
    return [str(Fraction(v)) for v in values]


def _dec(values):
    return [Fraction(v) for v in values]


def _dec_q(pair):
    offset, body = pair
    return Fraction(offset), _dec(body)


def multiply(a, b):
    return _dec(_gfano.multiply(_enc(a), _enc(b)))


def divide(a, b):
    return _dec(_gfano.divide(_enc(a), _enc(b)))


def compose(outer, inner):
    return _dec(_gfano.compose(_enc(outer), _enc(inner)))


def reverse(a):
    return _dec(_gfano.reverse(_enc(a)))


def pow_rational(a, e):
    return _dec(_gfano.pow_rational(_enc(a), str(Fraction(e))))


def laplace(a):
    return _dec(_gfano.laplace(_enc(a)))


def inverse_laplace(a):
    return _dec(_gfano.inverse_laplace(_enc(a)))


def regular_shift(a, s):
    return _dec(_gfano.regular_shift(_enc(a), str(Fraction(s))))


def normalize(a):
    return _dec(_gfano.normalize(_enc(a)))


def eta_product(exponents, order):
    """(offset, body) of prod eta(q^i)^a_i; exponents maps i -> a_i."""
    return _dec_q(_gfano.eta_product(dict(exponents), order))


def klein_j(order):
    return _dec_q(_gfano.klein_j(order))


def hauptmodul(label, c, order):
    return _dec_q(_gfano.hauptmodul(label, str(Fraction(c)), order))


def mirror_map(label, c, order):
    return _dec(_gfano.mirror_map(label, str(Fraction(c)), order))


def catalog_operator(key):
    return _dec(_gfano.catalog_operator(key))


def holomorphic_solution(b, order):
    return _dec(_gfano.holomorphic_solution(_enc(b), order))


def apply_operator(b, f):
    return _dec(_gfano.apply_operator(_enc(b), _enc(f)))


def iseries(family, order):
    return _dec(_gfano.iseries(family, order))


def gseries(family, order):
    return _dec(_gfano.gseries(family, order))


def families():
    return json.loads(_gfano.families_json())


def verify_identity(family, s, c, order=60):
    return json.loads(_gfano.verify_identity_json(family, str(Fraction(s)), str(Fraction(c)), order))


def verify_all(order=60):
    return json.loads(_gfano.verify_all_json(order))


def epsilon(n):
    return Fraction(_gfano.epsilon(n))


def iota(n):
    return Fraction(_gfano.iota(n))


def frame_shape(text):
    info = _gfano.frame_shape(text)
    info["weight"] = Fraction(info["weight"])
    return info


def hecke_check(shape, bound=50, prime_bound=20):
    return json.loads(_gfano.hecke_check_json(shape, bound, prime_bound))
