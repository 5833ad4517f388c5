"""Exchangeable random network models: Moebius parameters, estimation and
Markov structure over dyads.

Networks are passed as a node count and a list of 1-based (i, j) edges.
Exact values come back as fractions.Fraction.
"""

import json
from fractions import Fraction

from . import _core
from ._core import InvalidParameters, ParseError, SizeCapExceeded

__all__ = [
    "InvalidParameters",
    "ParseError",
    "SizeCapExceeded",
    "class_keys",
    "collisions",
    "dissociated_mle",
    "ergm_eval",
    "ergm_fit",
    "exch_mle",
    "extend",
    "graphon_z",
    "markov",
    "paper_examples",
    "sample_beta",
    "sample_er",
    "sample_graphon",
    "skeleton",
    "stats",
]


def _exact(value):
    return Fraction(value) if isinstance(value, str) else value


def _doc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def class_keys(n):
    return _core.class_keys(n)


def stats(n, edges):
    return json.loads(_core.stats(n, list(edges)))


def exch_mle(n, edges, use_float=False):
    """Map class key -> z for the exchangeable maximum likelihood estimate."""
    doc = json.loads(_core.exch_mle(n, list(edges), use_float))
    return {row["class"]: _exact(row["z"]) for row in doc["z"]}


def dissociated_mle(n, edges, restarts=32, seed=None):
    if seed is None:
        return json.loads(_core.dissociated_mle(n, list(edges), restarts))
    return json.loads(_core.dissociated_mle(n, list(edges), restarts, seed))


def ergm_fit(family, n, edges):
    return json.loads(_core.ergm_fit(family, n, list(edges)))


def ergm_eval(family, nu, n, edges):
    return json.loads(_core.ergm_eval(family, _doc(nu), n, list(edges)))


def markov(joint, dependence, use_float=False, tolerance=1e-10):
    return json.loads(_core.markov(_doc(joint), _doc(dependence), use_float, tolerance))


def skeleton(joint, use_float=False, tolerance=1e-10):
    return json.loads(_core.skeleton(_doc(joint), use_float, tolerance))


def extend(z, m, dissociated=False, use_float=False, tolerance=1e-9, restarts=8, seed=None):
    return json.loads(_core.extend(_doc(z), m, dissociated, use_float, tolerance, restarts, seed))


def collisions(n):
    return json.loads(_core.collisions(n))


def graphon_z(graphon, class_key, method="quadrature", resolution=64, samples=100000, seed=0):
    return json.loads(_core.graphon_z(graphon, class_key, method, resolution, samples, seed))


def sample_er(n, p, seed, count=1):
    return json.loads(_core.sample_er(n, p, seed, count))


def sample_beta(beta, seed, count=1):
    return json.loads(_core.sample_beta(list(beta), seed, count))


def sample_graphon(graphon, n, seed, count=1):
    return json.loads(_core.sample_graphon(graphon, n, seed, count))


def paper_examples():
    """List of (name, passed, detail) for the worked-example battery."""
    return _core.paper_examples()
