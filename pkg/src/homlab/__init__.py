"""Exact graph homomorphism counting and extremal verification at desk scale."""

from .canon import canonical_certificate, canonical_form, certificate, isomorphic
from .formats import ParseError, parse_graph6, parse_hgraph, serialize_graph6, serialize_hgraph
from .graphs import HGraph, SimpleGraph, join, make_family
from .hom import (
    closed_form_cycle_kq,
    closed_form_k2,
    closed_form_star,
    count_hom,
    count_hom_cycle,
    count_hom_path,
    count_hom_restricted,
    count_path_endpoints,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HGraph",
    "ParseError",
    "SimpleGraph",
    "canonical_certificate",
    "canonical_form",
    "certificate",
    "closed_form_cycle_kq",
    "closed_form_k2",
    "closed_form_star",
    "count_hom",
    "count_hom_cycle",
    "count_hom_path",
    "count_hom_restricted",
    "count_path_endpoints",
    "isomorphic",
    "join",
    "make_family",
    "parse_graph6",
    "parse_hgraph",
    "serialize_graph6",
    "serialize_hgraph",
]
