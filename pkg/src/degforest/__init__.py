"""Forests and spanning trees with degree lower bounds on a vertex subset."""
from .cograph import cograph_forest, is_cograph, minimize_b
from .errors import (
    DisconnectedGraph,
    GraphFormatError,
    InstanceTooLarge,
    InternalError,
    NoTightSet,
    NotCograph,
    PreconditionRefuted,
)
from .forest import degree_forest, degree_spanning_tree, verify_certificate
from .graph import Certificate, DegreeSpec, ForestEdges, Graph, parse_constraints, parse_graph
from .wndt import DensityWitness, defect_forest, planar_girth_tree

__all__ = [
    "Certificate",
    "DegreeSpec",
    "DensityWitness",
    "DisconnectedGraph",
    "ForestEdges",
    "Graph",
    "GraphFormatError",
    "InstanceTooLarge",
    "InternalError",
    "NoTightSet",
    "NotCograph",
    "PreconditionRefuted",
    "cograph_forest",
    "defect_forest",
    "degree_forest",
    "degree_spanning_tree",
    "is_cograph",
    "minimize_b",
    "parse_constraints",
    "parse_graph",
    "planar_girth_tree",
    "verify_certificate",
]
