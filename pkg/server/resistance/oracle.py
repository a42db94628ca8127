# -*- coding: utf-8 -*-
"""
Ground truth for every pipeline stage: exact determinants of instantiated
minors and effective resistance by a direct exact linear solve.
"""
import csv
import logging
from fractions import Fraction

import networkx as nx
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMError

from resistance.errors import InvalidNodes, SingularSystem, ZeroDenominator
from resistance.families import drop

logger = logging.getLogger(__name__)


def det_exact(matrix):
    """
    Fraction-free (Bareiss) determinant over ZZ.
    """
    size = len(matrix)
    if size == 0:
        return 1
    dm = DomainMatrix([[ZZ(int(v)) for v in line] for line in matrix], (size, size), ZZ)
    return int(dm.det())


def _to_fraction(value):
    return Fraction(int(value.p), int(value.q))


def laplacian_graph(matrix):
    """
    Weighted graph read off the negative off-diagonal entries of a Laplacian.
    """
    graph = nx.Graph()
    graph.add_nodes_from(range(1, len(matrix) + 1))
    for i, line in enumerate(matrix, 1):
        for j in range(i + 1, len(matrix) + 1):
            if line[j - 1]:
                graph.add_edge(i, j, weight=-line[j - 1])
    return graph


def resistance_solve(spec, n, i, j):
    """
    v_i - v_j for a unit current entering at node i and leaving at node j,
    with node j grounded.
    """
    if i == j:
        raise InvalidNodes("resistance needs two distinct nodes, got %d twice" % i)
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidNodes("nodes %d, %d outside 1..%d" % (i, j, n))
    laplacian = spec.laplacian(n)
    if not nx.is_connected(laplacian_graph(laplacian)):
        raise SingularSystem("%s at n=%d is disconnected" % (spec.name, n))

    grounded = drop(laplacian, [j], [j])
    size = len(grounded)
    row = i if i < j else i - 1
    a = DomainMatrix([[QQ(int(v)) for v in line] for line in grounded], (size, size), QQ)
    b = DomainMatrix([[QQ(1) if k == row else QQ(0)] for k in range(1, size + 1)], (size, 1), QQ)
    try:
        potentials = a.lu_solve(b).to_Matrix()
    except (DMError, ZeroDivisionError):
        raise SingularSystem("grounded Laplacian of %s at n=%d is singular" % (spec.name, n))
    return _to_fraction(potentials[row - 1, 0])


def bapat_ratio(spec, n, i, j):
    """
    Det L({i,j}|{i,j}) / Det L(j|j).
    """
    if i == j:
        raise InvalidNodes("resistance needs two distinct nodes, got %d twice" % i)
    laplacian = spec.laplacian(n)
    denominator = det_exact(drop(laplacian, [j], [j]))
    if denominator == 0:
        raise ZeroDenominator("%s at n=%d has no spanning tree" % (spec.name, n))
    return Fraction(det_exact(drop(laplacian, [i, j], [i, j])), denominator)


def write_sequence_csv(seq, stream):
    """
    One row per term: index and exact value as a decimal string.
    """
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(['n', 'value'])
    for n, value in seq.items():
        writer.writerow([n, str(value)])
