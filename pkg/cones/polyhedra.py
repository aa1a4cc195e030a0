# cones/polyhedra.py
"""
Conversions between the two representations of a small exact cone, done by
the Parma Polyhedra Library (pplpy). Inputs are RatVec rows or generators;
ppl works on integer coefficients, so every vector is passed as its
primitive integer multiple.
"""
from itertools import combinations

import ppl

from core.logging_setup import logger
from exactmath import RatMat, RatVec, solve


def _integer_coefficients(vec):
    return [int(c) for c in RatVec(vec).primitive()]


def _linear_expression(vec):
    coefficients = _integer_coefficients(vec)
    return ppl.Linear_Expression(coefficients, 0)


def _padded(coefficients, dim):
    values = [int(c) for c in coefficients]
    return RatVec(values + [0] * (dim - len(values)))


def ppl_cone_from_generators(generators, dim):
    """C_Polyhedron spanned by the origin and a ray for every nonzero generator."""
    polyhedron = ppl.C_Polyhedron(dim, "empty")
    polyhedron.add_generator(ppl.point())
    for g in generators:
        g = RatVec(g, dim=dim)
        if g.is_zero():
            continue
        polyhedron.add_generator(ppl.ray(_linear_expression(g)))
    return polyhedron


def ppl_cone_from_inequalities(rows, dim):
    """C_Polyhedron {y : row . y >= 0 for every row}."""
    cs = ppl.Constraint_System()
    for row in rows:
        row = RatVec(row, dim=dim)
        if row.is_zero():
            continue
        cs.insert(_linear_expression(row) >= 0)
    polyhedron = ppl.C_Polyhedron(dim, "universe")
    polyhedron.add_constraints(cs)
    return polyhedron


def cone_generators_from_inequalities(rows, dim):
    """
    Generators of {y in Q^dim : row . y >= 0 for every row}.
    Lines come back as +/- pairs; an empty list means the cone is {0}.
    """
    polyhedron = ppl_cone_from_inequalities(rows, dim)
    generators = []
    for gen in polyhedron.minimized_generators():
        if gen.is_ray():
            generators.append(_padded(gen.coefficients(), dim))
        elif gen.is_line():
            line = _padded(gen.coefficients(), dim)
            generators.extend([line, -line])
    logger.debug(f"ppl H->V: {len(rows)} inequalities -> {len(generators)} generators in dimension {dim}.")
    return generators


def facet_normals(generators, dim):
    """Inner normals of the cone spanned by generators; equalities come back as +/- pairs."""
    polyhedron = ppl_cone_from_generators(generators, dim)
    normals = []
    for constraint in polyhedron.minimized_constraints():
        normal = _padded(constraint.coefficients(), dim)
        if normal.is_zero():
            continue
        normals.append(normal)
        if constraint.is_equality():
            normals.append(-normal)
    logger.debug(f"ppl V->H: {len(generators)} generators -> {len(normals)} facet normals in dimension {dim}.")
    return normals


def irredundant_generators(generators, dim):
    """Input generators with duplicate directions and those spanned by the others removed, order kept."""
    unique = []
    seen = set()
    for g in generators:
        key = RatVec(g, dim=dim).primitive()
        if key not in seen:
            seen.add(key)
            unique.append(g)

    kept = list(unique)
    index = 0
    while index < len(kept):
        others = kept[:index] + kept[index + 1:]
        candidate = ppl_cone_from_generators([kept[index]], dim)
        if ppl_cone_from_generators(others, dim).contains(candidate):
            logger.debug(f"Pruning redundant generator {kept[index]!r}.")
            kept = others
        else:
            index += 1
    return kept


def nonnegative_combination(point, generators, dim):
    """
    Coefficients c >= 0 with sum c_i * generators[i] == point, or None.
    Searches linearly independent subsets of the generators (Caratheodory).
    """
    point = RatVec(point, dim=dim)
    if point.is_zero():
        return tuple(RatVec.zero(len(generators)))
    for size in range(1, min(dim, len(generators)) + 1):
        for subset in combinations(range(len(generators)), size):
            matrix = RatMat.from_columns([generators[i] for i in subset], nrows=dim)
            coefficients = solve(matrix, point)
            if coefficients is None or any(c < 0 for c in coefficients):
                continue
            full = [0] * len(generators)
            for i, c in zip(subset, coefficients):
                full[i] = c
            return tuple(RatVec(full))
    return None
