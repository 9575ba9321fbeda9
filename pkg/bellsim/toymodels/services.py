"""
Toy conditional-probability tables and their local-hidden-variable analysis.

Rows of a two-input table are the setting pairs (A, B) in the order
(+,+), (+,-), (-,+), (-,-); columns are the outcome pairs (a, b) in the same
order. Row index r therefore encodes x = r // 2 (0 for A=+1) and y = r % 2.
"""

import itertools
import logging

import numpy as np
from scipy.optimize import linprog

from bellsim.enums import Interpretation
from bellsim.transform.utils import FloatArray
from .constants import (
    FEASIBILITY_TOLERANCE,
    LOCAL_CHSH_BOUND,
    OUTCOME_PAIRS,
    SINGLE_INPUT_ROWS,
    TWO_INPUT_ROWS,
)
from .exceptions import FeasibilitySolverError, InvalidProbabilityError
from .schemas import (
    ChshCertificate,
    CondProbTable,
    FeasibilityVerdict,
    HiddenVariableModel,
    LocalMixture,
    LocalStrategy,
    ModelPoint,
    SignalingCertificate,
)

logger = logging.getLogger(__name__)

# Support cells of the rows: (first cell, second cell) as column indices
_SUPPORT = ((0, 3), (0, 3), (0, 3), (1, 2))


def _check_probabilities(p: tuple[float, float, float, float]) -> None:
    for index, value in enumerate(p, start=1):
        if not 0.0 <= value <= 1.0:
            raise InvalidProbabilityError(f"p{index}", value)


def _support_matrix(p: tuple[float, float, float, float]) -> FloatArray:
    _check_probabilities(p)
    matrix = np.zeros((4, 4), dtype=np.float64)
    for row, (first, second) in enumerate(_SUPPORT):
        matrix[row, first] = p[row]
        matrix[row, second] = 1.0 - p[row]
    return matrix


def table1(p1: float, p2: float, p3: float, p4: float) -> CondProbTable:
    """Two binary inputs: rows 1-3 on (+,+)/(-,-), row 4 on (+,-)/(-,+)."""
    return CondProbTable.from_matrix(_support_matrix((p1, p2, p3, p4)), TWO_INPUT_ROWS)


def table2(p1: float, p2: float, p3: float, p4: float) -> CondProbTable:
    """Same probabilities, read as one input D with four values."""
    return CondProbTable.from_matrix(_support_matrix((p1, p2, p3, p4)), SINGLE_INPUT_ROWS)


def row_correlations(table: CondProbTable) -> tuple[float, float, float, float]:
    """p(++) + p(--) - p(+-) - p(-+) for every row."""
    m = table.matrix
    values = m[:, 0] + m[:, 3] - m[:, 1] - m[:, 2]
    return (float(values[0]), float(values[1]), float(values[2]), float(values[3]))


def signaling_gaps(table: CondProbTable) -> dict[str, float]:
    """Largest change of each party's marginal under a change of the other's setting."""
    m = table.matrix
    a_plus = m[:, 0] + m[:, 1]
    b_plus = m[:, 0] + m[:, 2]
    return {
        "A": float(max(abs(a_plus[0] - a_plus[1]), abs(a_plus[2] - a_plus[3]))),
        "B": float(max(abs(b_plus[0] - b_plus[2]), abs(b_plus[1] - b_plus[3]))),
    }


def no_signaling(table: CondProbTable, tolerance: float = FEASIBILITY_TOLERANCE) -> bool:
    return all(gap <= tolerance for gap in signaling_gaps(table).values())


def chsh_signs() -> list[tuple[int, int, int, int]]:
    """The eight CHSH-type sign patterns: one minus sign, times an overall sign."""
    patterns: list[tuple[int, int, int, int]] = []
    for k in range(4):
        s0, s1, s2, s3 = (-1 if i == k else 1 for i in range(4))
        patterns += [(s0, s1, s2, s3), (-s0, -s1, -s2, -s3)]
    return patterns


def chsh_values(table: CondProbTable) -> list[float]:
    correlations = np.array(row_correlations(table))
    return [float(np.dot(signs, correlations)) for signs in chsh_signs()]


def chsh_certificate(table: CondProbTable) -> ChshCertificate:
    """The CHSH-type combination with the largest value."""
    values = chsh_values(table)
    index = int(np.argmax(values))
    return ChshCertificate(index=index, signs=chsh_signs()[index], value=values[index])


def fine_decision(table: CondProbTable) -> bool:
    """Locality decided by no-signaling plus all eight CHSH bounds."""
    return no_signaling(table) and max(chsh_values(table)) <= (
        LOCAL_CHSH_BOUND + FEASIBILITY_TOLERANCE
    )


def local_strategies() -> list[LocalStrategy]:
    return [
        LocalStrategy(a_plus=a0, a_minus=a1, b_plus=b0, b_minus=b1)
        for a0, a1, b0, b1 in itertools.product((1, -1), repeat=4)
    ]


def _cell(a: int, b: int) -> int:
    return (0 if a > 0 else 2) + (0 if b > 0 else 1)


def vertex_matrix(strategies: list[LocalStrategy]) -> FloatArray:
    """Column j is the flattened table produced by strategy j."""
    matrix = np.zeros((16, len(strategies)), dtype=np.float64)
    for j, s in enumerate(strategies):
        for row in range(4):
            a = s.a_plus if row // 2 == 0 else s.a_minus
            b = s.b_plus if row % 2 == 0 else s.b_minus
            matrix[4 * row + _cell(a, b), j] = 1.0
    return matrix


def mixture_table(mixture: LocalMixture) -> FloatArray:
    weights = np.array(mixture.weights, dtype=np.float64)
    return (vertex_matrix(mixture.strategies) @ weights).reshape(4, 4)


def _solve_local_mixture(table: CondProbTable) -> LocalMixture | None:
    strategies = local_strategies()
    vertices = vertex_matrix(strategies)
    a_eq = np.vstack([vertices, np.ones((1, len(strategies)))])
    b_eq = np.append(table.matrix.ravel(), 1.0)
    lp = linprog(
        np.zeros(len(strategies)), A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs"
    )
    if lp.status == 2:
        return None
    if lp.status != 0:
        raise FeasibilitySolverError(lp.status, lp.message)

    weights = np.clip(lp.x, 0.0, None)
    residual = float(np.max(np.abs(vertices @ weights - table.matrix.ravel())))
    if residual > FEASIBILITY_TOLERANCE:
        logger.warning(f"LP solution rejected: residual {residual:.3g}")
        return None
    return LocalMixture(strategies=strategies, weights=[float(w) for w in weights])


def realize_single_input(table: CondProbTable) -> HiddenVariableModel:
    """Product sample space over the rows: component D picks one cell of row D.

    Each point's weight is the product of the chosen cells' probabilities;
    zero-weight points are dropped.
    """
    supports = [
        [(column, float(p)) for column, p in enumerate(row) if p > 0.0] for row in table.p
    ]
    points = []
    for choice in itertools.product(*supports):
        weight = 1.0
        for _, p in choice:
            weight *= p
        if weight > 0.0:
            outcomes = tuple(OUTCOME_PAIRS[column] for column, _ in choice)
            points.append(ModelPoint(weight=weight, outcomes=outcomes))
    return HiddenVariableModel(points=points)


def realize_table2(p1: float, p2: float, p3: float, p4: float) -> HiddenVariableModel:
    """Explicit local model of the single-input table with parameters p1..p4."""
    return realize_single_input(table2(p1, p2, p3, p4))


def reconstruct_table(model: HiddenVariableModel) -> FloatArray:
    """Conditional probabilities p(cell | D) implied by a hidden-variable model."""
    matrix = np.zeros((4, 4), dtype=np.float64)
    for point in model.points:
        for d, outcome in enumerate(point.outcomes):
            matrix[d, OUTCOME_PAIRS.index(outcome)] += point.weight
    return matrix


def local_feasibility(
    table: CondProbTable, interpretation: Interpretation = Interpretation.TWO_INPUT
) -> FeasibilityVerdict:
    """Decide whether a local hidden-variable model reproduces the table.

    Two-input tables are tested for membership in the convex hull of the 16
    deterministic local strategies. Single-input tables are always
    reproducible; the witness is the product-space model of realize_table2.
    """
    if interpretation is Interpretation.SINGLE_INPUT:
        model = realize_single_input(table)
        logger.info(f"Single-input table realized with {len(model.points)} points")
        return FeasibilityVerdict(feasible=True, interpretation=interpretation, model=model)

    mixture = _solve_local_mixture(table)
    if mixture is not None:
        logger.info("Two-input table is local")
        return FeasibilityVerdict(feasible=True, interpretation=interpretation, mixture=mixture)

    certificate: ChshCertificate | SignalingCertificate = chsh_certificate(table)
    if certificate.value <= LOCAL_CHSH_BOUND + FEASIBILITY_TOLERANCE:
        gaps = signaling_gaps(table)
        party = max(gaps, key=lambda name: gaps[name])
        certificate = SignalingCertificate(party=party, gap=gaps[party])
    logger.info(f"Two-input table is not local: {certificate.kind.value} certificate")
    return FeasibilityVerdict(
        feasible=False, interpretation=interpretation, certificate=certificate
    )


def pr_box(alpha: int = 0, beta: int = 0, gamma: int = 0) -> CondProbTable:
    """Nonlocal box with a XOR b = xy XOR alpha x XOR beta y XOR gamma, uniform otherwise."""
    matrix = np.zeros((4, 4), dtype=np.float64)
    for row in range(4):
        x, y = divmod(row, 2)
        parity = (x * y) ^ (alpha * x) ^ (beta * y) ^ gamma
        for column in range(4):
            a, b = divmod(column, 2)
            if a ^ b == parity:
                matrix[row, column] = 0.5
    return CondProbTable.from_matrix(matrix, TWO_INPUT_ROWS)


def _local_vertex_tables() -> list[FloatArray]:
    vertices = vertex_matrix(local_strategies())
    return [vertices[:, j].reshape(4, 4) for j in range(vertices.shape[1])]


def _pr_vertex_tables() -> list[FloatArray]:
    return [
        pr_box(alpha, beta, gamma).matrix
        for alpha, beta, gamma in itertools.product((0, 1), repeat=3)
    ]


def random_no_signaling_table(rng: np.random.Generator) -> CondProbTable:
    """Random point of the no-signaling polytope.

    A Dirichlet mixture of the 16 local vertices is blended with a Dirichlet
    mixture of the 8 PR boxes at a uniform random ratio.
    """
    local = np.tensordot(rng.dirichlet(np.ones(16)), np.array(_local_vertex_tables()), axes=1)
    nonlocal_part = np.tensordot(rng.dirichlet(np.ones(8)), np.array(_pr_vertex_tables()), axes=1)
    t = rng.random()
    matrix = (1.0 - t) * local + t * nonlocal_part
    # renormalise rows against rounding before validation
    matrix = np.clip(matrix, 0.0, 1.0)
    matrix = matrix / matrix.sum(axis=1, keepdims=True)
    return CondProbTable.from_matrix(matrix, TWO_INPUT_ROWS)
