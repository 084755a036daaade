"""The sixteen-element group generated by the quantum operators C, P, T.

The operator product A*B is associative and obeys the relations

    P*P = -1,  C*C = 1,  T*T = -1,  T*P = -P*T,
    C*P = P*C,  C*T = T*C,

with -1 central.  Rather than doing word rewriting on this presentation,
the group is realized concretely on pairs (quaternion unit, sign):

    P -> (i, 1),   T -> (j, 1),   C -> (1, -1),

multiplied componentwise.  The realization is checked against every
relation, the closure has order 16, and the group is isomorphic to
DC8 x Z2 (and to Q x S0) but to neither of the two matrix groups.

The module also implements the consistency criterion that singles out
one matrix group: compatibility of the one-particle and field pictures
forces TC = C*T at the matrix level, which combined with CT* = TC*
forces T* = T — satisfied by the second solution family only.
"""

from __future__ import annotations

from .groups import (FiniteGroup, GroupError, Permutation, generate_closure,
                     _quat_mul)
from .solver import CptSolutionSet

# an element is ((sign, unit), eps): a quaternion unit with sign, and a
# sign from the two-element factor
Operator = tuple[tuple[int, str], int]

IDENTITY: Operator = ((1, "1"), 1)
C_OP: Operator = ((1, "1"), -1)
P_OP: Operator = ((1, "i"), 1)
T_OP: Operator = ((1, "j"), 1)

BASE_NAMES = ("C", "P", "T", "C*P", "C*T", "P*T", "Θ")

STANDARD_ORDER_LABELS = (
    "1", "C", "P", "T", "C*P", "C*T", "P*T", "Θ",
    "-C", "-P", "-T", "-C*P", "-C*T", "-P*T", "-Θ", "-1",
)


def op_mul(a: Operator, b: Operator) -> Operator:
    return (_quat_mul(a[0], b[0]), a[1] * b[1])


def op_neg(a: Operator) -> Operator:
    (s, u), eps = a
    return ((-s, u), eps)


def named_operators() -> dict[str, Operator]:
    pos = {
        "1": IDENTITY, "C": C_OP, "P": P_OP, "T": T_OP,
        "C*P": op_mul(C_OP, P_OP), "C*T": op_mul(C_OP, T_OP),
        "P*T": op_mul(P_OP, T_OP),
        "Θ": op_mul(op_mul(C_OP, P_OP), T_OP),
    }
    out = dict(pos)
    for name, e in pos.items():
        out["-" + name if name != "1" else "-1"] = op_neg(e)
    return out


def presentation_checks() -> dict[str, bool]:
    """Each defining relation, evaluated in the realization."""
    m, n = op_mul, op_neg
    minus_one = n(IDENTITY)
    return {
        "P*P = -1": m(P_OP, P_OP) == minus_one,
        "C*C = 1": m(C_OP, C_OP) == IDENTITY,
        "T*T = -1": m(T_OP, T_OP) == minus_one,
        "T*P = -P*T": m(T_OP, P_OP) == n(m(P_OP, T_OP)),
        "C*P = P*C": m(C_OP, P_OP) == m(P_OP, C_OP),
        "C*T = T*C": m(C_OP, T_OP) == m(T_OP, C_OP),
        "(-1)*(-1) = 1": m(minus_one, minus_one) == IDENTITY,
        "-1 central": all(m(minus_one, g) == m(g, minus_one)
                          for g in named_operators().values()),
    }


def build_operator_group() -> FiniteGroup:
    """The order-16 operator group in the standard element order."""
    failed = [rel for rel, ok in presentation_checks().items() if not ok]
    if failed:
        raise GroupError(f"realization violates relations: {failed}")
    named = named_operators()
    elements = [named[lbl] for lbl in STANDARD_ORDER_LABELS]
    group = FiniteGroup(elements, op_mul, labels=STANDARD_ORDER_LABELS,
                        name="G_Theta")
    closure = generate_closure([C_OP, P_OP, T_OP], op_mul, IDENTITY)
    if set(closure.elements) != set(elements):
        raise GroupError("closure of {C,P,T} differs from the named set")
    return group


# -- embeddings into permutation groups ------------------------------------------

_X = Permutation.from_cycles("(1 2 3 4)(5 6 7 8)", 10)
_Y = Permutation.from_cycles("(1 5 3 7)(2 8 4 6)", 10)
_Z = Permutation.from_cycles("(9 10)", 10)

# signed quaternion unit -> word in the dicyclic generators x, y
_QUAT_TO_DICYCLIC = {
    (1, "1"): (), (1, "i"): ("x",), (-1, "1"): ("x", "x"),
    (-1, "i"): ("x", "x", "x"), (1, "j"): ("y",), (1, "k"): ("x", "y"),
    (-1, "j"): ("x", "x", "y"), (-1, "k"): ("x", "x", "x", "y"),
}


def to_s10(e: Operator) -> Permutation:
    """Image of an operator in S10: the quaternion part acts on 1..8
    through the dicyclic generators, the sign part through (9 10)."""
    quat, eps = e
    perm = Permutation.identity(10)
    for letter in _QUAT_TO_DICYCLIC[quat]:
        perm = perm * (_X if letter == "x" else _Y)
    if eps == -1:
        perm = perm * _Z
    return perm


def s16_embedding(group: FiniteGroup) -> list[Permutation]:
    """The left regular representation on positions 1..16."""
    return group.regular_representation()


def select_matrix_group(solutions: dict[int, CptSolutionSet]) -> int:
    """Return the variant whose matrices are consistent with the
    operator relations: TC = C*T (entrywise-conjugated C) and T* = T.

    Raises GroupError unless exactly one variant passes.
    """
    passing = [v for v, sol in sorted(solutions.items())
               if sol.T * sol.C == sol.C.conj() * sol.T
               and sol.T.conj() == sol.T]
    if len(passing) != 1:
        raise GroupError(f"selection criterion passed by {passing}")
    return passing[0]
