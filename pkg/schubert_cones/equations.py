#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.
"""Rank conditions of Schubert varieties in local coordinates.

Near the standard flag a flag is the row space of a unitriangular lower
matrix X with unknowns x_ij, i > j. The flag lies in the Schubert variety
of w iff every submatrix M_ij (rows j+1..n, columns 1..i of X) has rank at
most i - r_ij; the corresponding minors generate the equations.
"""

import dataclasses
import functools
import itertools
import typing

import daiquiri
import sympy

from schubert_cones import exceptions
from schubert_cones import permutation
from schubert_cones import rank
from schubert_cones import types

LOG = daiquiri.getLogger(__name__)

Polynomial = sympy.Poly


def variable_name(i: int, j: int, n: int) -> str:
    if n >= 10:
        return "x{{{},{}}}".format(i, j)
    return "x{}{}".format(i, j)


@functools.lru_cache(maxsize=None)
def variables(n: int) -> typing.Tuple[sympy.Symbol, ...]:
    """The unknowns x_ij, i > j, sorted by (i, j)."""
    return tuple(
        sympy.Symbol(variable_name(i, j, n))
        for i in range(1, n + 1)
        for j in range(1, i)
    )


def variable(i: int, j: int, n: int) -> sympy.Symbol:
    if not 1 <= j < i <= n:
        raise exceptions.IndexOutOfRange("coordinate row", i, j + 1, n)
    return sympy.Symbol(variable_name(i, j, n))


@functools.lru_cache(maxsize=None)
def coordinate_matrix(n: int) -> sympy.ImmutableMatrix:
    def entry(a: int, b: int) -> sympy.Expr:
        if a == b:
            return sympy.Integer(1)
        if b > a:
            return sympy.Integer(0)
        return variable(a + 1, b + 1, n)

    return sympy.ImmutableMatrix(n, n, entry)


def submatrix(i: int, j: int, n: int) -> sympy.ImmutableMatrix:
    """M_ij: rows j+1..n and columns 1..i of the coordinate matrix."""
    if not 1 <= i <= n - 1:
        raise exceptions.IndexOutOfRange("i", i, 1, n - 1)
    if not 1 <= j <= n - 1:
        raise exceptions.IndexOutOfRange("j", j, 1, n - 1)
    return coordinate_matrix(n)[j:, :i]


def to_polynomial(expr: sympy.Expr, n: int) -> Polynomial:
    return sympy.Poly(sympy.expand(expr), *variables(n), domain="ZZ")


def normalize(poly: Polynomial) -> Polynomial:
    """Return poly with a positive leading coefficient in graded lex order."""
    if poly.is_zero:
        return poly
    coefficient = poly.terms(order="grlex")[0][1]
    return -poly if coefficient < 0 else poly


def format_polynomial(poly: Polynomial) -> str:
    """Format as ``x31*x42 - x32*x41``, terms in decreasing graded lex order."""
    if poly.is_zero:
        return "0"
    names = [str(g) for g in poly.gens]
    parts = []
    for monomial, coefficient in poly.terms(order="grlex"):
        factors = []
        for name, exponent in zip(names, monomial):
            if exponent == 1:
                factors.append(name)
            elif exponent > 1:
                factors.append("{}**{}".format(name, exponent))
        magnitude = abs(int(coefficient))
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not parts:
            parts.append(body if coefficient > 0 else "-" + body)
        else:
            parts.append(("+ " if coefficient > 0 else "- ") + body)
    return " ".join(parts)


@functools.lru_cache(maxsize=4096)
def _minors(i: int, j: int, n: int, size: int) -> typing.Tuple[Polynomial, ...]:
    m = submatrix(i, j, n)
    found = []
    for rows in itertools.combinations(range(m.rows), size):
        for cols in itertools.combinations(range(m.cols), size):
            poly = to_polynomial(m.extract(list(rows), list(cols)).det(), n)
            if not poly.is_zero:
                found.append(normalize(poly))
    return tuple(found)


def minors(i: int, j: int, n: int, size: int) -> typing.List[Polynomial]:
    """Non-zero size x size minors of M_ij, sign-normalized."""
    m = submatrix(i, j, n)
    if size < 1 or size > min(m.rows, m.cols):
        return []
    return list(_minors(i, j, n, size))


@dataclasses.dataclass(frozen=True)
class RankCondition:
    """rank(M_ij) <= bound, generated by the minors of size bound + 1."""

    position: types.Cell
    bound: int
    generators: typing.Tuple[Polynomial, ...]


@dataclasses.dataclass(frozen=True)
class MinorSystem:
    w: permutation.Permutation
    scope: types.Scope
    conditions: typing.Tuple[RankCondition, ...]

    def generators(self) -> typing.List[Polynomial]:
        """All distinct generators, sorted by their text form."""
        unique = {
            format_polynomial(p): p for c in self.conditions for p in c.generators
        }
        return [unique[key] for key in sorted(unique, key=lambda s: (len(s), s))]

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            "permutation": str(self.w),
            "scope": self.scope,
            "conditions": [
                {
                    "position": list(c.position),
                    "bound": c.bound,
                    "generators": [format_polynomial(p) for p in c.generators],
                }
                for c in self.conditions
            ],
        }


def positions(
    w: permutation.Permutation, scope: types.Scope
) -> typing.List[types.Cell]:
    if scope == "pillar":
        return [p.position for p in rank.pillars(w)]
    if scope == "all":
        return [(i, j) for i in range(1, w.n) for j in range(1, w.n)]
    raise exceptions.InvalidInput("unknown scope {!r}".format(scope))


def minor_system(
    w: permutation.Permutation, scope: types.Scope = "pillar"
) -> MinorSystem:
    r = rank.rank_matrix(w)
    conditions = []
    for i, j in positions(w, scope):
        bound = i - r[i, j]
        conditions.append(
            RankCondition((i, j), bound, tuple(minors(i, j, w.n, bound + 1)))
        )
    system = MinorSystem(w, scope, tuple(conditions))
    LOG.debug(
        "built minor system",
        permutation=str(w),
        scope=scope,
        generators=len(system.generators()),
    )
    return system


def lowest_degree_part(poly: Polynomial) -> Polynomial:
    if poly.is_zero:
        return poly
    terms = poly.terms()
    low = min(sum(monomial) for monomial, _ in terms)
    return sympy.Poly.from_dict(
        {monomial: c for monomial, c in terms if sum(monomial) == low},
        *poly.gens,
        domain=poly.domain,
    )


def duality_check(i: int, j: int, n: int, r: int) -> bool:
    """Compare size-r minors of M_ij with the minors of M_ji.

    Only the minors containing the last i - j columns of M_ij and the i - j
    rows carrying its unit block are considered. The lowest-degree part of
    each must be (-1)^(m(i-j)) times the size-m minor of M_ji on the
    remaining rows and columns, m = r - i + j, and every size-m minor of
    M_ji must be reached exactly once.
    """
    if not 1 <= j < i <= n - 1:
        raise exceptions.IndexOutOfRange("i", i, j + 1, n - 1)
    d = i - j
    if not d <= r <= min(n - j, i):
        raise exceptions.IndexOutOfRange("r", r, d, min(n - j, i))
    m = r - d
    big = submatrix(i, j, n)
    small = submatrix(j, i, n)
    unit_rows = list(range(d))
    last_cols = list(range(j, i))
    sign = -1 if (m * d) % 2 else 1

    reached = set()
    for extra_rows in itertools.combinations(range(d, big.rows), m):
        for extra_cols in itertools.combinations(range(j), m):
            rows = unit_rows + list(extra_rows)
            cols = list(extra_cols) + last_cols
            low = lowest_degree_part(to_polynomial(big.extract(rows, cols).det(), n))
            small_rows = [row - d for row in extra_rows]
            expected = to_polynomial(
                sign * small.extract(small_rows, list(extra_cols)).det()
                if m
                else sympy.Integer(sign),
                n,
            )
            if low != expected:
                LOG.debug(
                    "duality mismatch",
                    i=i,
                    j=j,
                    n=n,
                    r=r,
                    rows=rows,
                    cols=cols,
                    lowest=format_polynomial(low),
                    expected=format_polynomial(expected),
                )
                return False
            reached.add((tuple(small_rows), extra_cols))
    total = len(list(itertools.combinations(range(small.rows), m))) * len(
        list(itertools.combinations(range(small.cols), m))
    )
    return len(reached) == total


def coordinate_dictionary(n: int) -> typing.Dict[str, sympy.Symbol]:
    """Shorthand names: x_k = x_{k+1,k}, y_k = x_{k+2,k}, and z = x41 for n = 4."""
    names = {}
    for k in range(1, n):
        names["x{}".format(k)] = variable(k + 1, k, n)
    for k in range(1, n - 1):
        names["y{}".format(k)] = variable(k + 2, k, n)
    if n == 4:
        names["z"] = variable(4, 1, n)
    return names
