##
# File:    RecurrenceUtil.py
# Date:    18-Sep-2026
#
# Updates:
#  20-Sep-2026 jdw assert the intermediate beta identity at every step
#  22-Sep-2026 jdw add the empirical d relation check and the diff report
##
"""
Level by level computation of the kernel coefficient tables from their exact recursions.

This is independent of the generating function route in GenFunUtil and serves as its oracle.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import math
from fractions import Fraction

from rcsb.utils.fpp.FppErrors import BetaMismatch, ValidationError
from rcsb.utils.fpp.GenFunUtil import CoeffTables, GenFunUtil, fractionToString
from rcsb.utils.fpp.SeriesUtil import rfact

logger = logging.getLogger(__name__)


def _delta(i, j):
    return 1 if i == j else 0


class RecState(object):
    """Coefficient tables at level n."""

    def __init__(self, n, tables):
        if tables.n != n:
            raise ValidationError("state level %d does not match table level %d" % (n, tables.n))
        self.n = n
        self.tables = tables

    def __repr__(self):
        return "RecState(n=%d)" % self.n


class RecurrenceUtil(object):
    """Iterate the a, b, c recursions in exact rational arithmetic.

    Args:
        **kwargs: genFunUtil (GenFunUtil, optional) source of the d_q coefficients attached to each level
    """

    def __init__(self, **kwargs):
        self.__genFunU = kwargs.get("genFunUtil", None) or GenFunUtil()

    def __dList(self, n):
        return self.__genFunU.dCoefficients(max(n, 3))[: n + 1]

    def recurInit(self):
        """Level one state: a_{1,0} = 1 and every other entry zero."""
        tables = CoeffTables.zeros(1)
        tables.a[1][0] = Fraction(1)
        tables.d = self.__dList(1)
        return RecState(1, tables)

    def recurTables(self, n):
        """Return the tables at level n by stepping up from level one."""
        if n < 1:
            raise ValidationError("table level must be >= 1, got %r" % n)
        state = self.recurInit()
        while state.n < n:
            state = self.recurStep(state)
        return state.tables

    @staticmethod
    def __constants(n):
        lv = Fraction((-1) ** (n - 1), rfact(n - 1))
        mL = [Fraction((-1) ** n, rfact(k) * rfact(n - k - 2)) for k in range(0, n - 1)]
        return lv, mL

    def recurStep(self, state):
        """Advance the tables from level n to level n + 1.

        Args:
            state (RecState): valid state at level n >= 1

        Returns:
            RecState: state at level n + 1

        Raises:
            BetaMismatch: the intermediate beta identity fails at some q
        """
        n = state.n
        t = state.tables
        a, b, c = (lambda p, q: t.cell("a", p, q)), (lambda p, q: t.cell("b", p, q)), (lambda p, q: t.cell("c", p, q))
        lv, mL = self.__constants(n)
        #
        self.__checkBeta(n, b, c, lv, mL)
        #
        m = n + 1
        aN = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
        bN = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
        cN = [[Fraction(0)] * (m + 1) for _ in range(m + 1)]
        sumMkA = sum((mk / (k + 2) ** 2 for k, mk in enumerate(mL)), Fraction(0))
        sumMkC = sum((mk / (k + 1) ** 2 for k, mk in enumerate(mL)), Fraction(0))
        for q in range(m + 1):
            colA1 = sum((a(k, q) / (k + 1) for k in range(n + 1)), Fraction(0))
            colA2 = sum((a(k, q) / (k + 2) for k in range(n + 1)), Fraction(0))
            colB1 = sum((b(k, q) / (k + 1) for k in range(n + 1)), Fraction(0))
            colB2 = sum((b(k, q) / (k + 2) for k in range(n + 1)), Fraction(0))
            diag2 = sum(((c(k, q - k - 2) - b(k, q - k - 2)) / (k + 2) for k in range(0, q - 1)), Fraction(0))
            diag1 = sum(((c(k, q - k - 1) - b(k, q - k - 1)) / (k + 1) for k in range(0, q)), Fraction(0))
            inner = Fraction((-1) ** n, rfact(n - q - 2) * rfact(q)) if q <= n - 2 else Fraction(0)
            #
            xv = inner / (n - q) ** 2 if q <= n - 2 else Fraction(0)
            xv += _delta(q, n - 1) * lv
            if q == n:
                xv -= sumMkA + Fraction((-1) ** (n - 1) * n, math.factorial(n - 1) * math.factorial(n + 1))
            xv += colB2 + diag2
            #
            yv = inner / (n - q - 1) ** 2 if q <= n - 2 else Fraction(0)
            if q == n - 1:
                yv += Fraction((-1) ** (n - 1), math.factorial(n) ** 2) - sumMkC
            yv += colB1 + diag1
            #
            bv0 = _delta(q, n - 1) * lv + colB1
            if q <= n - 2:
                bv0 += inner / (n - q - 1) ** 2
            #
            for p in range(m + 1):
                av = Fraction(0)
                bv = Fraction(0)
                cv = Fraction(0)
                if p == 0:
                    av += colA1
                    bv += bv0
                    cv += yv
                else:
                    pp = p * (p + 1)
                    av -= a(p - 1, q) / pp
                    bv -= b(p - 1, q) / pp
                    cv -= c(p - 1, q) / pp
                    if q == n - p - 1:
                        bv -= Fraction((-1) ** n * (2 * p + 1), rfact(p) * rfact(n - p - 1) * pp)
                if p == 1:
                    av += xv
                    bv += colA2
                    cv += colA2
                aN[p][q], bN[p][q], cN[p][q] = av, bv, cv
        tables = CoeffTables(m, aN, bN, cN, d=self.__dList(m))
        logger.debug("Advanced coefficient tables to n = %d", m)
        return RecState(m, tables)

    def __checkBeta(self, n, b, c, lv, mL):
        bracket = lv / (n + 1) - lv - sum((mk / (k + 2) ** 2 for k, mk in enumerate(mL)), Fraction(0))
        for q in range(n + 3):
            beta = _delta(q, n) * bracket
            beta += sum(((c(k, q - k - 2) - b(k, q - k - 2)) / (k + 2) for k in range(0, q - 1)), Fraction(0))
            expected = _delta(q, n) * Fraction((-1) ** n, rfact(n))
            if beta != expected:
                logger.error("Beta identity fails at n = %d q = %d: %s != %s", n, q, beta, expected)
                raise BetaMismatch("beta_%d at level %d is %s, expected %s" % (q, n + 1, beta, expected))

    def verifyBetaRelation(self, state):
        """Largest defect of the b/c diagonal relation over 0 <= q <= n + 2 (exactly zero when it holds)."""
        n = state.n
        t = state.tables
        _, mL = self.__constants(n)
        rhsN = Fraction((-1) ** n * (n - 1), math.factorial(n) ** 2) - sum((mk / (k + 2) ** 2 for k, mk in enumerate(mL)), Fraction(0))
        worst = Fraction(0)
        for q in range(n + 3):
            lhs = sum(((t.cell("b", k, q - k - 2) - t.cell("c", k, q - k - 2)) / (k + 2) for k in range(0, q - 1)), Fraction(0))
            worst = max(worst, abs(lhs - _delta(q, n) * rhsN))
        return worst

    def verifyDRelation(self, state, dList=None):
        """Largest defect of the relation linking the b/c diagonals to d_{n-1} over 0 <= q <= n + 1.

        Args:
            state (RecState): state at level n
            dList (list, optional): d_0 .. d_n. Defaults to the list attached to the state.

        Returns:
            Fraction: max absolute defect (exactly zero when the relation holds)
        """
        n = state.n
        t = state.tables
        dL = dList if dList is not None else t.d
        worst = Fraction(0)
        for q in range(n + 2):
            lhs = sum(((t.cell("b", k, q - k - 1) - t.cell("c", k, q - k - 1)) / (k + 1) for k in range(0, q)), Fraction(0))
            rhs = Fraction(0)
            if q == n - 1:
                rhs = Fraction((-1) ** (n - 1), math.factorial(n) ** 2) - dL[q]
                rhs += sum((Fraction((-1) ** q, rfact(k) * rfact(q - k - 1) * (k + 1) ** 2) for k in range(0, q)), Fraction(0))
            worst = max(worst, abs(lhs - rhs))
        return worst

    def diffReport(self, left, right):
        """Rows describing every mismatched cell between two tables of the same level."""
        rowL = []
        for tName, p, q, lv, rv in left.diffCells(right):
            rowL.append({"table": tName, "n": left.n, "p": p, "q": q, "left": fractionToString(lv), "right": fractionToString(rv)})
        if rowL:
            logger.info("Tables at level %d differ in %d cells (%s)", left.n, len(rowL), ",".join(sorted(set(r["table"] for r in rowL))))
        return rowL
