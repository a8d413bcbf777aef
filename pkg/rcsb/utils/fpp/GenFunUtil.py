##
# File:    GenFunUtil.py
# Date:    17-Sep-2026
#
# Updates:
#  20-Sep-2026 jdw add the auxiliary functions F and T and the exact relation residues
#  22-Sep-2026 jdw CoeffTables row/dictionary export and cell level comparison
##
"""
Exact generating functions of the n-step transition kernel coefficients.

The named functions S1, S2, G, alpha, H and D are assembled from the Bessel core
series; their gamma and log(z) channels must cancel exactly.  The A, B and C families
are then built from them and the coefficient of z**n of every member yields the
tables a^n, b^n and c^n.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import collections
import logging
import math
from fractions import Fraction

from rcsb.utils.fpp.FppErrors import ChannelResidue, TableLevelMismatch, ValidationError
from rcsb.utils.fpp.SeriesUtil import GCoeff, GSeries, besselJCore, besselPiYCore, rfact

logger = logging.getLogger(__name__)

NAMED_SERIES = ["S1", "S2", "G", "alpha", "H", "D", "F", "T"]
TABLE_NAMES = ["a", "b", "c"]

NamedSeries = collections.namedtuple("NamedSeries", ["name", "series"])


def sigmaPartial(p):
    """Return sum_{k=2}^p (2k+1)/(k(k+1)) (zero for p < 2)."""
    return sum((Fraction(2 * k + 1, k * (k + 1)) for k in range(2, p + 1)), Fraction(0))


def fractionToString(value):
    value = Fraction(value)
    return "%d/%d" % (value.numerator, value.denominator)


def stringToFraction(text):
    return Fraction(str(text).strip())


class CoeffTables(object):
    """Exact coefficient tables of the n-step kernel.

    Args:
        n (int): kernel level (>= 1)
        a (list): (n+1) x (n+1) nested list of Fraction indexed [p][q]
        b (list): same shape as a
        c (list): same shape as a
        d (list, optional): d_0 .. d_n. Defaults to None.
    """

    def __init__(self, n, a, b, c, d=None):
        if n < 1:
            raise ValidationError("table level must be >= 1, got %r" % n)
        self.n = n
        self.a = [[Fraction(v) for v in row] for row in a]
        self.b = [[Fraction(v) for v in row] for row in b]
        self.c = [[Fraction(v) for v in row] for row in c]
        self.d = [Fraction(v) for v in d] if d is not None else None
        for tName in TABLE_NAMES:
            tbl = getattr(self, tName)
            if len(tbl) != n + 1 or any(len(row) != n + 1 for row in tbl):
                raise ValidationError("table %s is not %d x %d" % (tName, n + 1, n + 1))

    @classmethod
    def zeros(cls, n):
        return cls(n, *[[[Fraction(0)] * (n + 1) for _ in range(n + 1)] for _ in range(3)])

    def table(self, tName):
        if tName not in TABLE_NAMES:
            raise ValidationError("unknown table %r" % tName)
        return getattr(self, tName)

    def cell(self, tName, p, q):
        """Entry (p, q) of table a, b or c; indices outside the stored support read as zero."""
        tbl = self.table(tName)
        if 0 <= p <= self.n and 0 <= q <= self.n:
            return tbl[p][q]
        return Fraction(0)

    def toRows(self):
        rowL = []
        for tName in TABLE_NAMES:
            tbl = self.table(tName)
            for p in range(self.n + 1):
                for q in range(self.n + 1):
                    rowL.append({"table": tName, "n": self.n, "p": p, "q": q, "value": fractionToString(tbl[p][q])})
        if self.d is not None:
            for q, v in enumerate(self.d):
                rowL.append({"table": "d", "n": self.n, "p": 0, "q": q, "value": fractionToString(v)})
        return rowL

    def toDict(self):
        rD = {"n": self.n}
        for tName in TABLE_NAMES:
            rD[tName] = [[fractionToString(v) for v in row] for row in self.table(tName)]
        rD["d"] = [fractionToString(v) for v in self.d] if self.d is not None else None
        return rD

    @classmethod
    def fromDict(cls, rD):
        tL = [[[stringToFraction(v) for v in row] for row in rD[tName]] for tName in TABLE_NAMES]
        dL = [stringToFraction(v) for v in rD["d"]] if rD.get("d") is not None else None
        return cls(int(rD["n"]), *tL, d=dL)

    @classmethod
    def fromRows(cls, rowL):
        n = int(rowL[0]["n"])
        tD = {tName: [[Fraction(0)] * (n + 1) for _ in range(n + 1)] for tName in TABLE_NAMES}
        dL = []
        for row in rowL:
            if row["table"] == "d":
                dL.append(stringToFraction(row["value"]))
            else:
                tD[row["table"]][int(row["p"])][int(row["q"])] = stringToFraction(row["value"])
        return cls(n, tD["a"], tD["b"], tD["c"], d=dL or None)

    def diffCells(self, other):
        """List the cells (table, p, q, left, right) at which the two tables disagree.

        Raises:
            TableLevelMismatch: the tables belong to different levels
        """
        if self.n != other.n:
            raise TableLevelMismatch("comparing level %d with level %d" % (self.n, other.n))
        diffL = []
        for tName in TABLE_NAMES:
            for p in range(self.n + 1):
                for q in range(self.n + 1):
                    lv, rv = self.cell(tName, p, q), other.cell(tName, p, q)
                    if lv != rv:
                        diffL.append((tName, p, q, lv, rv))
        return diffL

    def maxAbsDiff(self, other):
        diffL = self.diffCells(other)
        return max((abs(lv - rv) for _, _, _, lv, rv in diffL), default=Fraction(0))

    def supportViolations(self):
        """Return nonzero cells outside p + q <= n for a and p + q <= n - 1 for b and c."""
        outL = []
        for tName, bound in [("a", self.n), ("b", self.n - 1), ("c", self.n - 1)]:
            for p in range(self.n + 1):
                for q in range(self.n + 1):
                    if p + q > bound and self.cell(tName, p, q) != 0:
                        outL.append((tName, p, q))
        return outL

    def __eq__(self, other):
        if not isinstance(other, CoeffTables):
            return NotImplemented
        return self.n == other.n and not self.diffCells(other)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "CoeffTables(n=%d)" % self.n


class GenFunUtil(object):
    """Assemble the generating functions and extract exact kernel coefficient tables.

    Args:
        **kwargs: orderMargin (int, default 4) extra working order used while forming quotients
    """

    def __init__(self, **kwargs):
        self.__orderMargin = int(kwargs.get("orderMargin", 4))
        self.__namedCache = {}

    def buildNamed(self, name, N):
        """Return the named generating function through z**N.

        Args:
            name (str): one of S1, S2, G, alpha, H, D, F or T
            N (int): series order (>= 3)

        Returns:
            NamedSeries: (name, purely rational GSeries of order N)

        Raises:
            ChannelResidue: a gamma or log(z) coefficient survives the assembly
        """
        if name not in NAMED_SERIES:
            raise ValidationError("unknown generating function %r" % name)
        if N < 3:
            raise ValidationError("series order must be >= 3, got %r" % N)
        key = (name, N)
        if key not in self.__namedCache:
            series = self.__assemble(name, N + self.__orderMargin)
            if series.order < N:
                raise ValidationError("working order margin too small for %s at order %d" % (name, N))
            series = series.truncate(N)
            self.__assertRational(name, series)
            self.__namedCache[key] = NamedSeries(name, series)
        return self.__namedCache[key]

    def __named(self, name, N):
        return self.buildNamed(name, N).series

    def __assemble(self, name, W):
        z = GSeries.monomial(1, 1, W)
        one = GSeries.one(W)
        if name == "S1":
            return (z - besselJCore(2, W).shift(1).truncate(W) * 2) / z
        elif name == "S2":
            return ((z - one) * 2 + besselJCore(0, W) * 2) / z
        elif name == "alpha":
            j0, j1, j2 = besselJCore(0, W), besselJCore(1, W), besselJCore(2, W)
            den = j2 * 4 * (j0 + (z - one) * j1)
            return GSeries.monomial(1, 2, W) / den
        elif name == "G":
            j2z2 = besselJCore(2, W).shift(2)
            bracket = GSeries.constant(GCoeff(5, -4), W) + besselPiYCore(2, W) * 2 / j2z2 - GSeries.logZ(W, coeff=2)
            return GSeries.monomial(Fraction(-1, 4), 3, W) * bracket
        elif name == "H":
            j0 = besselJCore(0, W)
            bracket = z * 3 - one * 3 + besselPiYCore(0, W) * 2 + j0 * (GSeries.constant(GCoeff(5, -4), W) - GSeries.logZ(W, coeff=2))
            return GSeries.monomial(Fraction(1, 2), 2, W) * bracket / (one - z)
        elif name == "D":
            zj1 = besselJCore(1, W).shift(1).truncate(W)
            return (zj1 * (GSeries.constant(GCoeff(0, 2), W) + GSeries.logZ(W)) - besselPiYCore(1, W) - one) / z
        elif name == "F":
            return self.__named("S1", W - 1) + z * self.__named("S2", W - 1) / ((one - z) * 2)
        elif name == "T":
            return self.__named("S2", W - 1) / (one - z)
        raise ValidationError("unknown generating function %r" % name)

    def __assertRational(self, name, series):
        if series.hasLog() or series.hasGamma():
            logger.error("Residual channels in %s: %r", name, series)
            raise ChannelResidue("gamma or log(z) channel survives in %s" % name)

    def dCoefficients(self, N):
        """Return d_0 .. d_N, the coefficients of D."""
        return self.__named("D", N).rationals()

    # --- A, B, C families ---

    def __lead(self, p, N):
        """2 (-z)^(p-1) / (p)^!"""
        return GSeries.monomial(Fraction(2 * (-1) ** (p - 1), rfact(p)), p - 1, N)

    def __qFactor(self, q, N):
        """(-z)^q / (q)^!"""
        return GSeries.monomial(Fraction((-1) ** q, rfact(q)), q, N)

    def __family(self, label, builder, p, q, N):
        if p < 0 or q < 0:
            raise ValidationError("indices must be non-negative, got (%r, %r)" % (p, q))
        series = builder(p, q, N).truncate(N)
        self.__assertRational("%s(%d,%d)" % (label, p, q), series)
        return series

    def buildA(self, p, q, N):
        """Generating function A_{p,q} through z**N."""
        return self.__family("A", self.__a, p, q, N)

    def buildB(self, p, q, N):
        """Generating function B_{p,q} through z**N."""
        return self.__family("B", self.__b, p, q, N)

    def buildC(self, p, q, N):
        """Generating function C_{p,q} through z**N."""
        return self.__family("C", self.__c, p, q, N)

    def __a(self, p, q, N):
        a1 = self.__qFactor(q, N) * self.__named("alpha", N)
        if p == 1:
            return a1
        if p == 0:
            return self.__named("T", N) * a1
        return self.__lead(p, N) * a1

    def __b(self, p, q, N):
        b1 = self.__qFactor(q, N) * self.__named("G", N) - self.__a(1, q, N)
        if p == 1:
            return b1
        if p == 0:
            return self.__named("T", N) * b1 + self.__qFactor(q, N) * self.__named("H", N)
        corr = GSeries.monomial(Fraction((-1) ** (p + q), rfact(p) * rfact(q)) * sigmaPartial(p), p + q + 2, N)
        return self.__lead(p, N) * b1 + corr

    def __c(self, p, q, N):
        if p == 0:
            return self.__c0(q, N)
        c1 = self.__named("F", N) * self.__a(1, q, N) - GSeries.monomial(Fraction(1, 2), 1, N) * self.__c0(q, N)
        if p == 1:
            return c1
        return self.__lead(p, N) * c1

    def __c0(self, q, N):
        dq = self.dCoefficients(max(N, q + 3))[q]
        return GSeries.monomial(dq, q + 2, N) + self.__b(0, q, N) - GSeries.monomial(Fraction((-1) ** q, rfact(q)), q + 2, N)

    def coeffTables(self, n):
        """Extract a^n, b^n, c^n (p, q = 0..n) and d_0..d_n.

        Args:
            n (int): kernel level (>= 1)

        Returns:
            CoeffTables: exact tables
        """
        if n < 1:
            raise ValidationError("table level must be >= 1, got %r" % n)
        N = max(n, 3)
        tD = {}
        for tName, fn in [("a", self.buildA), ("b", self.buildB), ("c", self.buildC)]:
            tD[tName] = [[fn(p, q, N).rational(n) for q in range(n + 1)] for p in range(n + 1)]
        dL = self.dCoefficients(N)[: n + 1]
        logger.debug("Built coefficient tables for n = %d", n)
        return CoeffTables(n, tD["a"], tD["b"], tD["c"], d=dL)

    # --- exact relation checks ---

    def relationResidue(self, name, N):
        """Largest absolute coefficient of the series form of a relation lemma (exactly zero when it holds).

        Args:
            name (str): Rel1 or Rel2
            N (int): order at which the named functions are built

        Returns:
            Fraction: max |coefficient| through the order of validity of the combination
        """
        z = GSeries.monomial(1, 1, N)
        one = GSeries.one(N)
        s1, s2 = self.__named("S1", N), self.__named("S2", N)
        gS, aS, hS = self.__named("G", N), self.__named("alpha", N), self.__named("H", N)
        if name == "Rel1":
            lhs = (s2 / ((one - z) * 2) + one / z) * gS - (s1 / z + self.__named("T", N) + one / z) * aS + hS / 2 + GSeries.monomial(Fraction(3, 4), 2, N)
        elif name == "Rel2":
            u1 = GSeries.fromFunction(lambda k: Fraction((-1) ** k, math.factorial(k - 2) * math.factorial(k)) * sigmaPartial(k - 2) if k >= 2 else 0, N)
            s3 = GSeries.fromFunction(lambda k: Fraction((-1) ** k, rfact(k - 2) * k * k) if k >= 2 else 0, N)
            rhs = GSeries([-1, -1, Fraction(3, 4)], order=N)
            lhs = u1 + s3 + (s1 - one) / z * gS - rhs
        else:
            raise ValidationError("unknown relation %r" % name)
        return max((abs(lhs.rational(k)) for k in range(min(lhs.valuation, 0), lhs.order + 1)), default=Fraction(0))
