##
# File:    KernelUtil.py
# Date:    24-Sep-2026
#
# Updates:
#  26-Sep-2026 jdw add exact samplers for the one-step kernel and the stationary law
#  27-Sep-2026 jdw add lifted kernel push-forward and Lyapunov drift checks
##
"""
Numeric evaluation of the one-step, n-step and lifted transition kernels of the
rung difference chain, the stationary density, and quadrature based consistency checks.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging

import numpy
import scipy.stats

from rcsb.utils.fpp.FppErrors import DiracEvaluation, TableLevelMismatch, ValidationError
from rcsb.utils.fpp.GenFunUtil import GenFunUtil
from rcsb.utils.fpp.SeriesUtil import rfact
from rcsb.utils.fpp.SpecFunUtil import besselJ, besselJArray

logger = logging.getLogger(__name__)

J2_AT_2 = besselJ(2, 2.0)


def _finish(value, scalar):
    return float(value) if scalar else value


class Quadrature(object):
    """Composite Gauss-Legendre rule on [-cutoff, cutoff] with optional interior breakpoints.

    Args:
        cutoff (float, optional): half width of the truncated domain. Defaults to 30.0.
        panels (int, optional): number of uniform panels. Defaults to 64.
        points (int, optional): Gauss-Legendre points per panel. Defaults to 16.
    """

    def __init__(self, cutoff=30.0, panels=64, points=16):
        if cutoff < 30.0:
            raise ValidationError("quadrature cutoff must be >= 30, got %r" % cutoff)
        if panels < 64:
            raise ValidationError("quadrature needs at least 64 panels, got %r" % panels)
        self.cutoff = float(cutoff)
        self.panels = int(panels)
        self.points = int(points)
        self.__x, self.__w = numpy.polynomial.legendre.leggauss(self.points)

    def nodes(self, breakpoints=(), lower=None, upper=None):
        """Nodes and weights of the composite rule with the edges refined at the breakpoints."""
        lo = -self.cutoff if lower is None else float(lower)
        hi = self.cutoff if upper is None else float(upper)
        edges = numpy.linspace(lo, hi, self.panels + 1)
        extra = [b for b in breakpoints if lo < b < hi]
        edges = numpy.unique(numpy.concatenate([edges, numpy.asarray(extra, dtype=float)]))
        half = 0.5 * numpy.diff(edges)
        mid = 0.5 * (edges[1:] + edges[:-1])
        xA = (mid[:, None] + half[:, None] * self.__x[None, :]).ravel()
        wA = (half[:, None] * self.__w[None, :]).ravel()
        return xA, wA

    def integrate(self, fn, breakpoints=(), lower=None, upper=None):
        """Integrate a vectorized function over the truncated domain (or [lower, upper])."""
        xA, wA = self.nodes(breakpoints=breakpoints, lower=lower, upper=upper)
        return float(numpy.dot(wA, fn(xA)))

    def tailMass(self, fn, breakpoints=()):
        """Integral of |fn| over [cutoff, 2 cutoff] and [-2 cutoff, -cutoff], an estimate of the truncation error."""
        upper = self.integrate(lambda x: numpy.abs(fn(x)), lower=self.cutoff, upper=2.0 * self.cutoff)
        lower = self.integrate(lambda x: numpy.abs(fn(x)), lower=-2.0 * self.cutoff, upper=-self.cutoff)
        return upper + lower


def k1(rPrev, r):
    """One-step kernel: exp(-|r|) if rPrev < r < 0 or rPrev > r > 0, else exp(-|rPrev - 2 r|)."""
    scalar = numpy.isscalar(rPrev) and numpy.isscalar(r)
    rp, rr = numpy.broadcast_arrays(numpy.asarray(rPrev, dtype=float), numpy.asarray(r, dtype=float))
    inside = ((rp < rr) & (rr < 0.0)) | ((rp > rr) & (rr > 0.0))
    value = numpy.where(inside, numpy.exp(-numpy.abs(rr)), numpy.exp(-numpy.abs(rp - 2.0 * rr)))
    return _finish(value, scalar)


def k1Cdf(rPrev, r):
    """Distribution function of the one-step kernel at r given rPrev."""
    scalar = numpy.isscalar(rPrev) and numpy.isscalar(r)
    rp, rr = numpy.broadcast_arrays(numpy.asarray(rPrev, dtype=float), numpy.asarray(r, dtype=float))
    # reflect to rPrev >= 0: F(r | -a) = 1 - F(-r | a)
    neg = rp < 0.0
    a = numpy.abs(rp)
    x = numpy.where(neg, -rr, rr)
    ea = numpy.exp(-a)
    cdf = numpy.where(
        x < 0.0,
        0.5 * ea * numpy.exp(2.0 * numpy.minimum(x, 0.0)),
        numpy.where(x <= a, 0.5 * ea + 1.0 - numpy.exp(-numpy.minimum(x, a)), 1.0 - 0.5 * ea * numpy.exp(-2.0 * (numpy.maximum(x, a) - a))),
    )
    cdf = numpy.where(neg, 1.0 - cdf, cdf)
    return _finish(cdf, scalar)


def piDensity(r):
    """Stationary density exp(-3|r|/2) J_1(2 exp(-|r|/2)) / (2 J_2(2))."""
    scalar = numpy.isscalar(r)
    ar = numpy.abs(numpy.asarray(r, dtype=float))
    value = numpy.exp(-1.5 * ar) * besselJArray(1, 2.0 * numpy.exp(-0.5 * ar)) / (2.0 * J2_AT_2)
    return _finish(value, scalar)


def piCdf(r):
    """Distribution function of the stationary law, 1/2 + sign(r) (1 - exp(-|r|) J_2(2 exp(-|r|/2)) / J_2(2)) / 2."""
    scalar = numpy.isscalar(r)
    rr = numpy.asarray(r, dtype=float)
    ar = numpy.abs(rr)
    half = 0.5 * (1.0 - numpy.exp(-ar) * besselJArray(2, 2.0 * numpy.exp(-0.5 * ar)) / J2_AT_2)
    return _finish(0.5 + numpy.sign(rr) * half, scalar)


def deltaOne(rPrev, xPrev, yPrev, zPrev):
    """Rung difference after one step, min(r'+y', x'+z') - min(r'+y'+z', x')."""
    return numpy.minimum(rPrev + yPrev, xPrev + zPrev) - numpy.minimum(rPrev + yPrev + zPrev, xPrev)


def deltaStepSample(rPrev, rng):
    """Exact draw(s) from k1(rPrev, .) by piece selection and inverse distribution functions.

    For rPrev >= 0 the density splits into mass 1 - exp(-rPrev) on (0, rPrev), mass exp(-rPrev)/2 on
    (rPrev, inf) and mass exp(-rPrev)/2 on (-inf, 0); negative rPrev is handled by reflection.

    Args:
        rPrev (float or numpy.ndarray): previous state(s)
        rng (numpy.random.Generator): seeded generator

    Returns:
        float or numpy.ndarray: next state(s)
    """
    scalar = numpy.isscalar(rPrev)
    rp = numpy.atleast_1d(numpy.asarray(rPrev, dtype=float))
    sgn = numpy.where(rp < 0.0, -1.0, 1.0)
    a = numpy.abs(rp)
    uPiece = rng.random(rp.shape)
    uInner = 1.0 - rng.random(rp.shape)
    expo = -numpy.log(1.0 - rng.random(rp.shape))
    massMid = -numpy.expm1(-a)
    mid = -numpy.log1p(uInner * numpy.expm1(-a))
    upper = a + 0.5 * expo
    lower = -0.5 * expo
    out = numpy.where(uPiece < massMid, mid, numpy.where(uPiece < massMid + 0.5 * (1.0 - massMid), upper, lower))
    out = sgn * out
    return float(out[0]) if scalar else out


def piSample(numDraws, rng):
    """Exact draws from the stationary law by rejection from a Laplace(0, 1/2) proposal.

    The acceptance probability J_1(2 exp(-|r|/2)) exp(|r|/2) lies in [J_1(2), 1].
    """
    outL = []
    need = int(numDraws)
    while need > 0:
        batch = max(64, int(need * 1.9))
        prop = rng.laplace(0.0, 0.5, size=batch)
        ar = numpy.abs(prop)
        acc = besselJArray(1, 2.0 * numpy.exp(-0.5 * ar)) * numpy.exp(0.5 * ar)
        keep = prop[rng.random(batch) < acc]
        outL.append(keep[:need])
        need -= len(outL[-1])
    return numpy.concatenate(outL) if outL else numpy.empty(0)


def piTildeSample(numDraws, rng):
    """Draws (r, x, y, z) from the lifted stationary law pi(dr) exp(-(x+y+z)) dx dy dz."""
    rA = piSample(numDraws, rng)
    xyz = rng.exponential(1.0, size=(3, int(numDraws)))
    return rA, xyz[0], xyz[1], xyz[2]


def liftedPushForward(mPrev, rng):
    """One lifted step: the rung difference moves deterministically to deltaOne(mPrev), fresh edge weights are drawn."""
    rPrev, xPrev, yPrev, zPrev = mPrev
    rNew = deltaOne(numpy.asarray(rPrev, dtype=float), xPrev, yPrev, zPrev)
    xyz = rng.exponential(1.0, size=(3,) + numpy.shape(rNew))
    return rNew, xyz[0], xyz[1], xyz[2]


def lyapunovFunction(r):
    return 1.0 - numpy.exp(-numpy.abs(r))


def lyapunovDrift(r):
    """Expected Lyapunov function after one step, (3 - 2 exp(-|r|) + exp(-2|r|)) / 6."""
    e = numpy.exp(-numpy.abs(r))
    return (3.0 - 2.0 * e + e * e) / 6.0


def driftMargin(r):
    return lyapunovFunction(r) - lyapunovDrift(r)


class KernelDensity(object):
    """n-step kernel density; n = 0 is the Dirac unit at rPrev and has no pointwise value."""

    def __init__(self, n, kernelUtil, tables=None):
        self.n = n
        self.tables = tables
        self.__kU = kernelUtil

    def isDirac(self):
        return self.n == 0

    def evaluate(self, rPrev, r):
        if self.n == 0:
            raise DiracEvaluation("the zero-step kernel is a Dirac unit and has no density")
        return self.__kU.kn(self.n, rPrev, r, tables=self.tables)


class KernelUtil(object):
    """Evaluate n-step kernels from exact coefficient tables and run quadrature consistency checks.

    Args:
        **kwargs: genFunUtil (GenFunUtil, optional) table source; quadrature (Quadrature, optional)
    """

    def __init__(self, **kwargs):
        self.__genFunU = kwargs.get("genFunUtil", None) or GenFunUtil()
        self.__quad = kwargs.get("quadrature", None) or Quadrature()
        self.__tableCache = {}
        self.__floatCache = {}

    def getQuadrature(self):
        return self.__quad

    def tables(self, n):
        if n not in self.__tableCache:
            self.__tableCache[n] = self.__genFunU.coeffTables(n)
        return self.__tableCache[n]

    def density(self, n):
        return KernelDensity(n, self, tables=self.tables(n) if n >= 1 else None)

    def __floatTables(self, n, tables):
        if tables is None:
            if n not in self.__floatCache:
                self.__floatCache[n] = self.__toFloat(n, self.tables(n))
            return self.__floatCache[n]
        if tables.n != n:
            raise TableLevelMismatch("tables at level %d supplied for the %d-step kernel" % (tables.n, n))
        return self.__toFloat(n, tables)

    def __toFloat(self, n, tables):
        aA = numpy.array([[float(v) for v in row] for row in tables.a])
        bA = numpy.array([[float(v) for v in row] for row in tables.b])
        cA = numpy.array([[float(v) for v in row] for row in tables.c])
        lv = (-1.0) ** (n - 1) / rfact(n - 1)
        mA = numpy.array([(-1.0) ** n / (rfact(p) * rfact(n - p - 2)) for p in range(0, n - 1)])
        return aA, bA, cA, lv, mA

    def kn(self, n, rPrev, r, tables=None):
        """n-step kernel K^n(rPrev, r) from the coefficient tables (n >= 1).

        For r >= 0 the three cases rPrev <= 0, 0 < rPrev <= r and rPrev > r are evaluated as sums of
        exponentials; r < 0 uses K^n(rPrev, r) = K^n(-rPrev, -r).

        Raises:
            TableLevelMismatch: tables supplied for another level
        """
        if n < 1:
            raise DiracEvaluation("the zero-step kernel is a Dirac unit and has no density")
        scalar = numpy.isscalar(rPrev) and numpy.isscalar(r)
        aA, bA, cA, lv, mA = self.__floatTables(n, tables)
        rp, rr = numpy.broadcast_arrays(numpy.asarray(rPrev, dtype=float), numpy.asarray(r, dtype=float))
        shape = rp.shape
        rp = rp.ravel().copy()
        rr = rr.ravel().copy()
        flip = rr < 0.0
        rp[flip] = -rp[flip]
        rr[flip] = -rr[flip]
        out = numpy.zeros_like(rp)
        pA = numpy.arange(n + 1, dtype=float)
        kA = numpy.arange(n - 1, dtype=float)
        #
        m1 = rp <= 0.0
        if numpy.any(m1):
            ep = numpy.exp(numpy.outer(pA, rp[m1]))
            eq = numpy.exp(-numpy.outer(pA + 2.0, rr[m1]))
            out[m1] = numpy.einsum("pq,pm,qm->m", aA, ep, eq)
        for mask, tbl, middle in [((rp > 0.0) & (rp <= rr), bA, True), (rp > rr, cA, False)]:
            if not numpy.any(mask):
                continue
            x, y = rp[mask], rr[mask]
            ep = numpy.exp(-numpy.outer(pA, x))
            eq = numpy.exp(-numpy.outer(pA + 2.0, y))
            val = numpy.einsum("pq,pm,qm->m", tbl, ep, eq)
            if middle:
                val += lv * numpy.exp(x - (n + 1) * y)
                weight = x
            else:
                val += lv * numpy.exp(-(n - 1) * x - y)
                weight = y
            if len(kA):
                val += weight * numpy.einsum("k,km->m", mA, numpy.exp(-numpy.outer(kA, x) - numpy.outer(n - kA, y)))
            out[mask] = val
        return _finish(out.reshape(shape), scalar)

    def knLifted(self, n, mPrev, m, tables=None):
        """Lifted kernel exp(-(x+y+z)) K^{n-1}(deltaOne(mPrev), r) for n >= 2.

        Args:
            n (int): number of steps (>= 2)
            mPrev (tuple): previous state (r', x', y', z')
            m (tuple): state (r, x, y, z)
            tables (CoeffTables, optional): tables at level n - 1

        Raises:
            DiracEvaluation: n = 1, where the law of r is a point mass
        """
        if n <= 1:
            raise DiracEvaluation("the one-step lifted kernel is a Dirac unit in r; use liftedPushForward")
        r, x, y, z = m
        if min(numpy.min(x), numpy.min(y), numpy.min(z)) < 0.0:
            raise ValidationError("edge weights must be non-negative")
        inner = deltaOne(*[numpy.asarray(v, dtype=float) for v in mPrev])
        return numpy.exp(-(x + y + z)) * self.kn(n - 1, inner if numpy.ndim(inner) else float(inner), r, tables=tables)

    # --- quadrature oracles ---

    def normalizationResidual(self, n, rPrev):
        total = self.__quad.integrate(lambda rA: self.kn(n, rPrev, rA), breakpoints=(0.0, rPrev, 0.5 * rPrev))
        return abs(total - 1.0)

    def ckOracle(self, n, rPrev, r, quad=None, tables=None):
        """Chapman-Kolmogorov integral of k1(rPrev, s) K^{n-1}(s, r) over s (n >= 2)."""
        if n < 2:
            raise ValidationError("Chapman-Kolmogorov check needs n >= 2, got %r" % n)
        qd = quad or self.__quad
        return qd.integrate(lambda sA: k1(rPrev, sA) * self.kn(n - 1, sA, r, tables=tables), breakpoints=(0.0, rPrev, 0.5 * rPrev, r))

    def ckResidual(self, n, rPrev, r):
        return abs(self.ckOracle(n, rPrev, r) - self.kn(n, rPrev, r))

    def stationarityResidual(self, n, r):
        """|integral of pi(r') K^n(r', r) dr' - pi(r)|."""
        total = self.__quad.integrate(lambda sA: piDensity(sA) * self.kn(n, sA, r), breakpoints=(0.0, r, 2.0 * r))
        return abs(total - piDensity(r))

    def driftQuadrature(self, r):
        """1 - integral of exp(-|rho|) k1(r, rho) d rho, the expected Lyapunov function after one step."""
        return 1.0 - self.__quad.integrate(lambda sA: numpy.exp(-numpy.abs(sA)) * k1(r, sA), breakpoints=(0.0, r, 0.5 * r))

    def densityGrid(self, n, rPrevL, rL):
        """Rows (r_prev, r, value) of the n-step kernel over a grid."""
        rowL = []
        for rp in rPrevL:
            vA = self.kn(n, float(rp), numpy.asarray(rL, dtype=float))
            for rv, v in zip(rL, vA):
                rowL.append({"r_prev": float(rp), "r": float(rv), "value": float(v)})
        return rowL

    def oracleReport(self, nMax=5, gridSize=9, extent=3.0):
        """Largest normalization, symmetry, Chapman-Kolmogorov and stationarity residuals through nMax."""
        gridL = list(numpy.linspace(-extent, extent, gridSize) + 0.0137)
        rD = {"normalization": 0.0, "symmetry": 0.0, "chapman_kolmogorov": 0.0, "stationarity": 0.0}
        for n in range(1, nMax + 1):
            for rp in [-3.0, -1.0, 0.0, 1.0, 3.0]:
                rD["normalization"] = max(rD["normalization"], self.normalizationResidual(n, rp))
            for rp in gridL:
                for r in gridL:
                    rD["symmetry"] = max(rD["symmetry"], abs(self.kn(n, rp, r) - self.kn(n, -rp, -r)))
                    if n >= 2:
                        rD["chapman_kolmogorov"] = max(rD["chapman_kolmogorov"], self.ckResidual(n, rp, r))
            if n <= 3:
                for r in gridL:
                    rD["stationarity"] = max(rD["stationarity"], self.stationarityResidual(n, r))
            logger.debug("Kernel oracles through n = %d: %r", n, rD)
        return rD

    def liftedStationarityCheck(self, numDraws, rng):
        """KS distance between pi and the rung difference after one lifted step from the lifted stationary law."""
        mA = piTildeSample(numDraws, rng)
        rNew = liftedPushForward(mA, rng)[0]
        return float(scipy.stats.kstest(rNew, piCdf).statistic)
