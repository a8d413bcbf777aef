##
# File:    SeriesUtil.py
# Date:    14-Sep-2026
#
# Updates:
#  16-Sep-2026 jdw add Laurent quotients and the pi*Y core expansion
#  21-Sep-2026 jdw track the order of validity through products and quotients
##
"""
Exact truncated Laurent series over the rationals carrying two formal linear channels,
one for Euler's constant gamma and one for log(z).

A series represents

    sum_k (c0_k + cg_k * gamma) z**k  +  log(z) * sum_k (l0_k + lg_k * gamma) z**k

with all coefficients known through z**order inclusive.  Products of two log bearing
series and products of two gamma coefficients are rejected rather than represented.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import functools
import logging
import math
from fractions import Fraction

import numpy

from rcsb.utils.fpp.FppErrors import DivideByZeroSeries, GammaOverflow, LogSquared, ValidationError

logger = logging.getLogger(__name__)

MIN_VALUATION = -8
EULER_GAMMA = float(numpy.euler_gamma)


@functools.lru_cache(maxsize=None)
def harmonic(k):
    """Return the harmonic number H_k = 1 + 1/2 + ... + 1/k as an exact fraction (H_0 = 0)."""
    if k < 0:
        raise ValidationError("harmonic number index must be non-negative, got %r" % k)
    if k == 0:
        return Fraction(0)
    return harmonic(k - 1) + Fraction(1, k)


@functools.lru_cache(maxsize=None)
def rfact(k):
    """Return (k)^! = k!(k+1)!"""
    return math.factorial(k) * math.factorial(k + 1)


class GCoeff(object):
    """Exact coefficient c0 + cg * gamma."""

    def __init__(self, c0=0, cg=0):
        self.__c0 = Fraction(c0)
        self.__cg = Fraction(cg)

    @property
    def c0(self):
        return self.__c0

    @property
    def cg(self):
        return self.__cg

    def isZero(self):
        return self.__c0 == 0 and self.__cg == 0

    def isRational(self):
        return self.__cg == 0

    def __add__(self, other):
        other = toGCoeff(other)
        return GCoeff(self.__c0 + other.c0, self.__cg + other.cg)

    __radd__ = __add__

    def __sub__(self, other):
        other = toGCoeff(other)
        return GCoeff(self.__c0 - other.c0, self.__cg - other.cg)

    def __rsub__(self, other):
        return toGCoeff(other) - self

    def __neg__(self):
        return GCoeff(-self.__c0, -self.__cg)

    def __mul__(self, other):
        other = toGCoeff(other)
        if self.__cg != 0 and other.cg != 0:
            raise GammaOverflow("gamma**2 term with coefficient %s" % (self.__cg * other.cg))
        return GCoeff(self.__c0 * other.c0, self.__c0 * other.cg + self.__cg * other.c0)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a rational scalar."""
        other = toGCoeff(other)
        if not other.isRational():
            raise GammaOverflow("division by a gamma bearing coefficient")
        return GCoeff(self.__c0 / other.c0, self.__cg / other.c0)

    def __eq__(self, other):
        try:
            other = toGCoeff(other)
        except TypeError:
            return NotImplemented
        return self.__c0 == other.c0 and self.__cg == other.cg

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.__c0, self.__cg))

    def __repr__(self):
        if self.__cg == 0:
            return "GCoeff(%s)" % self.__c0
        return "GCoeff(%s + %s*gamma)" % (self.__c0, self.__cg)

    def evaluate(self, gamma=EULER_GAMMA):
        return float(self.__c0) + float(self.__cg) * gamma


def toGCoeff(value):
    if isinstance(value, GCoeff):
        return value
    if isinstance(value, (int, Fraction)):
        return GCoeff(value)
    raise TypeError("cannot convert %r to GCoeff" % (value,))


GZERO = GCoeff(0)


class GSeries(object):
    """Immutable truncated Laurent series with gamma and log(z) channels.

    Args:
        coeffs (list): plain part coefficients (GCoeff, Fraction or int) starting at z**valuation
        logCoeffs (list, optional): log(z) channel coefficients starting at z**valuation. Defaults to None (empty channel).
        valuation (int, optional): exponent of the first listed coefficient. Defaults to 0.
        order (int, optional): truncation order N (coefficients known through z**N). Defaults to the last listed exponent.
    """

    def __init__(self, coeffs, logCoeffs=None, valuation=0, order=None):
        plainL = [toGCoeff(c) for c in coeffs]
        logL = [toGCoeff(c) for c in logCoeffs] if logCoeffs else []
        if order is None:
            order = valuation + max(len(plainL), len(logL)) - 1
        width = order - valuation + 1
        if width < 0:
            width = 0
        plainL = (plainL + [GZERO] * width)[:width]
        logL = (logL + [GZERO] * width)[:width] if any(not c.isZero() for c in logL) else []
        #
        lead = 0
        while lead < width and plainL[lead].isZero() and (not logL or logL[lead].isZero()):
            lead += 1
        self.__order = order
        self.__valuation = valuation + lead
        self.__plain = tuple(plainL[lead:])
        self.__log = tuple(logL[lead:]) if logL and any(not c.isZero() for c in logL[lead:]) else ()
        if self.__plain and self.__valuation < MIN_VALUATION:
            raise ValidationError("valuation %d below supported minimum %d" % (self.__valuation, MIN_VALUATION))

    # --- constructors ---

    @classmethod
    def zero(cls, order):
        return cls([], valuation=order + 1, order=order)

    @classmethod
    def one(cls, order):
        return cls([1], valuation=0, order=order)

    @classmethod
    def monomial(cls, coeff, power, order):
        """Return coeff * z**power truncated at order."""
        return cls([coeff], valuation=power, order=order)

    @classmethod
    def constant(cls, coeff, order):
        return cls([coeff], valuation=0, order=order)

    @classmethod
    def logZ(cls, order, coeff=1):
        """Return coeff * log(z) truncated at order."""
        return cls([], logCoeffs=[coeff], valuation=0, order=order)

    @classmethod
    def fromFunction(cls, termFn, order, start=0):
        """Return the series sum_{k=start}^{order} termFn(k) z**k."""
        return cls([termFn(k) for k in range(start, order + 1)], valuation=start, order=order)

    # --- accessors ---

    @property
    def valuation(self):
        return self.__valuation

    @property
    def order(self):
        return self.__order

    @property
    def coeffs(self):
        return list(self.__plain)

    @property
    def logCoeffs(self):
        return list(self.__log)

    def isZero(self):
        return not self.__plain

    def hasLog(self):
        return bool(self.__log)

    def hasGamma(self):
        return any(not c.isRational() for c in self.__plain) or any(not c.isRational() for c in self.__log)

    def isPurelyRational(self):
        return not self.hasLog() and not self.hasGamma()

    def coeff(self, k):
        """Return the plain part coefficient of z**k."""
        if k > self.__order:
            raise ValidationError("coefficient z^%d requested beyond order %d" % (k, self.__order))
        idx = k - self.__valuation
        return self.__plain[idx] if 0 <= idx < len(self.__plain) else GZERO

    def logCoeff(self, k):
        if k > self.__order:
            raise ValidationError("log coefficient z^%d requested beyond order %d" % (k, self.__order))
        idx = k - self.__valuation
        return self.__log[idx] if 0 <= idx < len(self.__log) else GZERO

    def rational(self, k):
        """Return the coefficient of z**k as a Fraction, requiring empty gamma and log channels at k."""
        cf = self.coeff(k)
        if not cf.isRational() or not self.logCoeff(k).isZero():
            raise GammaOverflow("coefficient z^%d is not purely rational: %r" % (k, cf))
        return cf.c0

    def rationals(self, start=0):
        return [self.rational(k) for k in range(start, self.__order + 1)]

    # --- arithmetic ---

    def __span(self, other):
        lo = min(self.__valuation, other.valuation)
        hi = min(self.__order, other.order)
        return lo, hi

    def __add__(self, other):
        other = toGSeries(other, self.__order)
        lo, hi = self.__span(other)
        plainL = [self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)]
        logL = [self.logCoeff(k) + other.logCoeff(k) for k in range(lo, hi + 1)] if self.hasLog() or other.hasLog() else None
        return GSeries(plainL, logCoeffs=logL, valuation=lo, order=hi)

    __radd__ = __add__

    def __neg__(self):
        return GSeries([-c for c in self.__plain], logCoeffs=[-c for c in self.__log], valuation=self.__valuation, order=self.__order)

    def __sub__(self, other):
        return self + (-toGSeries(other, self.__order))

    def __rsub__(self, other):
        return toGSeries(other, self.__order) - self

    def __mul__(self, other):
        if isinstance(other, GSeries):
            return seriesMul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, GSeries):
            return seriesDiv(self, other)
        return self.scale(GCoeff(1) / toGCoeff(other))

    def scale(self, c):
        c = toGCoeff(c)
        return GSeries([c * x for x in self.__plain], logCoeffs=[c * x for x in self.__log], valuation=self.__valuation, order=self.__order)

    def shift(self, k):
        """Multiply by z**k."""
        return GSeries(self.__plain, logCoeffs=self.__log, valuation=self.__valuation + k, order=self.__order + k)

    def truncate(self, order):
        if order > self.__order:
            raise ValidationError("cannot raise order %d to %d" % (self.__order, order))
        return GSeries(self.__plain, logCoeffs=self.__log, valuation=self.__valuation, order=order)

    def __eq__(self, other):
        if not isinstance(other, GSeries):
            return NotImplemented
        return (
            self.__order == other.order
            and self.__valuation == other.valuation
            and list(self.__plain) == other.coeffs
            and list(self.__log) == other.logCoeffs
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.__order, self.__valuation, self.__plain, self.__log))

    def __repr__(self):
        return "GSeries(valuation=%d, order=%d, coeffs=%r, logCoeffs=%r)" % (self.__valuation, self.__order, list(self.__plain), list(self.__log))

    def evaluate(self, z, gamma=EULER_GAMMA, logZ=None):
        """Substitute numeric values for z, gamma and log(z).

        Args:
            z (float): positive argument
            gamma (float, optional): value substituted for the gamma channel. Defaults to Euler's constant.
            logZ (float, optional): value substituted for log(z). Defaults to math.log(z).

        Returns:
            float: value of the truncated series
        """
        termL = [c.evaluate(gamma) * z ** (self.__valuation + i) for i, c in enumerate(self.__plain)]
        if self.__log:
            lz = math.log(z) if logZ is None else logZ
            termL.extend([lz * c.evaluate(gamma) * z ** (self.__valuation + i) for i, c in enumerate(self.__log)])
        return math.fsum(termL)


def toGSeries(value, order):
    if isinstance(value, GSeries):
        return value
    return GSeries.constant(value, order)


def seriesMul(a, b):
    """Exact product of two series.

    The result is valid through min(a.order + b.valuation, b.order + a.valuation).

    Raises:
        LogSquared: both operands carry a log(z) channel
        GammaOverflow: a gamma**2 term would arise
    """
    if a.hasLog() and b.hasLog():
        raise LogSquared("both factors carry a log(z) channel")
    if a.isZero() or b.isZero():
        order = min(a.order + (b.valuation if not b.isZero() else 0), b.order + (a.valuation if not a.isZero() else 0))
        return GSeries.zero(order)
    va, vb = a.valuation, b.valuation
    order = min(a.order + vb, b.order + va)
    pa, pb = a.coeffs, b.coeffs
    la, lb = a.logCoeffs, b.logCoeffs
    width = order - (va + vb) + 1
    plainL = []
    logL = []
    for k in range(width):
        acc = GZERO
        for i in range(max(0, k - len(pb) + 1), min(k, len(pa) - 1) + 1):
            acc = acc + pa[i] * pb[k - i]
        plainL.append(acc)
        if la or lb:
            lacc = GZERO
            for i in range(0, k + 1):
                if la and i < len(la) and k - i < len(pb):
                    lacc = lacc + la[i] * pb[k - i]
                if lb and i < len(pa) and k - i < len(lb):
                    lacc = lacc + pa[i] * lb[k - i]
            logL.append(lacc)
    return GSeries(plainL, logCoeffs=logL or None, valuation=va + vb, order=order)


def seriesDiv(a, b):
    """Exact Laurent quotient a / b.

    The divisor must have empty gamma and log(z) channels.  The quotient has valuation
    a.valuation - b.valuation and is valid through min(a.order - vb, b.order + a.valuation - 2 vb).

    Raises:
        DivideByZeroSeries: b vanishes through its order
        LogSquared: b carries a log(z) channel
        GammaOverflow: b carries a gamma channel
    """
    if b.isZero():
        raise DivideByZeroSeries("divisor vanishes through order %d" % b.order)
    if b.hasLog():
        raise LogSquared("divisor carries a log(z) channel")
    if b.hasGamma():
        raise GammaOverflow("divisor carries a gamma channel")
    vb = b.valuation
    if a.isZero():
        return GSeries.zero(a.order - vb)
    va = a.valuation
    order = min(a.order - vb, b.order + va - 2 * vb)
    uL = [c.c0 for c in b.coeffs]
    u0 = uL[0]
    width = order - (va - vb) + 1
    pa, la = a.coeffs, a.logCoeffs

    def _divide(numL):
        qL = []
        for j in range(width):
            acc = numL[j] if j < len(numL) else GZERO
            for i in range(1, min(j, len(uL) - 1) + 1):
                acc = acc - qL[j - i] * uL[i]
            qL.append(acc / u0)
        return qL

    plainL = _divide(pa)
    logL = _divide(la) if la else None
    return GSeries(plainL, logCoeffs=logL, valuation=va - vb, order=order)


@functools.lru_cache(maxsize=None)
def besselJCore(nu, order):
    """Return j_nu(z) = z^(-nu/2) J_nu(2 sqrt(z)) = sum_k (-z)^k / (k! (k+nu)!) through z**order.

    Args:
        nu (int): non-negative integer order
        order (int): truncation order

    Returns:
        GSeries: purely rational series with valuation 0
    """
    if nu < 0:
        raise ValidationError("Bessel core order must be non-negative, got %r" % nu)
    return GSeries.fromFunction(lambda k: Fraction((-1) ** k, math.factorial(k) * math.factorial(k + nu)), order)


@functools.lru_cache(maxsize=None)
def besselPiYCore(nu, order):
    """Return z^(nu/2) * pi * Y_nu(2 sqrt(z)) through z**order.

    The log(z) channel is z^nu j_nu(z), the gamma channel of the plain part is 2 z^nu j_nu(z), and
    the rational plain part is

        - sum_{k<nu} (nu-k-1)!/k! z^k  -  sum_k (-1)^k (H_k + H_{k+nu}) z^(k+nu) / (k! (k+nu)!)

    Args:
        nu (int): non-negative integer order
        order (int): truncation order

    Returns:
        GSeries: series with non-empty gamma and log(z) channels
    """
    if nu < 0:
        raise ValidationError("Bessel core order must be non-negative, got %r" % nu)
    plainL = []
    logL = []
    for k in range(order + 1):
        c0 = Fraction(0)
        cg = Fraction(0)
        lc = Fraction(0)
        if k < nu:
            c0 -= Fraction(math.factorial(nu - k - 1), math.factorial(k))
        else:
            m = k - nu
            base = Fraction((-1) ** m, math.factorial(m) * math.factorial(k))
            c0 -= (harmonic(m) + harmonic(k)) * base
            cg += 2 * base
            lc = base
        plainL.append(GCoeff(c0, cg))
        logL.append(GCoeff(lc))
    return GSeries(plainL, logCoeffs=logL, valuation=0, order=order)
