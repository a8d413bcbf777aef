##
# File:    SpecFunUtil.py
# Date:    15-Sep-2026
#
# Updates:
#  17-Sep-2026 jdw add the derivative of the regularized 0F1 with respect to its parameter
#  19-Sep-2026 jdw add the catalogue of summation formulas and relation checks
#  23-Sep-2026 jdw clear the removable pole at z = 1 in the first relation check
#  18-Oct-2026 jdw compare the first relation undivided; its pole at z = 1 is left out of the grid
##
"""
Series based special functions (Bessel J and Y of integer order, 2F3({1,1},{2,2,2};x),
parameter derivatives of the regularized 0F1) and a catalogue of summation identities
that pair a truncated raw sum with its Bessel/hypergeometric closed form.

All arguments stay below a few units so plain power series are used throughout.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import math

import numpy
import scipy.special

from rcsb.utils.fpp.FppErrors import DomainError, UnknownIdentity, ValidationError
from rcsb.utils.fpp.SeriesUtil import EULER_GAMMA

logger = logging.getLogger(__name__)

MAX_TERMS = 200
REL_STOP = 1.0e-18

FORMULA_NAMES = ["S1", "S2", "S3", "S4", "Sigma1", "Sigma2", "Sigma3", "Sigma4", "T1", "T2", "U1", "U2", "Upsilon1", "Upsilon2"]
RELATION_NAMES = ["Rel1", "Rel2"]
DERIVATIVE_NAMES = ["HG1", "HG2"]
IDENTITY_NAMES = FORMULA_NAMES + RELATION_NAMES + DERIVATIVE_NAMES
# identities whose argument is the product zeta * z
PRODUCT_ARGUMENT_NAMES = ["Sigma1", "Sigma2", "Sigma3", "Sigma4", "T1", "T2", "Upsilon1", "Upsilon2"]
# arguments where a relation has a removable pole and cannot be evaluated in floating point
RELATION_POLES = {"Rel1": (1.0,)}


def kahanSum(valueL):
    """Neumaier compensated summation."""
    total = 0.0
    comp = 0.0
    for v in valueL:
        t = total + v
        if abs(total) >= abs(v):
            comp += (total - t) + v
        else:
            comp += (v - t) + total
        total = t
    return total + comp


def sumTerms(termL, summation="fsum"):
    if summation == "fsum":
        return math.fsum(termL)
    if summation == "kahan":
        return kahanSum(termL)
    if summation == "plain":
        return sum(termL)
    raise ValidationError("unknown summation %r" % summation)


def _seriesTerms(first, ratioFn):
    """Generate terms t_0 = first, t_{k+1} = t_k * ratioFn(k) until the relative stop or MAX_TERMS."""
    termL = [first]
    t = first
    total = abs(first)
    for k in range(MAX_TERMS - 1):
        t = t * ratioFn(k)
        termL.append(t)
        total = max(total, abs(t))
        if abs(t) <= REL_STOP * total:
            break
    return termL


def besselJ(nu, x, summation="fsum"):
    """Bessel function of the first kind J_nu(x) for integer nu >= 0 by its power series.

    Args:
        nu (int): order
        x (float): non-negative argument
        summation (str, optional): fsum, kahan or plain. Defaults to "fsum".

    Returns:
        float: J_nu(x)
    """
    if nu < 0:
        raise DomainError("negative Bessel order %r" % nu)
    if x < 0:
        raise DomainError("negative Bessel argument %r" % x)
    h = x / 2.0
    first = h ** nu / math.factorial(nu)
    if first == 0.0:
        return 0.0
    termL = _seriesTerms(first, lambda k: -h * h / ((k + 1) * (k + 1 + nu)))
    return sumTerms(termL, summation)


def besselJCoreValue(nu, z):
    """Return j_nu(z) = sum_k (-z)^k / (k! (k+nu)!), equal to J_nu(2 sqrt z) / z^(nu/2) for z > 0."""
    termL = _seriesTerms(1.0 / math.factorial(nu), lambda k: -z / ((k + 1) * (k + 1 + nu)))
    return math.fsum(termL)


def piBesselY(nu, x):
    """Return pi * Y_nu(x) for integer nu >= 0 and x > 0 from the logarithmic series."""
    if x <= 0:
        raise DomainError("Bessel Y requires a positive argument, got %r" % x)
    if nu < 0:
        raise DomainError("negative Bessel order %r" % nu)
    h = x / 2.0
    u = h * h
    termL = [2.0 * besselJ(nu, x) * (math.log(h) + EULER_GAMMA)]
    for k in range(nu):
        termL.append(-math.factorial(nu - k - 1) / math.factorial(k) * h ** (2 * k - nu))
    hk, hkn = 0.0, math.fsum([1.0 / j for j in range(1, nu + 1)])
    t = h ** nu / math.factorial(nu)
    scale = abs(t) if t else 1.0
    for k in range(MAX_TERMS):
        if k > 0:
            hk += 1.0 / k
            hkn += 1.0 / (k + nu)
            t *= -u / (k * (k + nu))
        termL.append(-(hk + hkn) * t)
        if abs(t) <= REL_STOP * scale and k > 2:
            break
    return math.fsum(termL)


def besselY(nu, x):
    """Bessel function of the second kind Y_nu(x), integer nu >= 0, x > 0.

    Raises:
        DomainError: x <= 0
    """
    return piBesselY(nu, x) / math.pi


def besselJArray(nu, xA):
    """Vectorized J_nu over a numpy array."""
    return scipy.special.jv(nu, numpy.asarray(xA, dtype=float))


def hyp2f3(x):
    """Return 2F3({1,1},{2,2,2};x) = sum_k x^k / ((k+1)^3 k!^2) for |x| <= 16."""
    if abs(x) > 16.0:
        raise DomainError("2F3 argument %r outside |x| <= 16" % x)
    termL = _seriesTerms(1.0, lambda k: x * (k + 1) / (k + 2) ** 3)
    return math.fsum(termL)


def regularized0F1(b, z):
    """Return 0F1~({};{b};-z) = sum_k (-z)^k / (k! Gamma(k+b)), finite at non-positive integer b."""
    termL = []
    for k in range(MAX_TERMS):
        t = (-z) ** k / math.factorial(k) * float(scipy.special.rgamma(k + b))
        termL.append(t)
        if k > 10 and abs(t) < 1.0e-30:
            break
    return math.fsum(termL)


def d0F1TildeDb(nu, z):
    """Derivative with respect to b of 0F1~({};{b};-z) at the integer b = nu.

    For nu > 0 this is  gamma j_{nu-1}(z) - sum_k (-z)^k H_{k+nu-1} / (k! (k+nu-1)!).
    For nu = -m < 0 this is

        (-1)^(m+1) gamma z^(m+1) j_{m+1}(z) - sum_k (-z)^(k+m+1) H_k / (k! (k+m+1)!) + (-1)^m sum_{k=0}^m z^k (m-k)!/k!

    nu = 0 evaluates the same expression with m = 0, which the derivative lemma does not state;
    it is checked against central differences on its own.

    Args:
        nu (int): integer parameter, |nu| <= 8
        z (float): positive argument

    Returns:
        float: derivative value
    """
    if z <= 0:
        raise DomainError("derivative of 0F1 requires z > 0, got %r" % z)
    if abs(nu) > 8:
        raise DomainError("parameter %r outside |nu| <= 8" % nu)
    termL = []
    if nu > 0:
        termL.append(EULER_GAMMA * besselJCoreValue(nu - 1, z))
        h = math.fsum([1.0 / j for j in range(1, nu)])
        t = 1.0 / math.factorial(nu - 1)
        for k in range(MAX_TERMS):
            if k > 0:
                h += 1.0 / (k + nu - 1)
                t *= -z / (k * (k + nu - 1))
            termL.append(-t * h)
            if k > 4 and abs(t) < 1.0e-30:
                break
    else:
        m = -nu
        termL.append((-1) ** (m + 1) * EULER_GAMMA * z ** (m + 1) * besselJCoreValue(m + 1, z))
        h = 0.0
        t = (-z) ** (m + 1) / math.factorial(m + 1)
        for k in range(MAX_TERMS):
            if k > 0:
                h += 1.0 / k
                t *= -z / (k * (k + m + 1))
            termL.append(-t * h)
            if k > 4 and abs(t) < 1.0e-30:
                break
        termL.extend([(-1) ** m * z ** k * math.factorial(m - k) / math.factorial(k) for k in range(m + 1)])
    return math.fsum(termL)


def d0F1TildeDbMinusOne(z):
    """Closed form of the parameter derivative at b = -1 in terms of J_0, J_1 and Y_2 at 2 sqrt(z)."""
    x = 2.0 * math.sqrt(z)
    lz = math.log(z)
    return 0.5 * (z * piBesselY(2, x) - math.sqrt(z) * besselJ(1, x) * (2.0 + lz) + besselJ(0, x) * (z * lz - 1.0))


def _sigmaPartial(k):
    """Return sum_{l=2}^k (2l+1)/(l(l+1)) (zero for k < 2)."""
    return math.fsum([(2.0 * l + 1.0) / (l * (l + 1.0)) for l in range(2, k + 1)])


def _rf(k):
    return float(math.factorial(k) * math.factorial(k + 1))


def _fact(k):
    return float(math.factorial(k))


def namedValue(name, z):
    """Numeric value of the generating functions S1, S2, G, alpha, H, D, F = S1 + z S2/(2(1-z)) and T = S2/(1-z) at z > 0."""
    x = 2.0 * math.sqrt(z)
    rz = math.sqrt(z)
    j0, j1, j2 = besselJ(0, x), besselJ(1, x), besselJ(2, x)
    lz = math.log(z)
    if name == "S1":
        return (z - 2.0 * j2) / z
    if name == "S2":
        return (2.0 * (z - 1.0) + 2.0 * j0) / z
    if name == "G":
        return -(z ** 3) / 4.0 * (5.0 - 4.0 * EULER_GAMMA + 2.0 * piBesselY(2, x) / j2 - 2.0 * lz)
    if name == "alpha":
        return z ** 4 / (4.0 * rz * j2 * (rz * j0 + (z - 1.0) * j1))
    if name == "H":
        return z * z / (2.0 * (1.0 - z)) * _hBracket(z)
    if name == "D":
        return (rz * j1 * (2.0 * EULER_GAMMA + lz) - rz * piBesselY(1, x) - 1.0) / z
    if name == "F":
        return namedValue("S1", z) + z * namedValue("S2", z) / (2.0 * (1.0 - z))
    if name == "T":
        return namedValue("S2", z) / (1.0 - z)
    raise UnknownIdentity("unknown generating function %r" % name)


def _hBracket(z):
    x = 2.0 * math.sqrt(z)
    return 3.0 * z - 3.0 + 2.0 * piBesselY(0, x) + besselJ(0, x) * (5.0 - 4.0 * EULER_GAMMA - 2.0 * math.log(z))


class SpecFunUtil(object):
    """Evaluate both sides of the summation formulas, the relation lemmas and the
    parameter derivative lemma.

    Args:
        **kwargs: hgNuPositive (int, default 2) and hgNuNegative (int, default 1) select the
            parameters b = nu and b = -nu checked by the HG1 and HG2 cases
    """

    def __init__(self, **kwargs):
        self.__hgNuPositive = int(kwargs.get("hgNuPositive", 2))
        self.__hgNuNegative = int(kwargs.get("hgNuNegative", 1))

    def getIdentityNames(self):
        return list(IDENTITY_NAMES)

    def __arg(self, name, z, zeta):
        if z <= 0 or zeta <= 0:
            raise DomainError("identity %s requires positive arguments (z=%r zeta=%r)" % (name, z, zeta))
        return zeta * z if name in PRODUCT_ARGUMENT_NAMES else z

    def closedForm(self, name, z, zeta=1.0):
        """Bessel/hypergeometric side of the named identity.

        For the relation lemmas this is the left hand side combination; for HG1/HG2 it is the
        closed form of the parameter derivative.

        Raises:
            UnknownIdentity: unknown name
        """
        if name not in IDENTITY_NAMES:
            raise UnknownIdentity("unknown identity %r" % name)
        w = self.__arg(name, z, zeta)
        x = 2.0 * math.sqrt(w)
        rw = math.sqrt(w)
        if name == "S1":
            return (2.0 * besselJ(2, x) - w) / (2.0 * w)
        elif name == "S2":
            return (1.0 - w - besselJ(0, x)) / w
        elif name in ["S3", "T2"]:
            return 1.0 - besselJ(0, x) - rw * besselJ(1, x)
        elif name == "S4":
            return w * w * hyp2f3(-w)
        elif name == "Sigma1":
            return besselJ(1, x) / rw * self.closedForm("S3", w)
        elif name == "Sigma2":
            return (2.0 * besselJ(2, x) - w) * rw * besselJ(1, x)
        elif name == "Sigma3":
            return 2.0 * (w - 1.0 + besselJ(0, x)) * besselJ(1, x) / rw
        elif name == "Sigma4":
            return -rw * besselJ(1, x) * hyp2f3(-w)
        elif name == "T1":
            return besselJ(1, x) / rw
        elif name == "U1":
            return self.__u1Closed(w)
        elif name == "U2":
            return self.__u2Closed(w)
        elif name == "Upsilon1":
            return besselJ(1, x) / rw * self.__u1Closed(w)
        elif name == "Upsilon2":
            return -besselJ(1, x) / w ** 1.5 * self.__u2Closed(w)
        elif name == "Rel1":
            return self.__relation1(w)
        elif name == "Rel2":
            return self.__u1Closed(w) + self.closedForm("S3", w) + (namedValue("S1", w) - 1.0) / w * namedValue("G", w)
        elif name == "HG1":
            return d0F1TildeDb(self.__hgNuPositive, w)
        elif name == "HG2":
            return d0F1TildeDb(-self.__hgNuNegative, w)
        raise UnknownIdentity("unknown identity %r" % name)

    def rawSum(self, name, z, zeta=1.0, numTerms=40):
        """Truncated defining sum of the named identity (outer index through numTerms).

        For the relation lemmas this is the right hand side; for HG1/HG2 it is the term by term
        derivative of the regularized 0F1 series.
        """
        if name not in IDENTITY_NAMES:
            raise UnknownIdentity("unknown identity %r" % name)
        if numTerms < 20:
            raise ValidationError("raw sums need at least 20 terms, got %r" % numTerms)
        w = self.__arg(name, z, zeta)
        K = numTerms
        tL = []
        if name == "S1":
            tL = [(-w) ** k / (_fact(k) * _fact(k + 2)) for k in range(1, K + 1)]
        elif name == "S2":
            tL = [(-w) ** k / _fact(k + 1) ** 2 for k in range(1, K + 1)]
        elif name == "S3":
            tL = [(-w) ** (n + 2) / (_rf(n) * (n + 2) ** 2) for n in range(K + 1)]
        elif name == "S4":
            tL = [(-w) ** (n + 2) / (_rf(n) * (n + 1) ** 2) for n in range(K + 1)]
        elif name == "Sigma1":
            tL = [(-w) ** q / (_rf(k) * _rf(q - k - 2) * (k + 2) ** 2) for q in range(K + 1) for k in range(q - 1)]
        elif name == "Sigma2":
            tL = [2.0 * (-w) ** q / (_fact(k) * _fact(k + 2) * _rf(q - k - 2)) for q in range(K + 1) for k in range(1, q - 1)]
        elif name == "Sigma3":
            tL = [2.0 * (-w) ** q / (_rf(q - k - 1) * _fact(k + 1) ** 2) for q in range(K + 1) for k in range(1, q)]
        elif name == "Sigma4":
            tL = [(-w) ** q / (_rf(k) * _rf(q - k - 1) * (k + 1) ** 2) for q in range(K + 1) for k in range(q)]
        elif name == "T1":
            tL = [(-w) ** q / _rf(q) for q in range(K + 1)]
        elif name == "T2":
            tL = [(-w) ** (q + 1) * q / _fact(q + 1) ** 2 for q in range(K + 1)]
        elif name == "U1":
            tL = [(-w) ** (k + 2) / (_fact(k) * _fact(k + 2)) * _sigmaPartial(k) for k in range(1, K + 1)]
        elif name == "U2":
            tL = [(-w) ** (k + 2) / _fact(k + 1) ** 2 * _sigmaPartial(k) for k in range(1, K + 1)]
        elif name == "Upsilon1":
            tL = [(-w) ** q / (_rf(q - k - 2) * _fact(k) * _fact(k + 2)) * _sigmaPartial(k) for q in range(K + 1) for k in range(1, q - 1)]
        elif name == "Upsilon2":
            tL = [(-w) ** q / (_rf(q - k - 1) * _fact(k + 1) ** 2) * _sigmaPartial(k) for q in range(K + 1) for k in range(1, q)]
        elif name == "Rel1":
            tL = [-0.75 * w * w]
        elif name == "Rel2":
            tL = [0.75 * w * w, -w, -1.0]
        elif name == "HG1":
            tL = self.__hgRawTerms(self.__hgNuPositive, w, K)
        elif name == "HG2":
            tL = self.__hgRawTerms(-self.__hgNuNegative, w, K)
        return math.fsum(tL)

    def residual(self, name, z, zeta=1.0, numTerms=40):
        return abs(self.rawSum(name, z, zeta=zeta, numTerms=numTerms) - self.closedForm(name, z, zeta=zeta))

    def identityReport(self, zL=None, zetaL=None, numTerms=40, nameL=None):
        """Return rows (name, z, zeta, residual) over the grid of arguments.

        Identities that do not take zeta are reported once per z with zeta = 1. Relations are
        not reported at their poles (RELATION_POLES).
        """
        zL = zL if zL else [0.25, 0.5, 1.0, 1.5, 2.0]
        zetaL = zetaL if zetaL else [0.25, 0.5, 1.0, 1.5, 2.0]
        nameL = nameL if nameL else IDENTITY_NAMES
        rowL = []
        for name in nameL:
            for z in zL:
                if z in RELATION_POLES.get(name, ()):
                    logger.debug("Skipping %s at its pole z = %r", name, z)
                    continue
                for zeta in zetaL if name in PRODUCT_ARGUMENT_NAMES else [1.0]:
                    rowL.append({"name": name, "z": z, "zeta": zeta, "residual": self.residual(name, z, zeta=zeta, numTerms=numTerms)})
        logger.debug("Evaluated %d identity cases", len(rowL))
        return rowL

    def finiteDifferenceDb(self, b, z, step=1.0e-5):
        """Central difference in b of the regularized 0F1 at (b, -z)."""
        return (regularized0F1(b + step, z) - regularized0F1(b - step, z)) / (2.0 * step)

    def __hgRawTerms(self, nu, z, numTerms):
        # term by term derivative of 1/Gamma(k+b); at the zeros b = -j the slope is (-1)^j j!
        tL = []
        for k in range(numTerms + 1):
            s = k + nu
            if s <= 0:
                slope = (-1) ** (-s) * _fact(-s)
            else:
                slope = (EULER_GAMMA - math.fsum([1.0 / j for j in range(1, s)])) / _fact(s - 1)
            tL.append((-z) ** k / _fact(k) * slope)
        return tL

    def __u1Closed(self, z):
        x = 2.0 * math.sqrt(z)
        lz = math.log(z)
        return (
            0.75 * z * z
            - z
            - 2.0
            - z * piBesselY(2, x)
            + 0.5 * math.sqrt(z) * besselJ(1, x) * (4.0 * EULER_GAMMA - 3.0 + 2.0 * lz)
            + besselJ(0, x) * (1.0 + 2.5 * z - 2.0 * EULER_GAMMA * z - z * lz)
        )

    def __u2Closed(self, z):
        x = 2.0 * math.sqrt(z)
        return 0.5 * z * (-5.0 + 3.0 * z + 2.0 * piBesselY(0, x) - 2.0 * z * hyp2f3(-z) + besselJ(0, x) * (5.0 - 4.0 * EULER_GAMMA - 2.0 * math.log(z)))

    def __relation1(self, z):
        """S1, S2, G, alpha and H combination of the first relation; it equals -3 z^2 / 4."""
        if z in RELATION_POLES["Rel1"]:
            raise DomainError("relation Rel1 cannot be evaluated at its pole z = %r" % z)
        s1, s2 = namedValue("S1", z), namedValue("S2", z)
        gv, av = namedValue("G", z), namedValue("alpha", z)
        return (s2 / (2.0 * (1.0 - z)) + 1.0 / z) * gv - (s1 / z + s2 / (1.0 - z) + 1.0 / z) * av + namedValue("H", z) / 2.0
