##
# File:    testSeriesUtil.py
# Author:  J. Westbrook
# Date:    14-Sep-2026
# Version: 0.001
#
# Update:
#  21-Sep-2026 jdw add order tracking cases for quotients
#
##
"""
Tests for exact truncated Laurent series with gamma and log(z) channels.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import math
import os
import time
import unittest
from fractions import Fraction

from rcsb.utils.fpp.FppErrors import DivideByZeroSeries, GammaOverflow, LogSquared, ValidationError
from rcsb.utils.fpp.SeriesUtil import GCoeff, GSeries, besselJCore, besselPiYCore, harmonic, rfact
from rcsb.utils.fpp.SpecFunUtil import besselJ, piBesselY

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))


class SeriesUtilTests(unittest.TestCase):
    def setUp(self):
        self.__order = 10
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testCombinatorics(self):
        """Harmonic numbers and rising factorial pairs."""
        self.assertEqual(harmonic(0), 0)
        self.assertEqual(harmonic(3), Fraction(11, 6))
        self.assertEqual(rfact(0), 1)
        self.assertEqual(rfact(3), 144)
        with self.assertRaises(ValidationError):
            harmonic(-1)

    def testCoefficientArithmetic(self):
        """Exact gamma coefficients reject gamma**2."""
        g = GCoeff(0, 1)
        c = GCoeff(Fraction(1, 2), 3)
        self.assertEqual(c * 2, GCoeff(1, 6))
        self.assertEqual(c - c, GCoeff(0))
        self.assertEqual((c / 2).cg, Fraction(3, 2))
        with self.assertRaises(GammaOverflow):
            _ = g * c
        with self.assertRaises(GammaOverflow):
            _ = c / g

    def testRingLaws(self):
        """Sums and products commute and distribute."""
        try:
            n = self.__order
            a = GSeries.fromFunction(lambda k: Fraction(k + 1, k + 2), n)
            b = GSeries.fromFunction(lambda k: Fraction((-1) ** k, k + 1), n, start=1)
            c = GSeries([1, 0, 3], order=n)
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            lhs = a * (b + c)
            rhs = a * b + a * c
            self.assertEqual(lhs.truncate(min(lhs.order, rhs.order)), rhs.truncate(min(lhs.order, rhs.order)))
            self.assertTrue((a - a).isZero())
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testGeometricSeries(self):
        """1/(1-z) has every coefficient equal to one."""
        n = self.__order
        one = GSeries.one(n)
        q = one / GSeries([1, -1], order=n)
        self.assertEqual(q.valuation, 0)
        self.assertEqual(q.rationals(), [Fraction(1)] * (n + 1))
        self.assertEqual((q * GSeries([1, -1], order=n)).truncate(n).rationals(), [Fraction(1)] + [Fraction(0)] * n)

    def testLaurentQuotient(self):
        """Quotients shift the valuation and shorten the order of validity."""
        n = self.__order
        a = GSeries.fromFunction(lambda k: Fraction(1, k + 1), n, start=1)
        b = GSeries.fromFunction(lambda k: Fraction(1, math.factorial(k)), n, start=2)
        q = a / b
        self.assertEqual(q.valuation, -1)
        self.assertEqual(q.order, min(n - 2, n + 1 - 4))
        self.assertEqual(q.coeff(-1), Fraction(1))
        back = q * b
        for k in range(1, back.order + 1):
            self.assertEqual(back.coeff(k), a.coeff(k))

    def testBesselCoreSquare(self):
        """j_0 starts 1, -1, 1/4, -1/36 and j_1^2 starts 1 - z + 5 z^2/12."""
        self.assertEqual(besselJCore(0, 3).rationals(), [Fraction(1), Fraction(-1), Fraction(1, 4), Fraction(-1, 36)])
        j1 = besselJCore(1, 6)
        sq = j1 * j1
        self.assertEqual(sq.rationals()[:3], [Fraction(1), Fraction(-1), Fraction(5, 12)])

    def testBesselCoreRecurrence(self):
        """z j_nu = (nu - 1) j_{nu-1} - j_{nu-2}."""
        n = self.__order
        for nu in range(2, 6):
            lhs = besselJCore(nu, n).shift(1).truncate(n)
            rhs = (besselJCore(nu - 1, n) * (nu - 1) - besselJCore(nu - 2, n)).truncate(n)
            self.assertEqual(lhs, rhs)

    def testPiYCoreLeadingTerms(self):
        """z^(1/2) pi Y_1(2 sqrt z) starts -1 - z in its rational part."""
        s = besselPiYCore(1, 4)
        self.assertEqual(s.coeff(0), GCoeff(-1))
        self.assertEqual(s.coeff(1).c0, Fraction(-1))
        self.assertEqual(s.coeff(1).cg, Fraction(2))
        self.assertEqual(s.logCoeff(1), GCoeff(1))
        self.assertTrue(s.hasLog())
        self.assertTrue(s.hasGamma())

    def testNumericAgreement(self):
        """Truncated series agree with the floating point Bessel functions."""
        try:
            z = 0.3
            x = 2.0 * math.sqrt(z)
            for nu in range(0, 3):
                jv = besselJCore(nu, 30).evaluate(z) * z ** (nu / 2.0)
                self.assertAlmostEqual(jv, besselJ(nu, x), places=13)
                yv = besselPiYCore(nu, 30).evaluate(z) / z ** (nu / 2.0)
                self.assertAlmostEqual(yv, piBesselY(nu, x), places=11)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testErrorConditions(self):
        """Log squared, division by zero and deep poles are rejected."""
        n = self.__order
        lz = GSeries.logZ(n)
        with self.assertRaises(LogSquared):
            _ = lz * lz
        with self.assertRaises(LogSquared):
            _ = GSeries.one(n) / lz
        with self.assertRaises(DivideByZeroSeries):
            _ = GSeries.one(n) / GSeries.zero(n)
        with self.assertRaises(GammaOverflow):
            _ = GSeries.one(n) / GSeries.constant(GCoeff(1, 1), n)
        with self.assertRaises(ValidationError):
            GSeries([1], valuation=-9, order=0)
        with self.assertRaises(ValidationError):
            GSeries.one(n).coeff(n + 1)


def seriesSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(SeriesUtilTests("testRingLaws"))
    suiteSelect.addTest(SeriesUtilTests("testGeometricSeries"))
    suiteSelect.addTest(SeriesUtilTests("testLaurentQuotient"))
    suiteSelect.addTest(SeriesUtilTests("testBesselCoreRecurrence"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = seriesSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
