##
# File:    testSpecFunUtil.py
# Author:  J. Westbrook
# Date:    15-Sep-2026
# Version: 0.001
#
# Update:
#  19-Sep-2026 jdw add the identity catalogue grid
#  18-Oct-2026 jdw first relation compared undivided; parameter derivative at b = 0 checked on its own
#
##
"""
Tests for series based special functions and the summation identity catalogue.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import os
import time
import unittest

import mpmath
import scipy.special

from rcsb.utils.fpp.FppErrors import DomainError, UnknownIdentity, ValidationError
from rcsb.utils.fpp.SpecFunUtil import (
    IDENTITY_NAMES,
    SpecFunUtil,
    besselJ,
    besselJArray,
    besselY,
    d0F1TildeDb,
    d0F1TildeDbMinusOne,
    hyp2f3,
    kahanSum,
    namedValue,
)

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))


class SpecFunUtilTests(unittest.TestCase):
    def setUp(self):
        self.__zL = [0.25, 0.5, 1.0, 1.5, 2.0]
        self.__zetaL = [0.25, 0.5, 1.0, 1.5, 2.0]
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testBesselReferenceValues(self):
        """Bessel J and Y at x = 2 against tabulated values and scipy."""
        self.assertAlmostEqual(besselJ(0, 2.0), 0.22389077914123567, places=14)
        self.assertAlmostEqual(besselJ(1, 2.0), 0.5767248077568734, places=14)
        self.assertAlmostEqual(besselJ(2, 2.0), 0.3528340286156377, places=14)
        self.assertAlmostEqual(besselJ(1, 2.0, summation="kahan"), besselJ(1, 2.0, summation="fsum"), places=15)
        self.assertAlmostEqual(besselJ(2, 2.0, summation="plain"), besselJ(2, 2.0), places=14)
        for nu in range(0, 4):
            for x in [0.1, 0.7, 1.5, 2.0, 3.2, 4.0]:
                self.assertAlmostEqual(besselJ(nu, x), float(scipy.special.jv(nu, x)), places=13)
                self.assertAlmostEqual(besselY(nu, x), float(scipy.special.yv(nu, x)), delta=1.0e-11 * max(1.0, abs(scipy.special.yv(nu, x))))
        self.assertAlmostEqual(besselY(0, 2.0), 0.5103756726497451, places=12)
        self.assertAlmostEqual(float(besselJArray(1, [2.0])[0]), besselJ(1, 2.0), places=14)

    def testBesselDomain(self):
        with self.assertRaises(DomainError):
            besselY(0, 0.0)
        with self.assertRaises(DomainError):
            besselY(1, -1.0)
        with self.assertRaises(ValidationError):
            besselJ(0, 1.0, summation="bogus")

    def testCompensatedSum(self):
        self.assertEqual(kahanSum([1.0, 1.0e100, 1.0, -1.0e100]), 2.0)

    def testHypergeometric(self):
        """2F3({1,1},{2,2,2};x) against mpmath."""
        self.assertEqual(hyp2f3(0.0), 1.0)
        for x in [-4.0, -1.0, 0.5, 3.0]:
            self.assertAlmostEqual(hyp2f3(x), float(mpmath.hyper([1, 1], [2, 2, 2], x)), places=13)
        with self.assertRaises(DomainError):
            hyp2f3(20.0)

    def testParameterDerivative(self):
        """Closed forms of the b-derivative of the regularized 0F1 against central differences."""
        try:
            sfU = SpecFunUtil()
            for z in [0.25, 0.5, 1.0, 2.0, 3.0]:
                for nu in [-3, -2, -1, 1, 2, 3]:
                    fd = sfU.finiteDifferenceDb(nu, z)
                    self.assertAlmostEqual(d0F1TildeDb(nu, z), fd, delta=1.0e-7)
                self.assertAlmostEqual(d0F1TildeDbMinusOne(z), d0F1TildeDb(-1, z), places=10)
            with self.assertRaises(DomainError):
                d0F1TildeDb(9, 1.0)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testParameterDerivativeAtZero(self):
        """At b = 0 the m = 0 form matches central differences and tends to 1 as z -> 0."""
        try:
            sfU = SpecFunUtil()
            for z in [0.25, 0.5, 1.0, 2.0, 3.0]:
                self.assertAlmostEqual(d0F1TildeDb(0, z), sfU.finiteDifferenceDb(0, z), delta=1.0e-7)
            self.assertAlmostEqual(d0F1TildeDb(0, 1.0e-8), 1.0, delta=1.0e-6)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testFirstRelationSides(self):
        """The S, G, alpha and H combination equals -3 z^2 / 4 on both sides of its pole at z = 1."""
        try:
            sfU = SpecFunUtil()
            for z in [0.25, 0.5, 0.7, 1.5, 2.0]:
                self.assertAlmostEqual(sfU.rawSum("Rel1", z), -0.75 * z * z, places=15)
                self.assertAlmostEqual(sfU.closedForm("Rel1", z), -0.75 * z * z, delta=1.0e-10)
            self.assertLessEqual(sfU.residual("Rel1", 0.7), 1.0e-10)
            with self.assertRaises(DomainError):
                sfU.closedForm("Rel1", 1.0)
            rowL = sfU.identityReport(zL=[0.5, 1.0], nameL=["Rel1", "Rel2"])
            self.assertEqual([(row["name"], row["z"]) for row in rowL], [("Rel1", 0.5), ("Rel2", 0.5), ("Rel2", 1.0)])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testIdentityGrid(self):
        """Every identity holds to 1e-10 over the argument grid at 40 terms."""
        try:
            sfU = SpecFunUtil()
            rowL = sfU.identityReport(zL=self.__zL, zetaL=self.__zetaL, numTerms=40)
            self.assertEqual(len(set(row["name"] for row in rowL)), len(IDENTITY_NAMES))
            for row in rowL:
                logger.debug("%-9s z %.2f zeta %.2f residual %.3e", row["name"], row["z"], row["zeta"], row["residual"])
                self.assertLessEqual(row["residual"], 1.0e-10, msg=str(row))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testUnknownIdentity(self):
        sfU = SpecFunUtil()
        with self.assertRaises(UnknownIdentity):
            sfU.closedForm("S9", 1.0)
        with self.assertRaises(UnknownIdentity):
            sfU.rawSum("Sigma7", 1.0)
        with self.assertRaises(UnknownIdentity):
            namedValue("Q", 1.0)

    def testNamedValues(self):
        """Named generating functions are finite and S1 is near z/3 for small z."""
        z = 1.0e-3
        self.assertAlmostEqual(namedValue("S1", z), z / 3.0, delta=1.0e-6)
        self.assertAlmostEqual(namedValue("alpha", z), z, delta=2.0e-6)
        self.assertAlmostEqual(namedValue("G", z), z, delta=2.0e-6)


def specFunSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(SpecFunUtilTests("testBesselReferenceValues"))
    suiteSelect.addTest(SpecFunUtilTests("testHypergeometric"))
    suiteSelect.addTest(SpecFunUtilTests("testParameterDerivative"))
    suiteSelect.addTest(SpecFunUtilTests("testParameterDerivativeAtZero"))
    suiteSelect.addTest(SpecFunUtilTests("testFirstRelationSides"))
    suiteSelect.addTest(SpecFunUtilTests("testIdentityGrid"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = specFunSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
