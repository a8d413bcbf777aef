##
# File:    testGenFunUtil.py
# Author:  J. Westbrook
# Date:    17-Sep-2026
# Version: 0.001
#
# Update:
#  22-Sep-2026 jdw add the four-step golden tables and the support checks
#  18-Oct-2026 jdw support checks through level 12 and vanishing boundary cells
#
##
"""
Tests for the exact generating functions and the coefficient tables extracted from them.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import os
import time
import unittest
from fractions import Fraction as Fr

from rcsb.utils.fpp.FppErrors import TableLevelMismatch, ValidationError
from rcsb.utils.fpp.GenFunUtil import CoeffTables, GenFunUtil
from rcsb.utils.fpp.SeriesUtil import harmonic, rfact
from rcsb.utils.fpp.SpecFunUtil import namedValue

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

# four-step tables, columns q = 0..3
GOLDEN_A4 = [
    [Fr(115, 96), Fr(-17, 36), Fr(1, 24), Fr(0)],
    [Fr(11, 36), Fr(-11, 36), Fr(1, 12), Fr(-1, 144)],
    [Fr(-11, 108), Fr(1, 12), Fr(-1, 72), Fr(0)],
    [Fr(1, 72), Fr(-1, 144), Fr(0), Fr(0)],
    [Fr(-1, 1440), Fr(0), Fr(0), Fr(0)],
]
GOLDEN_B4 = [
    [Fr(721, 432), Fr(-13, 12), Fr(1, 12), Fr(0)],
    [Fr(-241, 540), Fr(17, 48), Fr(1, 36), Fr(0)],
    [Fr(3, 16), Fr(1, 36), Fr(0), Fr(0)],
    [Fr(1, 216), Fr(0), Fr(0), Fr(0)],
    [Fr(0), Fr(0), Fr(0), Fr(0)],
]
GOLDEN_C4 = [
    [Fr(721, 432), Fr(-13, 12), Fr(5, 18), Fr(0)],
    [Fr(-241, 540), Fr(17, 48), Fr(1, 36), Fr(0)],
    [Fr(-1, 144), Fr(1, 36), Fr(0), Fr(0)],
    [Fr(1, 216), Fr(0), Fr(0), Fr(0)],
    [Fr(0), Fr(0), Fr(0), Fr(0)],
]


class GenFunUtilTests(unittest.TestCase):
    def setUp(self):
        self.__gfU = GenFunUtil()
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testNamedSeries(self):
        """Leading coefficients of the named generating functions."""
        try:
            N = 5
            self.assertEqual(self.__gfU.buildNamed("S1", N).series.rationals()[:4], [Fr(0), Fr(1, 3), Fr(-1, 24), Fr(1, 360)])
            self.assertEqual(self.__gfU.buildNamed("alpha", N).series.rationals()[:5], [Fr(0), Fr(1), Fr(1), Fr(11, 18), Fr(11, 36)])
            self.assertEqual(self.__gfU.buildNamed("G", N).series.rationals()[:5], [Fr(0), Fr(1), Fr(4, 3), Fr(-7, 72), Fr(-19, 135)])
            self.assertEqual(self.__gfU.buildNamed("H", N).series.rationals()[:6], [Fr(0), Fr(0), Fr(1), Fr(2), Fr(15, 8), Fr(103, 54)])
            self.assertEqual(self.__gfU.dCoefficients(N)[:4], [Fr(1), Fr(-5, 4), Fr(5, 18), Fr(-47, 1728)])
            for name in ["S1", "S2", "G", "alpha", "H", "D", "F", "T"]:
                ns = self.__gfU.buildNamed(name, N)
                self.assertEqual(ns.name, name)
                self.assertTrue(ns.series.isPurelyRational())
                self.assertEqual(ns.series.order, N)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testDClosedForm(self):
        """d_q = (-1)^q (H_q + H_{q+1}) / (q! (q+1)!) agrees with the series for small q."""
        dL = self.__gfU.dCoefficients(8)
        for q, dq in enumerate(dL):
            self.assertEqual(dq, Fr((-1) ** q, rfact(q)) * (harmonic(q) + harmonic(q + 1)))

    def testNumericAgreement(self):
        """Truncated named series approach the Bessel closed forms at small z."""
        z = 0.05
        for name in ["S1", "S2", "G", "alpha", "H", "D"]:
            sv = self.__gfU.buildNamed(name, 16).series.evaluate(z)
            self.assertAlmostEqual(sv, namedValue(name, z), delta=1.0e-11, msg=name)

    def testFamilyLeadingTerms(self):
        """A_{1,0} starts with z and every other member starts at z^2 or later."""
        N = 4
        self.assertEqual(self.__gfU.buildA(1, 0, N).rational(1), Fr(1))
        for p in range(0, 4):
            for q in range(0, 3):
                for fn in [self.__gfU.buildA, self.__gfU.buildB, self.__gfU.buildC]:
                    s = fn(p, q, N)
                    self.assertGreaterEqual(s.valuation, 1)
                    if (p, q) != (1, 0) or fn != self.__gfU.buildA:
                        self.assertEqual(s.rational(1), 0)
        self.assertEqual(self.__gfU.buildA(0, 0, N).rational(4), Fr(115, 96))
        self.assertEqual(self.__gfU.buildA(4, 0, N).rational(4), Fr(-1, 1440))
        self.assertEqual(self.__gfU.buildA(1, 3, N).rational(4), Fr(-1, 144))
        self.assertEqual(self.__gfU.buildB(0, 0, N).rational(4), Fr(721, 432))
        self.assertEqual(self.__gfU.buildB(2, 0, N).rational(4), Fr(3, 16))
        self.assertEqual(self.__gfU.buildC(2, 0, N).rational(4), Fr(-1, 144))
        self.assertEqual(self.__gfU.buildC(0, 2, N).rational(4), Fr(5, 18))

    def testLevelOneAndTwo(self):
        t1 = self.__gfU.coeffTables(1)
        self.assertEqual(t1.a, [[Fr(0), Fr(0)], [Fr(1), Fr(0)]])
        self.assertEqual(t1.b, [[Fr(0)] * 2] * 2)
        self.assertEqual(t1.c, [[Fr(0)] * 2] * 2)
        t2 = self.__gfU.coeffTables(2)
        self.assertEqual(t2.a[0][0], Fr(1, 2))
        self.assertEqual(t2.a[1][0], Fr(1))
        self.assertEqual(t2.a[1][1], Fr(-1, 2))
        self.assertEqual(t2.a[2][0], Fr(-1, 6))
        self.assertEqual((t2.b[0][0], t2.b[1][0], t2.c[0][0], t2.c[1][0]), (Fr(1), Fr(1, 3), Fr(1), Fr(1, 3)))

    def testFourStepTables(self):
        """Four-step tables against the printed values (two cells of table a carry corrected signs and numerators)."""
        try:
            t4 = self.__gfU.coeffTables(4)
            for p in range(5):
                for q in range(4):
                    self.assertEqual(t4.a[p][q], GOLDEN_A4[p][q], msg="a(%d,%d)" % (p, q))
                    self.assertEqual(t4.b[p][q], GOLDEN_B4[p][q], msg="b(%d,%d)" % (p, q))
                    self.assertEqual(t4.c[p][q], GOLDEN_C4[p][q], msg="c(%d,%d)" % (p, q))
            self.assertEqual(t4.supportViolations(), [])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testSupport(self):
        for n in range(1, 13):
            self.assertEqual(self.__gfU.coeffTables(n).supportViolations(), [], msg="n = %d" % n)

    def testBoundaryCellsVanish(self):
        """Cells with p or q equal to n + 1 carry no mass at level n."""
        for n in range(1, 6):
            N = max(n + 1, 3)
            for fn in [self.__gfU.buildA, self.__gfU.buildB, self.__gfU.buildC]:
                for k in range(n + 2):
                    self.assertEqual(fn(n + 1, k, N).rational(n), 0, msg="%s n = %d p = %d q = %d" % (fn.__name__, n, n + 1, k))
                    self.assertEqual(fn(k, n + 1, N).rational(n), 0, msg="%s n = %d p = %d q = %d" % (fn.__name__, n, k, n + 1))

    def testRelationResidues(self):
        """Both relation lemmas hold exactly as series identities."""
        for name in ["Rel1", "Rel2"]:
            self.assertEqual(self.__gfU.relationResidue(name, 10), 0, msg=name)
        with self.assertRaises(ValidationError):
            self.__gfU.relationResidue("Rel3", 10)

    def testTableExport(self):
        t3 = self.__gfU.coeffTables(3)
        rowL = t3.toRows()
        self.assertEqual(len(rowL), 3 * 16 + 4)
        self.assertEqual(rowL[0], {"table": "a", "n": 3, "p": 0, "q": 0, "value": "17/18"})
        self.assertEqual(CoeffTables.fromRows(rowL), t3)
        self.assertEqual(CoeffTables.fromDict(t3.toDict()), t3)
        self.assertEqual(t3.maxAbsDiff(t3), 0)
        with self.assertRaises(TableLevelMismatch):
            t3.diffCells(self.__gfU.coeffTables(2))

    def testBadArguments(self):
        with self.assertRaises(ValidationError):
            self.__gfU.buildNamed("S1", 2)
        with self.assertRaises(ValidationError):
            self.__gfU.buildNamed("Q", 5)
        with self.assertRaises(ValidationError):
            self.__gfU.coeffTables(0)


def genFunSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(GenFunUtilTests("testNamedSeries"))
    suiteSelect.addTest(GenFunUtilTests("testFourStepTables"))
    suiteSelect.addTest(GenFunUtilTests("testRelationResidues"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = genFunSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
