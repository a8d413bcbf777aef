##
# File:    testRecurrenceUtil.py
# Author:  J. Westbrook
# Date:    18-Sep-2026
# Version: 0.001
#
# Update:
#  22-Sep-2026 jdw add the d relation and engine equivalence through level 12
#  18-Oct-2026 jdw compare every level with the generating function tables
#
##
"""
Tests for the recursive computation of the kernel coefficient tables.

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

from rcsb.utils.fpp.FppErrors import BetaMismatch
from rcsb.utils.fpp.GenFunUtil import GenFunUtil
from rcsb.utils.fpp.RecurrenceUtil import RecState, RecurrenceUtil

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))


class RecurrenceUtilTests(unittest.TestCase):
    def setUp(self):
        self.__gfU = GenFunUtil()
        self.__recU = RecurrenceUtil(genFunUtil=self.__gfU)
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testInitialState(self):
        st = self.__recU.recurInit()
        self.assertEqual(st.n, 1)
        self.assertEqual(st.tables.a[1][0], 1)
        self.assertEqual(st.tables.b[0][0], 0)
        self.assertTrue(all(v == 0 for row in st.tables.c for v in row))
        self.assertEqual(self.__recU.verifyBetaRelation(st), 0)

    def testThreeStepTables(self):
        """Level three from two steps of the recursion."""
        t3 = self.__recU.recurTables(3)
        expA = {(0, 0): Fr(17, 18), (0, 1): Fr(-1, 4), (1, 0): Fr(11, 18), (1, 1): Fr(-1, 2), (1, 2): Fr(1, 12), (2, 0): Fr(-1, 6), (2, 1): Fr(1, 12), (3, 0): Fr(1, 72)}
        expB = {(0, 0): Fr(13, 6), (0, 1): Fr(-1, 2), (1, 0): Fr(-17, 24), (1, 1): Fr(-1, 6), (2, 0): Fr(-1, 18)}
        expC = {(0, 0): Fr(13, 6), (0, 1): Fr(-5, 4), (1, 0): Fr(1, 24), (1, 1): Fr(-1, 6), (2, 0): Fr(-1, 18)}
        for p in range(4):
            for q in range(4):
                self.assertEqual(t3.a[p][q], expA.get((p, q), 0), msg="a(%d,%d)" % (p, q))
                self.assertEqual(t3.b[p][q], expB.get((p, q), 0), msg="b(%d,%d)" % (p, q))
                self.assertEqual(t3.c[p][q], expC.get((p, q), 0), msg="c(%d,%d)" % (p, q))

    def testFourStepTables(self):
        t4 = self.__recU.recurTables(4)
        self.assertEqual(t4.a[0][0], Fr(115, 96))
        self.assertEqual(t4.a[1][1], Fr(-11, 36))
        self.assertEqual(t4.a[3][1], Fr(-1, 144))
        self.assertEqual(t4.b[1][0], Fr(-241, 540))
        self.assertEqual(t4.b[2][0], Fr(3, 16))
        self.assertEqual(t4.c[2][0], Fr(-1, 144))
        self.assertEqual(t4.c[0][2], Fr(5, 18))

    def testEngineEquivalence(self):
        """Recursive and generating function tables agree exactly."""
        try:
            st = self.__recU.recurInit()
            for n in range(1, 13):
                if n > 1:
                    st = self.__recU.recurStep(st)
                diffL = self.__recU.diffReport(st.tables, self.__gfU.coeffTables(n))
                self.assertEqual(diffL, [], msg="n = %d" % n)
                self.assertEqual(self.__recU.verifyBetaRelation(st), 0, msg="n = %d" % n)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testDRelation(self):
        st = self.__recU.recurInit()
        for n in range(1, 11):
            if n > 1:
                st = self.__recU.recurStep(st)
            self.assertEqual(self.__recU.verifyDRelation(st), 0, msg="n = %d" % n)

    def testBetaMismatch(self):
        """A corrupted b table is caught by the beta identity."""
        st = self.__recU.recurStep(self.__recU.recurInit())
        st.tables.b[0][0] += 1
        with self.assertRaises(BetaMismatch):
            self.__recU.recurStep(RecState(2, st.tables))
        self.assertNotEqual(self.__recU.verifyBetaRelation(st), 0)

    def testDiffReport(self):
        t2 = self.__recU.recurTables(2)
        ref = self.__gfU.coeffTables(2)
        ref.c[1][0] = Fr(1, 5)
        rowL = self.__recU.diffReport(t2, ref)
        self.assertEqual(rowL, [{"table": "c", "n": 2, "p": 1, "q": 0, "left": "1/3", "right": "1/5"}])


def recurrenceSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(RecurrenceUtilTests("testThreeStepTables"))
    suiteSelect.addTest(RecurrenceUtilTests("testEngineEquivalence"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = recurrenceSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
