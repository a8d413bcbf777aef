##
# File:    testLadderSimUtil.py
# Author:  J. Westbrook
# Date:    29-Sep-2026
# Version: 0.001
#
# Update:
#  02-Oct-2026 jdw add stationary moment and chain law cases
#  18-Oct-2026 jdw run the rate, CLT and moment checks at full scale with 3 stderr bounds
#
##
"""
Tests for the ladder first-passage simulator, the shortest path oracle and the Monte Carlo checks.

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

import numpy

from rcsb.utils.fpp.FppErrors import ValidationError
from rcsb.utils.fpp.LadderSimUtil import (
    LadderSample,
    LadderSimUtil,
    chiClosedForm,
    dijkstraOracle,
    dpFirstPassage,
    firstPassageBatch,
    integralFSquared,
    sampleLadder,
)

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))


class LadderSimUtilTests(unittest.TestCase):
    def setUp(self):
        self.__simU = LadderSimUtil(chunkSize=250)
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testRecursionMatchesShortestPath(self):
        """Column recursion and Dijkstra agree on a thousand random ladders of length up to 50."""
        try:
            rng = numpy.random.default_rng(314)
            for n in [int(v) for v in rng.integers(1, 51, size=1000)] + [57, 120]:
                sample = sampleLadder(n, rng)
                ln, lnPrime, deltaL = dpFirstPassage(sample)
                self.assertAlmostEqual(ln, dijkstraOracle(sample), delta=1.0e-12)
                self.assertEqual(len(deltaL), n + 1)
                self.assertAlmostEqual(deltaL[-1], lnPrime - ln, delta=1.0e-12)
                self.assertLessEqual(abs(deltaL[-1]), float(sample.Z[-1]) + 1.0e-12)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testDegenerateLadder(self):
        sample = LadderSample(0, [], [], [0.7])
        self.assertEqual(dijkstraOracle(sample), 0.0)
        ln, lnPrime, deltaL = dpFirstPassage(sample)
        self.assertEqual((ln, lnPrime, deltaL), (0.0, 0.7, [0.7]))
        #
        with self.assertRaises(ValidationError):
            LadderSample(2, [1.0], [1.0, 1.0], [1.0, 1.0, 1.0])
        with self.assertRaises(ValidationError):
            LadderSample(1, [1.0], [-1.0], [1.0, 1.0])
        with self.assertRaises(ValidationError):
            self.__simU.runReplicates(0, 10, 1)

    def testHandComputedLadder(self):
        sample = LadderSample(2, [5.0, 1.0], [1.0, 1.0], [1.0, 1.0, 1.0])
        ln, lnPrime, _ = dpFirstPassage(sample)
        # bottom route 0 -> rung -> top rail -> rung down at column 1 -> bottom rail
        self.assertAlmostEqual(ln, 4.0, places=14)
        self.assertAlmostEqual(lnPrime, 3.0, places=14)
        self.assertAlmostEqual(dijkstraOracle(sample), 4.0, places=14)

    def testIncrementIdentity(self):
        rng = numpy.random.default_rng(5)
        self.assertLess(self.__simU.incrementIdentityResidual(sampleLadder(500, rng)), 1.0e-12)

    def testClosedFormRate(self):
        chi = chiClosedForm()
        self.assertAlmostEqual(chi, 0.68273, delta=5.0e-5)
        self.assertAlmostEqual(chi, chiClosedForm(summation="kahan"), delta=1.0e-14)
        self.assertAlmostEqual(integralFSquared() - chi * chi, 0.570, delta=5.0e-3)

    def testRateCheck(self):
        try:
            rD = self.__simU.rateCheck(2000, 5000, 11)
            logger.info("chi_hat %.5f stderr %.5f closed %.5f", rD["chi_hat"], rD["chi_stderr"], rD["chi_closed"])
            self.assertGreater(rD["chi_stderr"], 0.0)
            self.assertLessEqual(abs(rD["chi_hat"] - rD["chi_closed"]), 3.0 * rD["chi_stderr"])
            self.assertTrue(rD["within_3_stderr"])
            #
            rD = self.__simU.rateCheck(100, 0, 11)
            self.assertNotIn("chi_hat", rD)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testReplicatesIndependentOfWorkers(self):
        try:
            serial = LadderSimUtil(threads=1, chunkSize=100).runReplicates(50, 450, 2026)
            pooled = LadderSimUtil(threads=3, chunkSize=100).runReplicates(50, 450, 2026)
            self.assertEqual(len(serial.values), 450)
            self.assertTrue(numpy.array_equal(serial.values, pooled.values))
            self.assertGreater(serial.stderr, 0.0)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testBatchAgreesWithRecursion(self):
        rng = numpy.random.default_rng(8)
        lnA = firstPassageBatch(200, 300, rng)
        self.assertEqual(lnA.shape, (300,))
        self.assertTrue(numpy.all(lnA > 0.0))
        self.assertAlmostEqual(float(numpy.mean(lnA)) / 200.0, chiClosedForm(), delta=0.03)

    def testCentralLimit(self):
        try:
            rD = self.__simU.cltCheck(2000, 5000, 99)
            self.assertEqual(len(rD["samples"]), 5000)
            self.assertGreater(rD["sigma2_hat"], 0.1)
            self.assertLess(rD["sigma2_hat"], 2.0)
            self.assertGreater(rD["sigma2_stderr"], 0.0)
            self.assertGreaterEqual(rD["p_value"], 0.01)
            self.assertLessEqual(abs(rD["mean_standardized"]), 3.0 * rD["mean_stderr"])
            self.assertTrue(rD["mean_within_3_stderr"])
            self.assertLess(abs(rD["skewness"]), 0.3)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testStationaryMoments(self):
        rD = self.__simU.stationaryMoments(10**6, 4242)
        self.assertLessEqual(abs(rD["f"] - rD["chi_closed"]), 3.0 * rD["f_stderr"])
        self.assertLessEqual(abs(rD["f2"] - rD["f2_closed"]), 3.0 * rD["f2_stderr"])

    def testSigma2Stability(self):
        """The variance estimate does not drift as the ladder length doubles."""
        try:
            rD = self.__simU.sigma2Stability([1000, 2000, 4000], 5000, 17)
            self.assertEqual([row["n"] for row in rD["rows"]], [1000, 2000, 4000])
            self.assertEqual([row["seed"] for row in rD["rows"]], [17, 18, 19])
            for r1 in rD["rows"]:
                for r2 in rD["rows"]:
                    self.assertLessEqual(abs(r1["sigma2_hat"] - r2["sigma2_hat"]), 3.0 * math.hypot(r1["sigma2_stderr"], r2["sigma2_stderr"]))
            self.assertTrue(rD["stable"])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testDeltaChainLaw(self):
        try:
            ksLadder = self.__simU.deltaChainLaw(50000, 100, 7, method="ladder")
            ksKernel = self.__simU.deltaChainLaw(20000, 100, 7, method="kernel")
            logger.info("Chain law KS ladder %.4f kernel %.4f", ksLadder, ksKernel)
            self.assertLess(ksLadder, 0.03)
            self.assertLess(ksKernel, 0.04)
            with self.assertRaises(ValidationError):
                self.__simU.deltaChainLaw(10, 1, 7, method="bogus")
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testStderrScaling(self):
        run = self.__simU.runReplicates(20, 1000, 3)
        self.assertAlmostEqual(run.stderr, math.sqrt(run.variance / 1000.0), places=12)
        self.assertAlmostEqual(run.mean, float(numpy.mean(run.values)), places=12)


def ladderSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(LadderSimUtilTests("testRecursionMatchesShortestPath"))
    suiteSelect.addTest(LadderSimUtilTests("testRateCheck"))
    suiteSelect.addTest(LadderSimUtilTests("testReplicatesIndependentOfWorkers"))
    suiteSelect.addTest(LadderSimUtilTests("testCentralLimit"))
    return suiteSelect


def ladderAcceptanceSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(LadderSimUtilTests("testRateCheck"))
    suiteSelect.addTest(LadderSimUtilTests("testCentralLimit"))
    suiteSelect.addTest(LadderSimUtilTests("testSigma2Stability"))
    suiteSelect.addTest(LadderSimUtilTests("testStationaryMoments"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = ladderSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
