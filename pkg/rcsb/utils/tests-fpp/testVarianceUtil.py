##
# File:    testVarianceUtil.py
# Author:  J. Westbrook
# Date:    04-Oct-2026
# Version: 0.001
#
# Update:
#  08-Oct-2026 jdw add kernel series and cross-method agreement cases
#
##
"""
Tests for the asymptotic variance estimators.

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
import scipy.signal

from rcsb.utils.fpp.FppErrors import ValidationError
from rcsb.utils.fpp.LadderSimUtil import LadderSimUtil, chiClosedForm, integralFSquared
from rcsb.utils.fpp.VarianceUtil import (
    VarianceUtil,
    batchMeansEstimate,
    conditionalMean,
    conditionalMeanQuadrature,
    overlappingBatchMeansEstimate,
    uFunction,
)

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))


class VarianceUtilTests(unittest.TestCase):
    vU = None
    simEstimate = None

    @classmethod
    def setUpClass(cls):
        cls.vU = VarianceUtil()
        cls.simEstimate = cls.vU.sigma2Simulation(10**6, 1000, 21)

    def setUp(self):
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testConditionalMean(self):
        """Closed form conditional increment mean against direct quadrature."""
        try:
            for r in [-2.0, 0.0, 1.0]:
                self.assertAlmostEqual(conditionalMean(r), conditionalMeanQuadrature(r), delta=1.0e-8)
            self.assertAlmostEqual(conditionalMean(0.0), 0.75, places=15)
            self.assertAlmostEqual(conditionalMean(40.0), 1.0, places=12)
            vA = conditionalMean(numpy.array([-1.0e-9, 1.0e-9]))
            self.assertAlmostEqual(vA[0], vA[1], places=8)
            self.assertAlmostEqual(uFunction(0.0), 0.75 - chiClosedForm(), places=14)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testBatchMeansOnAutoregression(self):
        rng = numpy.random.default_rng(77)
        phi = 0.5
        wA = scipy.signal.lfilter([1.0], [1.0, -phi], rng.standard_normal(400000))
        bm = float(batchMeansEstimate(wA, 2000)[0])
        obm = float(overlappingBatchMeansEstimate(wA, 2000)[0])
        logger.info("AR(1) long-run variance BM %.4f OBM %.4f (exact 4)", bm, obm)
        self.assertAlmostEqual(bm, 4.0, delta=4.0 * 4.0 * math.sqrt(2.0 / 199.0))
        self.assertAlmostEqual(obm, 4.0, delta=4.0 * 4.0 * math.sqrt(4.0 * 2000.0 / (3.0 * 400000.0)))
        with self.assertRaises(ValidationError):
            batchMeansEstimate(wA[:3000], 2000)

    def testSimulationEstimate(self):
        try:
            est, se = self.simEstimate
            logger.info("Simulation sigma2 %.5f +/- %.5f", est, se)
            self.assertGreater(est, 0.0)
            self.assertLess(se / est, 0.06)
            #
            est2, se2 = self.vU.sigma2Simulation(2 * 10**6, 1000, 22)
            self.assertGreaterEqual(se2 / se, 0.6)
            self.assertLessEqual(se2 / se, 0.85)
            #
            estB, seB = self.vU.sigma2Simulation(10**6, 1000, 21, batchSize=10**4)
            self.assertLessEqual(abs(estB - est), 3.0 * math.hypot(se, seB))
            #
            with self.assertRaises(ValidationError):
                self.vU.sigma2Simulation(1000, 10, 21)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testSimulationReport(self):
        rD = VarianceUtil(minSteps=10**5, chains=8).sigma2SimulationReport(2 * 10**5, 500, 3, batchSize=500)
        self.assertEqual(rD["chains"], 8)
        self.assertAlmostEqual(rD["chi_hat"], chiClosedForm(), delta=0.01)
        self.assertLessEqual(abs(rD["sigma2_obm"] - rD["sigma2_bm"]), 3.0 * math.hypot(rD["sigma2_bm_stderr"], rD["sigma2_obm_stderr"]))
        self.assertGreater(rD["sigma2_bm_chain_stderr"], 0.0)

    def testAgreesWithCentralLimitSample(self):
        est, se = self.simEstimate
        rD = LadderSimUtil().cltCheck(400, 2000, 99)
        self.assertLessEqual(abs(rD["sigma2_hat"] - est), 3.0 * math.hypot(se, rD["sigma2_stderr"]))

    def testKernelSeries(self):
        try:
            report = self.vU.sigma2Kernel(8, mcOuter=100000, seed=5)
            logger.info("Kernel sigma2 %.5f +/- %.5f terms %r", report.sigma2Kernel, report.sigma2KernelStderr, report.terms)
            chi = chiClosedForm()
            self.assertAlmostEqual(report.terms[0], integralFSquared() - chi * chi, delta=1.0e-10)
            self.assertEqual(len(report.terms), 9)
            self.assertTrue(report.geometricDecay)
            self.assertGreater(report.sigma2Kernel, 0.0)
            self.assertGreaterEqual(report.tailBound, 0.0)
            #
            report.setSimulation(*self.simEstimate)
            self.assertTrue(report.agreement())
            rD = report.toDict()
            self.assertEqual(rD["n_max"], 8)
            self.assertEqual(len(report.termRows()), 9)
            #
            with self.assertRaises(ValidationError):
                self.vU.sigma2Kernel(2)
            with self.assertRaises(ValidationError):
                self.vU.sigma2Kernel(11)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testFirstConditionalGrid(self):
        """A Markov kernel does not increase the sup norm of the conditional mean."""
        gridA, valA = self.vU.conditionalExpectationGrid(1)
        self.assertEqual(len(gridA), len(valA))
        g0A, u0A = self.vU.conditionalExpectationGrid(0)
        self.assertTrue(numpy.allclose(u0A, uFunction(g0A)))
        self.assertLess(float(numpy.max(numpy.abs(valA))), float(numpy.max(numpy.abs(u0A))) + 1.0e-12)


def varianceSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(VarianceUtilTests("testConditionalMean"))
    suiteSelect.addTest(VarianceUtilTests("testSimulationEstimate"))
    suiteSelect.addTest(VarianceUtilTests("testKernelSeries"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = varianceSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
