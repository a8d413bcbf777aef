##
# File:    testKernelUtil.py
# Author:  J. Westbrook
# Date:    24-Sep-2026
# Version: 0.001
#
# Update:
#  27-Sep-2026 jdw add sampler and drift cases
#
##
"""
Tests for transition kernel evaluation, exact samplers and quadrature consistency checks.

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
import scipy.stats

from rcsb.utils.fpp.FppErrors import DiracEvaluation, TableLevelMismatch, ValidationError
from rcsb.utils.fpp.KernelUtil import (
    KernelUtil,
    Quadrature,
    deltaStepSample,
    driftMargin,
    k1,
    k1Cdf,
    lyapunovDrift,
    piCdf,
    piDensity,
    piSample,
)
from rcsb.utils.fpp.SpecFunUtil import besselJ

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))


class KernelUtilTests(unittest.TestCase):
    kU = None

    @classmethod
    def setUpClass(cls):
        cls.kU = KernelUtil()

    def setUp(self):
        self.__quad = Quadrature()
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testOneStepKernel(self):
        self.assertAlmostEqual(k1(-1.0, -0.5), math.exp(-0.5), places=15)
        self.assertAlmostEqual(k1(0.0, 1.0), math.exp(-2.0), places=15)
        for rp in [-2.0, 0.0, 3.0]:
            total = self.__quad.integrate(lambda rA, rp=rp: k1(rp, rA), breakpoints=(0.0, rp, 0.5 * rp))
            self.assertAlmostEqual(total, 1.0, delta=1.0e-10)
        self.assertAlmostEqual(k1Cdf(1.0, 40.0), 1.0, places=12)
        self.assertAlmostEqual(k1Cdf(-1.0, -40.0), 0.0, places=12)
        self.assertAlmostEqual(k1Cdf(1.0, 0.5) - k1Cdf(1.0, 0.0), 1.0 - math.exp(-0.5), places=14)

    def testLevelOneKernel(self):
        """The tabulated one-step kernel reproduces k1 off the case boundaries."""
        gridA = numpy.linspace(-4.0, 4.0, 41) + 0.013
        rp, rr = numpy.meshgrid(gridA, gridA - 0.0071)
        dev = numpy.max(numpy.abs(self.kU.kn(1, rp, rr) - k1(rp, rr)))
        self.assertLessEqual(dev, 1.0e-12)

    def testNStepKernel(self):
        try:
            self.assertLessEqual(self.kU.normalizationResidual(4, 1.3), 1.0e-8)
            self.assertEqual(self.kU.kn(4, -0.7, 0.2), self.kU.kn(4, 0.7, -0.2))
            for n in range(1, 7):
                for rp in [-3.0, -1.0, 0.0, 1.0, 3.0]:
                    self.assertLessEqual(self.kU.normalizationResidual(n, rp), 1.0e-8, msg="n %d rp %.1f" % (n, rp))
            self.assertLessEqual(self.__quad.tailMass(lambda rA: self.kU.kn(4, 1.3, rA)), 1.0e-12)
            with self.assertRaises(TableLevelMismatch):
                self.kU.kn(3, 0.1, 0.2, tables=self.kU.tables(2))
            with self.assertRaises(DiracEvaluation):
                self.kU.density(0).evaluate(0.1, 0.2)
            self.assertTrue(self.kU.density(0).isDirac())
            self.assertAlmostEqual(self.kU.density(2).evaluate(0.4, 0.9), self.kU.kn(2, 0.4, 0.9), places=15)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testOracleReport(self):
        """Normalization, symmetry, Chapman-Kolmogorov and stationarity through five steps."""
        try:
            self.assertLessEqual(self.kU.ckResidual(2, 0.5, 0.25), 1.0e-6)
            rD = self.kU.oracleReport(nMax=5, gridSize=9, extent=3.0)
            logger.info("Kernel oracle residuals %r", rD)
            self.assertLessEqual(rD["normalization"], 1.0e-8)
            self.assertLessEqual(rD["symmetry"], 1.0e-12)
            self.assertLessEqual(rD["chapman_kolmogorov"], 1.0e-6)
            self.assertLessEqual(rD["stationarity"], 1.0e-7)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testStationaryDensity(self):
        self.assertAlmostEqual(piDensity(0.0), besselJ(1, 2.0) / (2.0 * besselJ(2, 2.0)), places=14)
        for r in [0.3, 1.7, 4.2]:
            self.assertEqual(piDensity(r), piDensity(-r))
            h = 1.0e-5
            self.assertAlmostEqual((piCdf(r + h) - piCdf(r - h)) / (2.0 * h), piDensity(r), delta=1.0e-8)
        self.assertAlmostEqual(self.__quad.integrate(piDensity, breakpoints=(0.0,)), 1.0, delta=1.0e-10)
        self.assertEqual(piCdf(0.0), 0.5)

    def testLiftedKernel(self):
        x, y, z = 0.4, 0.9, 1.3
        for r in [-1.2, 0.35, 2.0]:
            val = self.kU.knLifted(2, (0.0, 1.0, 1.0, 1.0), (r, x, y, z))
            self.assertAlmostEqual(val, math.exp(-(x + y + z)) * k1(0.0, r), places=14)
        val = self.kU.knLifted(4, (0.6, 0.2, 1.1, 0.5), (0.8, x, y, z))
        inner = min(0.6 + 1.1, 0.2 + 0.5) - min(0.6 + 1.1 + 0.5, 0.2)
        self.assertAlmostEqual(val, math.exp(-(x + y + z)) * self.kU.kn(3, inner, 0.8), places=14)
        with self.assertRaises(DiracEvaluation):
            self.kU.knLifted(1, (0.0, 1.0, 1.0, 1.0), (0.0, x, y, z))
        with self.assertRaises(ValidationError):
            self.kU.knLifted(2, (0.0, 1.0, 1.0, 1.0), (0.0, -1.0, y, z))
        rng = numpy.random.default_rng(20260927)
        self.assertLessEqual(self.kU.liftedStationarityCheck(100000, rng), 0.02)

    def testSamplers(self):
        """Exact samplers pass KS tests at the 1% level."""
        rng = numpy.random.default_rng(17)
        draws = deltaStepSample(numpy.full(200000, 1.0), rng)
        self.assertGreater(scipy.stats.kstest(draws, lambda x: k1Cdf(1.0, x)).pvalue, 0.01)
        draws = deltaStepSample(numpy.full(200000, -0.8), rng)
        self.assertGreater(scipy.stats.kstest(draws, lambda x: k1Cdf(-0.8, x)).pvalue, 0.01)
        draws = deltaStepSample(numpy.zeros(100000), rng)
        self.assertGreater(scipy.stats.kstest(draws, scipy.stats.laplace(scale=0.5).cdf).pvalue, 0.01)
        draws = piSample(200000, rng)
        self.assertEqual(len(draws), 200000)
        self.assertGreater(scipy.stats.kstest(draws, piCdf).pvalue, 0.01)
        self.assertIsInstance(deltaStepSample(0.5, rng), float)

    def testDrift(self):
        gridA = numpy.linspace(-8.0, 8.0, 33) + 0.011
        for r in gridA:
            self.assertAlmostEqual(self.kU.driftQuadrature(float(r)), lyapunovDrift(float(r)), delta=1.0e-10)
        self.assertAlmostEqual(lyapunovDrift(30.0), 0.5, delta=1.0e-6)
        self.assertLessEqual(float(numpy.max(lyapunovDrift(numpy.linspace(-30, 30, 6001)))), 0.5)
        wide = numpy.concatenate([numpy.linspace(-30.0, -1.0, 300), numpy.linspace(1.0, 30.0, 300)])
        self.assertGreaterEqual(float(numpy.min(driftMargin(wide))), 0.1)

    def testDensityGrid(self):
        rowL = self.kU.densityGrid(2, [-1.0, 0.5], [-0.5, 0.25, 2.0])
        self.assertEqual(len(rowL), 6)
        self.assertEqual(sorted(rowL[0].keys()), ["r", "r_prev", "value"])
        self.assertTrue(all(row["value"] > 0.0 for row in rowL))


def kernelSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(KernelUtilTests("testLevelOneKernel"))
    suiteSelect.addTest(KernelUtilTests("testOracleReport"))
    suiteSelect.addTest(KernelUtilTests("testSamplers"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = kernelSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
