##
# File:    testFppExec.py
# Author:  J. Westbrook
# Date:    13-Oct-2026
# Version: 0.001
#
# Update:
#  15-Oct-2026 jdw add usage error and configuration override cases
#  18-Oct-2026 jdw failed verification verdicts exit with status 1
#  18-Oct-2026 jdw identities skip the first relation at its pole
#
##
"""
Tests for the command line entry point: report formats, exit codes and reproducible output.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import io
import json
import logging
import os
import time
import unittest

from rcsb.utils.fpp import __version__
from rcsb.utils.fpp.FppExec import SCHEMA_VERSION, FppExec
from rcsb.utils.fpp.LadderSimUtil import chiClosedForm
from rcsb.utils.fpp.MarshalUtil import MarshalUtil

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)


class FppExecTests(unittest.TestCase):
    def setUp(self):
        self.__workPath = os.path.join(HERE, "test-output")
        self.__mU = MarshalUtil(workPath=self.__workPath)
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __runJson(self, argL):
        buf = io.StringIO()
        ret = FppExec(stdout=buf).run(argL)
        return ret, (json.loads(buf.getvalue()) if buf.getvalue() else None)

    def testCoeffsCsvGolden(self):
        """Four-step tables written as CSV hold the published reduced fractions."""
        try:
            outPath = os.path.join(self.__workPath, "coeffs-n4.csv")
            ret = FppExec().run(["coeffs", "--n", "4", "--format", "csv", "--output", outPath])
            self.assertEqual(ret, 0)
            rowL = self.__mU.doImport(outPath, fmt="csv")
            self.assertEqual(list(rowL[0].keys()), ["p", "q", "table", "value"])
            cellD = {(row["table"], int(row["p"]), int(row["q"])): row["value"] for row in rowL}
            self.assertEqual(cellD[("a", 0, 0)], "115/96")
            self.assertEqual(cellD[("b", 0, 0)], "721/432")
            self.assertEqual(cellD[("c", 0, 2)], "5/18")
            self.assertEqual(cellD[("a", 4, 0)], "-1/1440")
            self.assertEqual(len([ky for ky in cellD if ky[0] == "a"]), 25)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testCoeffsJson(self):
        ret, rD = self.__runJson(["coeffs", "--n", "4"])
        self.assertEqual(ret, 0)
        self.assertEqual(rD["schema_version"], SCHEMA_VERSION)
        self.assertEqual(rD["report"], "coeffs")
        self.assertEqual(rD["a"][0][0], "115/96")
        self.assertNotIn("timestamp", rD)
        ret, rD2 = self.__runJson(["coeffs", "--n", "4", "--engine", "recurrence"])
        self.assertEqual(ret, 0)
        self.assertEqual([rD2[t] for t in "abc"], [rD[t] for t in "abc"])
        ret, rD = self.__runJson(["coeffs", "--n", "2", "--provenance"])
        self.assertEqual(ret, 0)
        self.assertIn("timestamp", rD)
        self.assertIn("cpuCount", rD["host"])
        self.assertGreaterEqual(rD["elapsed_seconds"], 0.0)

    def testReproducibleOutput(self):
        """Identical arguments and seed give byte-identical report files."""
        hashL = []
        for ii in range(2):
            outPath = os.path.join(self.__workPath, "rate-%d.json" % ii)
            ret = FppExec().run(["rate", "--n", "50", "--replicates", "300", "--seed", "7", "--threads", "1", "--output", outPath])
            self.assertEqual(ret, 0)
            hashL.append(self.__mU.hash(outPath))
        self.assertEqual(hashL[0], hashL[1])
        hashL = []
        for threads in ["1", "2"]:
            outPath = os.path.join(self.__workPath, "clt-%s.csv" % threads)
            ret = FppExec().run(["clt", "--n", "400", "--replicates", "1200", "--seed", "3", "--threads", threads, "--format", "csv", "--output", outPath])
            self.assertEqual(ret, 0)
            hashL.append(self.__mU.hash(outPath))
        self.assertEqual(hashL[0], hashL[1])
        rowL = self.__mU.doImport(os.path.join(self.__workPath, "clt-1.csv"), fmt="csv")
        self.assertEqual(len(rowL), 1200)
        self.assertEqual(list(rowL[0].keys()), ["sample_id", "standardized_value"])

    def testVerifyEngines(self):
        ret, rD = self.__runJson(["verify-engines", "--n-max", "6"])
        self.assertEqual(ret, 0)
        self.assertTrue(rD["equal"])
        self.assertEqual([row["n"] for row in rD["levels"]], [1, 2, 3, 4, 5, 6])
        self.assertEqual(rD["differences"], [])

    def testRateClosedFormOnly(self):
        ret, rD = self.__runJson(["rate", "--replicates", "0"])
        self.assertEqual(ret, 0)
        self.assertAlmostEqual(rD["chi_closed"], chiClosedForm(), places=15)
        self.assertNotIn("chi_hat", rD)
        with self.assertLogs("rcsb.utils.fpp.FppExec", level="INFO") as cm:
            ret, rD = self.__runJson(["rate", "--replicates", "400", "--n", "200", "--seed", "11", "--threads", "1"])
        self.assertTrue(any("Completed doRate" in msg for msg in cm.output))
        self.assertEqual(ret, 0)
        self.assertIn("within_3_stderr", rD)
        self.assertAlmostEqual(rD["chi_hat"], rD["chi_closed"], delta=0.02)

    def testFailedVerdictExitStatus(self):
        """Single-column ladders are far from the asymptotic rate and law, so both checks fail with status 1."""
        ret, rD = self.__runJson(["rate", "--n", "1", "--replicates", "2000", "--seed", "5", "--threads", "1"])
        self.assertEqual(ret, 1)
        self.assertFalse(rD["within_3_stderr"])
        # E l_1 = E min(X, Z_0 + Y + Z_1) = 7/8
        self.assertAlmostEqual(rD["chi_hat"], 0.875, delta=0.05)
        ret, rD = self.__runJson(["clt", "--n", "1", "--replicates", "2000", "--seed", "5", "--threads", "1"])
        self.assertEqual(ret, 1)
        self.assertFalse(rD["passed"])
        self.assertFalse(rD["mean_within_3_stderr"])
        ret, rD = self.__runJson(["clt", "--n", "400", "--replicates", "1000", "--seed", "5", "--threads", "1"])
        self.assertEqual(ret, 0)
        self.assertTrue(rD["passed"])

    def testKernelGrid(self):
        outPath = os.path.join(self.__workPath, "kernel-n2.csv")
        ret = FppExec().run(["kernel", "--n", "2", "--r-min", "-2", "--r-max", "2", "--grid-size", "5", "--format", "csv", "--output", outPath])
        self.assertEqual(ret, 0)
        rowL = self.__mU.doImport(outPath, fmt="csv")
        self.assertEqual(len(rowL), 25)
        self.assertEqual(list(rowL[0].keys()), ["r_prev", "r", "value"])
        self.assertTrue(all(float(row["value"]) > 0.0 for row in rowL))
        ret, rD = self.__runJson(["kernel", "--n", "2", "--grid-size", "3", "--oracles", "--oracle-n-max", "2"])
        self.assertEqual(ret, 0)
        self.assertTrue(rD["oracles"]["passed"])

    def testIdentities(self):
        ret, rD = self.__runJson(["identities", "--z", "0.5", "1.0", "--zeta", "1.0"])
        self.assertEqual(ret, 0)
        self.assertEqual(rD["failures"], 0)
        self.assertLessEqual(rD["max_residual"], 1.0e-7)
        nameS = set(row["name"] for row in rD["rows"])
        self.assertIn("S1", nameS)
        self.assertIn("dB_nu=-1", nameS)
        self.assertNotIn("dB_nu=0", nameS)
        self.assertEqual([row["z"] for row in rD["rows"] if row["name"] == "Rel1"], [0.5])

    def testDrift(self):
        ret, rD = self.__runJson(["drift", "--r-max", "4", "--grid-size", "41"])
        self.assertEqual(ret, 0)
        self.assertTrue(rD["passed"])
        self.assertLessEqual(rD["max_residual"], 1.0e-10)
        self.assertAlmostEqual(rD["sup_psi"], 0.5, delta=1.0e-6)
        self.assertGreaterEqual(rD["min_margin_outside_unit"], 0.1)

    def testUsageErrors(self):
        """Usage errors and invalid parameters exit with status 2."""
        fE = FppExec(stdout=io.StringIO())
        self.assertEqual(fE.run([]), 2)
        self.assertEqual(fE.run(["percolate"]), 2)
        self.assertEqual(fE.run(["coeffs", "--n", "0"]), 2)
        self.assertEqual(fE.run(["rate", "--replicates", "-1"]), 2)
        self.assertEqual(fE.run(["coeffs", "--format", "xml"]), 2)
        self.assertEqual(fE.run(["identities", "--terms", "10"]), 2)
        self.assertEqual(fE.run(["identities", "--names", "Rel1", "--z", "1.0"]), 2)
        self.assertEqual(fE.run(["kernel", "--grid-size", "1"]), 2)
        self.assertEqual(fE.run(["variance", "--n-max", "2"]), 2)
        self.assertEqual(fE.run(["coeffs", "--config", os.path.join(self.__workPath, "missing-config.yml")]), 2)
        self.assertEqual(fE.run(["--version"]), 0)

    def testConfigOverride(self):
        """YAML sections override the defaults; a failed verification exits with status 1."""
        cfgPath = os.path.join(self.__workPath, "fpp-config.yml")
        self.assertTrue(self.__mU.doExport(cfgPath, {"kernel": {"n": 2}, "tolerances": {"identity": -1.0}}, fmt="yaml"))
        ret, rD = self.__runJson(["coeffs", "--config", cfgPath])
        self.assertEqual(ret, 0)
        self.assertEqual(rD["n"], 2)
        ret, rD = self.__runJson(["coeffs", "--config", cfgPath, "--n", "3"])
        self.assertEqual(rD["n"], 3)
        ret, rD = self.__runJson(["identities", "--config", cfgPath, "--z", "1.0", "--zeta", "1.0", "--names", "S1", "S2"])
        self.assertEqual(ret, 1)
        self.assertGreater(rD["failures"], 0)


def suiteFppExec():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(FppExecTests("testCoeffsCsvGolden"))
    suiteSelect.addTest(FppExecTests("testCoeffsJson"))
    suiteSelect.addTest(FppExecTests("testReproducibleOutput"))
    suiteSelect.addTest(FppExecTests("testVerifyEngines"))
    suiteSelect.addTest(FppExecTests("testRateClosedFormOnly"))
    suiteSelect.addTest(FppExecTests("testFailedVerdictExitStatus"))
    suiteSelect.addTest(FppExecTests("testKernelGrid"))
    suiteSelect.addTest(FppExecTests("testIdentities"))
    suiteSelect.addTest(FppExecTests("testDrift"))
    suiteSelect.addTest(FppExecTests("testUsageErrors"))
    suiteSelect.addTest(FppExecTests("testConfigOverride"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteFppExec()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
