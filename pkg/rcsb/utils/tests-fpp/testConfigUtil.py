##
# File:    testConfigUtil.py
# Author:  J. Westbrook
# Date:    13-Oct-2026
# Version: 0.001
#
# Updates:
##
"""
Test cases for run configuration defaults and YAML overrides.
"""
__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import os
import time
import unittest

from rcsb.utils.fpp.ConfigUtil import DEFAULT_CONFIG, ConfigUtil
from rcsb.utils.fpp.FppErrors import ValidationError
from rcsb.utils.fpp.MarshalUtil import MarshalUtil

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)


class ConfigUtilTests(unittest.TestCase):
    def setUp(self):
        self.__workPath = os.path.join(HERE, "test-output")
        self.__mU = MarshalUtil(workPath=self.__workPath)
        self.__configPath = os.path.join(self.__workPath, "run-config.yml")
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testDefaults(self):
        cfgU = ConfigUtil()
        self.assertIsNone(cfgU.getConfigPath())
        self.assertEqual(cfgU.get("panels", "quadrature"), 64)
        self.assertEqual(cfgU.get("chunkSize", "simulation"), 500)
        self.assertEqual(cfgU.get("threads", "run", 3), 3)
        self.assertEqual(cfgU.get("missing", "simulation", "x"), "x")
        self.assertEqual(cfgU.get("n", "nosection", 5), 5)
        sD = cfgU.getSection("variance")
        sD["nMax"] = 99
        self.assertEqual(cfgU.get("nMax", "variance"), DEFAULT_CONFIG["variance"]["nMax"])

    def testYamlOverride(self):
        try:
            oD = {"simulation": {"seed": 11, "replicates": 250, "bogus": 1}, "quadrature": {"panels": 128}, "unknown": {"a": 1}}
            self.assertTrue(self.__mU.doExport(self.__configPath, oD, fmt="yaml"))
            cfgU = ConfigUtil(configPath=self.__configPath)
            self.assertEqual(cfgU.get("seed", "simulation"), 11)
            self.assertEqual(cfgU.get("replicates", "simulation"), 250)
            self.assertEqual(cfgU.get("chunkSize", "simulation"), 500)
            self.assertEqual(cfgU.get("panels", "quadrature"), 128)
            self.assertIsNone(cfgU.get("bogus", "simulation"))
            self.assertEqual(cfgU.getSection("unknown"), {})
            self.assertEqual(DEFAULT_CONFIG["simulation"]["seed"], 20260924)
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testBadConfiguration(self):
        with self.assertRaises(ValidationError):
            ConfigUtil(configPath=os.path.join(self.__workPath, "no-such-config.yml"))
        self.assertTrue(self.__mU.doExport(self.__configPath, {"simulation": [1, 2]}, fmt="yaml"))
        with self.assertRaises(ValidationError):
            ConfigUtil(configPath=self.__configPath)
        self.assertTrue(self.__mU.doExport(self.__configPath, [1, 2], fmt="yaml"))
        with self.assertRaises(ValidationError):
            ConfigUtil(configPath=self.__configPath)


def suiteConfig():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ConfigUtilTests("testDefaults"))
    suiteSelect.addTest(ConfigUtilTests("testYamlOverride"))
    suiteSelect.addTest(ConfigUtilTests("testBadConfiguration"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteConfig()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
