##
# File:    testLogUtil.py
# Author:  J. Westbrook
# Date:    10-Oct-2026
# Version: 0.001
#
# Updates:
#  13-Oct-2026 jdw add configureLogging() case
##
"""
Test cases for the structured logging formatters.
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
from fractions import Fraction

import numpy

from rcsb.utils.fpp.FileUtil import FileUtil
from rcsb.utils.fpp.LogUtil import DetailedStructFormatter, StructFormatter, configureLogging

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


class LogUtilTests(unittest.TestCase):
    """Test cases for structured logging tools -"""

    def setUp(self):
        self.__workPath = os.path.join(HERE, "test-output")
        self.__testLogFileMin = os.path.join(self.__workPath, "logfile-min.json")
        self.__testLogFileDetailed = os.path.join(self.__workPath, "logfile-detailed.json")
        fU = FileUtil(workPath=self.__workPath)
        fU.remove(self.__testLogFileMin)
        fU.remove(self.__testLogFileDetailed)
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __logRecords(self, formatter, filePath, loggerName):
        sl = logging.FileHandler(filename=filePath)
        sl.setFormatter(formatter)
        myLogger = logging.getLogger(loggerName)
        myLogger.propagate = False
        myLogger.addHandler(sl)
        myLogger.setLevel(logging.INFO)
        myLogger.info("chi_hat %r replicates %r", 0.6827, 5000, extra={"n": numpy.int64(2000), "a00": Fraction(115, 96)})
        try:
            rD = {}
            rD["b"] = rD["a"]
        except Exception as e:
            myLogger.exception("Expected failure with %s", str(e), extra={"n": 1, "cell": (0, 2)})
        sl.close()
        myLogger.removeHandler(sl)
        with io.open(filePath, "r", encoding="utf-8") as ifh:
            return [json.loads(line) for line in ifh if line.strip()]

    def testStructLogging(self):
        try:
            tL = self.__logRecords(StructFormatter(), self.__testLogFileMin, "fpp-min")
            self.assertEqual(len(tL), 2)
            self.assertEqual(tL[0]["n"], 2000)
            self.assertEqual(tL[0]["a00"], "115/96")
            self.assertEqual(tL[0]["level"], "INFO")
            self.assertIn("chi_hat 0.6827", tL[0]["message"])
            self.assertEqual(tL[1]["cell"], [0, 2])
            self.assertIn("KeyError", tL[1]["exc_info"])
            self.assertNotIn("lineno", tL[0])
            self.assertTrue(tL[0]["time"].endswith("+00:00"))
            self.assertNotIn("args", tL[0])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testDetailedStructLogging(self):
        try:
            tL = self.__logRecords(DetailedStructFormatter(), self.__testLogFileDetailed, "fpp-detailed")
            self.assertEqual(len(tL), 2)
            self.assertEqual(tL[0]["n"], 2000)
            self.assertEqual(tL[0]["funcName"], "__logRecords")
            self.assertIn("lineno", tL[1])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testConfigureLogging(self):
        rootLogger = logging.getLogger()
        savedHandlers, savedLevel = list(rootLogger.handlers), rootLogger.level
        try:
            stream = io.StringIO()
            configureLogging(level=logging.DEBUG, logJson=True, stream=stream)
            logging.getLogger("fpp-configure").debug("draws %d", 10, extra={"seed": 7})
            tD = json.loads(stream.getvalue().strip().splitlines()[-1])
            self.assertEqual(tD["seed"], 7)
            self.assertEqual(tD["message"], "draws 10")
            stream = io.StringIO()
            configureLogging(level=logging.INFO, stream=stream)
            logging.getLogger("fpp-configure").info("plain record")
            self.assertIn("[INFO]", stream.getvalue())
            self.assertEqual(len(rootLogger.handlers), 1)
        finally:
            for hd in list(rootLogger.handlers):
                rootLogger.removeHandler(hd)
            for hd in savedHandlers:
                rootLogger.addHandler(hd)
            rootLogger.setLevel(savedLevel)


def suiteLogFile():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(LogUtilTests("testStructLogging"))
    suiteSelect.addTest(LogUtilTests("testDetailedStructLogging"))
    suiteSelect.addTest(LogUtilTests("testConfigureLogging"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteLogFile()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
