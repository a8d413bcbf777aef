##
# File:    testIoUtil.py
# Author:  J. Westbrook
# Date:    10-Oct-2026
# Version: 0.001
#
# Update:
#  11-Oct-2026 jdw add exact rational encoding cases
#  12-Oct-2026 jdw add gzip cases
#  18-Oct-2026 jdw local plain files only; shortest round trip float text
#
##
"""
Tests for report serialization and deserialization utilities.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"


import json
import logging
import math
import os
import time
import unittest
from fractions import Fraction

import numpy

from rcsb.utils.fpp.FileUtil import FileUtil
from rcsb.utils.fpp.GenFunUtil import CoeffTables, GenFunUtil
from rcsb.utils.fpp.IoUtil import IoUtil, JsonTypeEncoder, csvValue

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)


class IoUtilTests(unittest.TestCase):
    tables = None

    @classmethod
    def setUpClass(cls):
        cls.tables = GenFunUtil().coeffTables(3)

    def setUp(self):
        self.__workPath = os.path.join(HERE, "test-output")
        self.__ioU = IoUtil()
        self.__fileU = FileUtil()
        self.__pathJsonTables = os.path.join(self.__workPath, "tables-n3.json")
        self.__pathCsvTables = os.path.join(self.__workPath, "tables-n3.csv")
        self.__pathYamlReport = os.path.join(self.__workPath, "report.yml")
        self.__startTime = time.time()
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testJsonTypeEncoder(self):
        """Test the case encoding exact rationals and numpy values"""
        rD = {"frac": Fraction(-1, 1440), "int": numpy.int64(7), "flt": numpy.float64(0.1), "flag": numpy.bool_(True), "arr": numpy.arange(3)}
        tS = json.dumps(rD, cls=JsonTypeEncoder)
        oD = json.loads(tS)
        self.assertEqual(oD["frac"], "-1/1440")
        self.assertEqual(oD["int"], 7)
        self.assertEqual(oD["flt"], 0.1)
        self.assertTrue(oD["flag"])
        self.assertEqual(oD["arr"], [0, 1, 2])
        self.assertEqual(csvValue(Fraction(5, 18)), "5/18")
        self.assertEqual(csvValue(1.0 / 3.0), "0.3333333333333333")
        self.assertEqual(float(csvValue(numpy.float64(2.0) / 3.0)), 2.0 / 3.0)

    def testReadWriteJsonTables(self):
        """Test the case write and read coefficient tables as JSON"""
        try:
            ok = self.__ioU.serialize(self.__pathJsonTables, self.tables.toDict(), fmt="json", indent=1)
            self.assertTrue(ok)
            rD = self.__ioU.deserialize(self.__pathJsonTables, fmt="json")
            self.assertEqual(rD["a"][0][0], "%d/%d" % (self.tables.a[0][0].numerator, self.tables.a[0][0].denominator))
            self.assertEqual(CoeffTables.fromDict(rD), self.tables)
            self.assertTrue(self.__fileU.exists(self.__pathJsonTables))
            rD = self.__ioU.deserialize(os.path.join(self.__workPath, "missing.json"), fmt="json")
            self.assertEqual(rD, {})
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testReadWriteCsvTables(self):
        """Test the case write and read coefficient table rows as CSV"""
        try:
            rowL = self.tables.toRows()
            ok = self.__ioU.serialize(self.__pathCsvTables, rowL, fmt="csv")
            self.assertTrue(ok)
            rL = self.__ioU.deserialize(self.__pathCsvTables, fmt="csv")
            self.assertEqual(len(rL), len(rowL))
            self.assertEqual(CoeffTables.fromRows(rL), self.tables)
            ok = self.__ioU.serialize(self.__pathCsvTables, rowL, fmt="csv", fieldNames=["table", "p", "q", "value"])
            self.assertTrue(ok)
            rL = self.__ioU.deserialize(self.__pathCsvTables, fmt="csv")
            self.assertEqual(list(rL[0].keys()), ["table", "p", "q", "value"])
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testReadWriteYaml(self):
        """Test the case write and read a nested report as YAML"""
        try:
            rD = {"series": {"orderMargin": 6}, "values": [Fraction(1, 3), 0.25], "label": "ladder"}
            ok = self.__ioU.serialize(self.__pathYamlReport, rD, fmt="yaml")
            self.assertTrue(ok)
            oD = self.__ioU.deserialize(self.__pathYamlReport, fmt="yaml")
            self.assertEqual(oD["series"]["orderMargin"], 6)
            self.assertEqual(oD["values"], ["1/3", 0.25])
            self.assertFalse(self.__ioU.serialize(self.__pathYamlReport, rD, fmt="pickle"))
            self.assertIsNone(self.__ioU.deserialize(self.__pathYamlReport, fmt="pickle"))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testFileUtil(self):
        """Test the case directory creation, hashing and removal"""
        try:
            dirPath = os.path.join(self.__workPath, "scratch", "nested")
            pth = os.path.join(dirPath, "note.json")
            self.assertTrue(self.__fileU.mkdirForFile(pth))
            self.assertTrue(self.__ioU.serialize(pth, {"n": 1}, fmt="json"))
            self.assertEqual(len(self.__fileU.hash(pth)), 32)
            self.assertEqual(len(self.__fileU.hash(pth, hashType="sha256")), 64)
            self.assertIsNone(self.__fileU.hash(pth, hashType="no-such-digest"))
            self.assertIsNone(self.__fileU.hash(os.path.join(dirPath, "missing.json")))
            self.assertTrue(self.__fileU.remove(os.path.join(self.__workPath, "scratch")))
            self.assertFalse(self.__fileU.exists(pth))
            self.assertTrue(self.__fileU.remove(os.path.join(self.__workPath, "scratch")))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testFloatText(self):
        """Test the case float cells and JSON numbers parse back to the same double in at most 17 significant digits"""

        def sigDigits(text):
            mantissa = text.lower().lstrip("-").split("e")[0].replace(".", "")
            return len(mantissa.strip("0")) or 1

        try:
            for val in [0.1, 0.1 + 0.2, 1.0 / 3.0, -math.pi, 5.0e-324, 1.7976931348623157e308, numpy.float64(2.0) / 3.0, 0.6827351840355]:
                for text in [csvValue(val), json.dumps(val, cls=JsonTypeEncoder)]:
                    self.assertEqual(float(text), float(val))
                    self.assertLessEqual(sigDigits(text), 17)
            self.assertEqual(csvValue(0.1 + 0.2), "0.30000000000000004")
            self.assertEqual(json.dumps([numpy.float32(0.5)], cls=JsonTypeEncoder), "[0.5]")
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteReadWrite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(IoUtilTests("testJsonTypeEncoder"))
    suiteSelect.addTest(IoUtilTests("testReadWriteJsonTables"))
    suiteSelect.addTest(IoUtilTests("testReadWriteCsvTables"))
    suiteSelect.addTest(IoUtilTests("testReadWriteYaml"))
    suiteSelect.addTest(IoUtilTests("testFileUtil"))
    suiteSelect.addTest(IoUtilTests("testFloatText"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteReadWrite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
