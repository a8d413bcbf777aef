##
# File:    testMarshalUtil.py
# Author:  J. Westbrook
# Date:    10-Oct-2026
# Version: 0.001
#
# Update:
#  12-Oct-2026 jdw add marshal helper cases for coefficient tables
#  18-Oct-2026 jdw local paths only; helper failures import as None
#
##
"""
Tests for the export and import front end used for tables and run reports.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"


import logging
import os
import time
import unittest

from rcsb.utils.fpp import __version__
from rcsb.utils.fpp.GenFunUtil import CoeffTables
from rcsb.utils.fpp.MarshalUtil import MarshalUtil
from rcsb.utils.fpp.RecurrenceUtil import RecurrenceUtil

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))


logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()
logger.setLevel(logging.INFO)


class MarshalUtilTests(unittest.TestCase):
    def setUp(self):
        self.__workPath = os.path.join(HERE, "test-output")
        self.__mU = MarshalUtil(workPath=self.__workPath)
        self.__pathTablesJson = os.path.join(self.__workPath, "recurrence-n5.json")
        self.__pathTablesCsv = os.path.join(self.__workPath, "recurrence-n5.csv")
        self.__tables = RecurrenceUtil().recurTables(5)
        self.__startTime = time.time()
        logger.debug("Running tests on version %s", __version__)
        logger.debug("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        endTime = time.time()
        logger.debug("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testMarshalHelpers(self):
        """Test the case export and import tables through marshal helpers"""
        try:
            ok = self.__mU.doExport(self.__pathTablesJson, self.__tables, fmt="json", marshalHelper=lambda t, **kw: t.toDict())
            self.assertTrue(ok)
            self.assertTrue(self.__mU.exists(self.__pathTablesJson))
            tables = self.__mU.doImport(self.__pathTablesJson, fmt="json", marshalHelper=lambda rD, **kw: CoeffTables.fromDict(rD))
            self.assertEqual(tables, self.__tables)
            #
            ok = self.__mU.doExport(self.__pathTablesCsv, self.__tables, fmt="csv", marshalHelper=lambda t, **kw: t.toRows())
            self.assertTrue(ok)
            tables = self.__mU.doImport(self.__pathTablesCsv, fmt="csv", marshalHelper=lambda rL, **kw: CoeffTables.fromRows(rL))
            self.assertEqual(tables, self.__tables)
            self.assertEqual(tables.d, self.__tables.d)
            self.assertIsNotNone(self.__mU.hash(self.__pathTablesCsv))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()

    def testMissingAndRemove(self):
        """Test the case missing files, failing helpers and removal"""
        try:
            self.assertFalse(self.__mU.doExport(os.path.join(self.__workPath, "tables.xml"), {"n": 1}, fmt="xml"))
            self.assertEqual(self.__mU.doImport(os.path.join(self.__workPath, "not-there.csv"), fmt="csv"), [])
            self.assertIsNone(self.__mU.doImport(os.path.join(self.__workPath, "not-there.json"), marshalHelper=lambda rD, **kw: CoeffTables.fromDict(rD)))
            self.assertEqual(self.__mU.doImport(os.path.join(self.__workPath, "not-there.json"), fmt="json"), {})
            pth = os.path.join(self.__workPath, "to-remove.json")
            self.assertTrue(self.__mU.doExport(pth, {"n": 1}))
            self.assertTrue(self.__mU.remove(pth))
            self.assertFalse(self.__mU.exists(pth))
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            self.fail()


def suiteMarshal():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(MarshalUtilTests("testMarshalHelpers"))
    suiteSelect.addTest(MarshalUtilTests("testMissingAndRemove"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = suiteMarshal()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
