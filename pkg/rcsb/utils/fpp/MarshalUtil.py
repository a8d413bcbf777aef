##
# File: MarshalUtil.py
# Date: 10-Oct-2026
#
# Updates:
#  12-Oct-2026 jdw add marshal helpers for coefficient tables
#  18-Oct-2026 jdw local paths only
##
__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import os

from rcsb.utils.fpp.FileUtil import FileUtil
from rcsb.utils.fpp.IoUtil import IoUtil

logger = logging.getLogger(__name__)


class MarshalUtil(object):
    """Export and import report objects, optionally converted by a marshal helper.

    Coefficient tables, for example, are exported through ``CoeffTables.toDict`` (json) or
    ``CoeffTables.toRows`` (csv) and rebuilt with ``fromDict`` / ``fromRows`` on import.

    Args:
        workPath (str, optional): directory created for relative output. Defaults to ".".
    """

    def __init__(self, workPath=None, **kwargs):
        _ = kwargs
        self.__workPath = workPath if workPath else "."
        self.__fileU = FileUtil(workPath=self.__workPath)
        self.__ioU = IoUtil()

    def doExport(self, filePath, obj, fmt="json", marshalHelper=None, **kwargs):
        """Write obj (or marshalHelper(obj, **kwargs)) to filePath in fmt (json, csv or yaml).

        Returns:
            bool: True for success or False otherwise
        """
        try:
            myObj = marshalHelper(obj, **kwargs) if marshalHelper else obj
            return self.__ioU.serialize(filePath, myObj, fmt=fmt, **kwargs)
        except Exception as e:
            logger.exception("Exporting %r failing with %s", filePath, str(e))
        return False

    def doImport(self, filePath, fmt="json", marshalHelper=None, **kwargs):
        """Read filePath in fmt (json, csv or yaml), then apply marshalHelper when given.

        Returns:
            object: format specific data, or None when the helper fails
        """
        try:
            ret = self.__ioU.deserialize(filePath, fmt=fmt, **kwargs)
            return marshalHelper(ret, **kwargs) if marshalHelper else ret
        except Exception as e:
            logger.exception("Importing %r failing with %s", filePath, str(e))
        return None

    def exists(self, filePath, mode=os.R_OK):
        return self.__fileU.exists(filePath, mode=mode)

    def hash(self, filePath, hashType="md5"):
        return self.__fileU.hash(filePath, hashType=hashType)

    def remove(self, pth):
        return self.__fileU.remove(pth)
