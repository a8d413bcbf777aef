##
# File: IoUtil.py
#
# Updates:
#  10-Oct-2026 jdw json, csv and yaml formats for coefficient tables and run reports
#  11-Oct-2026 jdw encode Fraction values as "num/den" strings
#  18-Oct-2026 jdw drop compressed and tab delimited variants; local report files only
##

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import csv
import json
import logging
from collections import OrderedDict
from fractions import Fraction

import numpy
import ruamel.yaml

from rcsb.utils.fpp.FileUtil import FileUtil

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "yaml")


def fractionText(value):
    return "%d/%d" % (value.numerator, value.denominator)


def csvValue(value):
    """Cell text for a CSV report.

    Fractions become "num/den". Floats use the shortest repr that parses back to the same
    double, which never needs more than 17 significant digits.
    """
    if isinstance(value, Fraction):
        return fractionText(value)
    if isinstance(value, (numpy.floating, float)):
        return repr(float(value))
    if isinstance(value, numpy.integer):
        return int(value)
    if isinstance(value, numpy.bool_):
        return bool(value)
    return value


class JsonTypeEncoder(json.JSONEncoder):
    """Encode exact rationals and numpy scalars and arrays in run reports."""

    # pylint: disable=method-hidden
    def default(self, o):
        if isinstance(o, Fraction):
            return fractionText(o)
        if isinstance(o, numpy.integer):
            return int(o)
        if isinstance(o, numpy.floating):
            return float(o)
        if isinstance(o, numpy.bool_):
            return bool(o)
        if isinstance(o, numpy.ndarray):
            return o.tolist()
        return json.JSONEncoder.default(self, o)


class IoUtil(object):
    """Read and write coefficient tables, run reports and configuration files.

    JSON holds nested reports, CSV holds flat row dictionaries and YAML holds configuration.
    """

    def __init__(self, **kwargs):
        self.__fileU = FileUtil(**kwargs)

    def serialize(self, filePath, myObj, fmt="json", **kwargs):
        """Write myObj to filePath.

        Args:
            filePath (str): local file path
            myObj (object): dict/list for json and yaml, list of row dicts for csv
            fmt (str, optional): json (default), csv or yaml
            **kwargs: indent (json), fieldNames (csv)

        Returns:
            bool: True for success or False otherwise
        """
        fmt = str(fmt).lower()
        if fmt not in FORMATS:
            logger.error("Unsupported serialization format %r", fmt)
            return False
        if not self.__fileU.mkdirForFile(filePath):
            return False
        try:
            with open(filePath, "w", encoding="utf-8", newline="" if fmt == "csv" else None) as ofh:
                if fmt == "json":
                    json.dump(myObj, ofh, indent=kwargs.get("indent", 0), cls=JsonTypeEncoder)
                elif fmt == "csv":
                    self.__writeRows(ofh, myObj, kwargs.get("fieldNames"))
                else:
                    yaml = ruamel.yaml.YAML()
                    yaml.default_flow_style = False
                    # plain containers only; Fraction and numpy values go through the JSON encoder first
                    yaml.dump(json.loads(json.dumps(myObj, cls=JsonTypeEncoder)), ofh)
            return True
        except Exception as e:
            logger.error("Unable to serialize %r as %s with %s", filePath, fmt, str(e))
        return False

    def deserialize(self, filePath, fmt="json", **kwargs):
        """Read filePath.

        Args:
            filePath (str): local file path
            fmt (str, optional): json (default), csv or yaml
            **kwargs: default (json and yaml) returned when the file is missing or unreadable

        Returns:
            object: OrderedDict for json, list of row dicts for csv, plain containers for yaml;
                    None for an unsupported format
        """
        fmt = str(fmt).lower()
        if fmt not in FORMATS:
            logger.error("Unsupported deserialization format %r", fmt)
            return None
        myDefault = [] if fmt == "csv" else kwargs.get("default", {})
        try:
            with open(filePath, "r", encoding="utf-8-sig", newline="" if fmt == "csv" else None) as ifh:
                if fmt == "json":
                    return json.load(ifh, object_pairs_hook=OrderedDict)
                if fmt == "csv":
                    rowL = list(csv.DictReader(ifh))
                    logger.debug("Read %d rows from %s", len(rowL), filePath)
                    return rowL
                rObj = ruamel.yaml.YAML(typ="safe").load(ifh)
                return rObj if rObj is not None else myDefault
        except Exception as e:
            logger.warning("Unable to deserialize %r as %s with %s", filePath, fmt, str(e))
        return myDefault

    def exists(self, filePath):
        return self.__fileU.exists(filePath)

    def __writeRows(self, ofh, rowDictList, fieldNames):
        fNames = fieldNames if fieldNames else list(rowDictList[0].keys())
        writer = csv.DictWriter(ofh, fieldnames=fNames, lineterminator="\n")
        writer.writeheader()
        for rowDict in rowDictList:
            writer.writerow({k: csvValue(v) for k, v in rowDict.items() if k in fNames})
