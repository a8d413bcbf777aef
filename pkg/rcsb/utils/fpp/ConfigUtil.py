##
# File:    ConfigUtil.py
# Author:  J. Westbrook
# Date:    13-Oct-2026
# Version: 0.001
#
# Updates:
#  14-Oct-2026 jdw add tolerance section used by the verification subcommands
##
"""
Run configuration: built-in defaults overridden section by section from an optional YAML file.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import copy
import logging

from rcsb.utils.fpp.FppErrors import ValidationError
from rcsb.utils.fpp.MarshalUtil import MarshalUtil

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = {
    "series": {"orderMargin": 4},
    "quadrature": {"cutoff": 30.0, "panels": 64, "points": 16},
    "tolerances": {
        "identity": 1.0e-10,
        "finiteDifference": 1.0e-7,
        "normalization": 1.0e-8,
        "chapmanKolmogorov": 1.0e-6,
        "stationarity": 1.0e-7,
        "symmetry": 1.0e-12,
        "drift": 1.0e-10,
        "driftSup": 1.0e-6,
        "driftMargin": 0.1,
    },
    "simulation": {"seed": 20260924, "replicates": 5000, "chunkSize": 500, "n": 2000, "steps": 10**6, "burnIn": 1000, "batchSize": 1000, "chains": 16},
    "kernel": {"n": 4, "rMin": -4.0, "rMax": 4.0, "gridSize": 41, "oracleMaxN": 5, "oracleGridSize": 9},
    "identities": {"numTerms": 40, "z": [0.25, 0.5, 1.0, 1.5, 2.0], "zeta": [0.25, 0.5, 1.0, 1.5, 2.0]},
    "variance": {"nMax": 8, "mcOuter": 200000, "gridSize": 601, "gridExtent": 12.0},
    "drift": {"rMax": 8.0, "gridSize": 161, "supExtent": 30.0},
    "run": {"threads": None, "timeoutSeconds": 0},
}


class ConfigUtil(object):
    """Access run settings by section and option name.

    Args:
        **kwargs: configPath (str, optional) YAML file whose sections override DEFAULT_CONFIG
    """

    def __init__(self, **kwargs):
        self.__configPath = kwargs.get("configPath", None)
        self.__cD = copy.deepcopy(DEFAULT_CONFIG)
        if self.__configPath:
            self.__merge(self.__read(self.__configPath))

    def __read(self, configPath):
        mU = MarshalUtil()
        if not mU.exists(configPath):
            raise ValidationError("configuration file %r is not readable" % configPath)
        oD = mU.doImport(configPath, fmt="yaml")
        if not isinstance(oD, dict):
            raise ValidationError("configuration file %r does not hold a mapping" % configPath)
        return oD

    def __merge(self, oD):
        for sectionName, sD in oD.items():
            if sectionName not in self.__cD:
                logger.warning("Ignoring unknown configuration section %r", sectionName)
                continue
            if not isinstance(sD, dict):
                raise ValidationError("configuration section %r is not a mapping" % sectionName)
            for ky, val in sD.items():
                if ky not in self.__cD[sectionName]:
                    logger.warning("Ignoring unknown option %s.%s", sectionName, ky)
                    continue
                self.__cD[sectionName][ky] = val
        logger.debug("Merged configuration from %r", self.__configPath)

    def get(self, name, sectionName, default=None):
        """Option value from a section, or default when either is absent."""
        try:
            val = self.__cD[sectionName][name]
        except KeyError:
            return default
        return default if val is None else val

    def getSection(self, sectionName):
        return copy.deepcopy(self.__cD.get(sectionName, {}))

    def getConfigPath(self):
        return self.__configPath
