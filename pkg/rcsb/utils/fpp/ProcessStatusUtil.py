##
# File:    ProcessStatusUtil.py
# Author:  J. Westbrook
# Date:    10-Oct-2026
# Version: 0.001
#
# Updates:
#  18-Oct-2026 jdw flat host record for --provenance; memory in GiB
##
"""
Host and process details recorded with run reports, and the default worker count.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import platform

import numpy
import psutil

logger = logging.getLogger(__name__)

GIB = float(1 << 30)


class ProcessStatusUtil(object):
    def __init__(self, **kwargs):
        pass

    def getCpuCount(self, logical=True):
        """Number of usable processors (at least one); the default size of the replicate worker pool."""
        try:
            return max(1, int(psutil.cpu_count(logical=logical) or 1))
        except Exception as e:
            logger.exception("Failing with %r", str(e))
        return 1

    def getInfo(self):
        """Host record attached to JSON reports written with --provenance.

        Returns:
            dict: host name, platform, python and numpy versions, processor counts, total memory
                  and the resident size of this process (GiB)
        """
        infoD = {
            "hostName": platform.node(),
            "platform": platform.platform(terse=True),
            "pythonVersion": platform.python_version(),
            "numpyVersion": numpy.__version__,
            "cpuCount": self.getCpuCount(),
            "cpuPhysicalCount": self.getCpuCount(logical=False),
        }
        try:
            infoD["memoryTotalGiB"] = round(psutil.virtual_memory().total / GIB, 2)
            infoD["processRssGiB"] = round(psutil.Process().memory_info().rss / GIB, 3)
        except psutil.Error as e:
            logger.warning("Memory details unavailable: %s", str(e))
        return infoD
