##
# File: FileUtil.py
#
# Local file operations for report and table output.
#
# Updates:
#  10-Oct-2026 jdw local paths and file: locators only
#  18-Oct-2026 jdw plain local paths only; hashing through hashlib.new
##

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import hashlib
import logging
import os
import shutil

logger = logging.getLogger(__name__)


class FileUtil(object):
    """Directories, digests and cleanup for report files and configuration on local paths.

    Args:
        workPath (str, optional): directory created on construction when given
    """

    def __init__(self, workPath=None, **kwargs):
        _ = kwargs
        self.__workPath = workPath
        if self.__workPath and self.__workPath != ".":
            self.mkdir(self.__workPath)

    def exists(self, filePath, mode=os.R_OK):
        """True when filePath is present and accessible with mode."""
        return bool(filePath) and os.path.exists(filePath) and os.access(filePath, mode)

    def hash(self, filePath, hashType="md5"):
        """Hex digest of a report file, or None when the file or the digest name is unusable.

        Reproducibility checks compare these digests between runs.
        """
        try:
            fileHash = hashlib.new(hashType)
        except ValueError:
            logger.error("Unsupported hash type %r", hashType)
            return None
        try:
            with open(filePath, "rb") as ifh:
                for chunk in iter(lambda: ifh.read(65536), b""):
                    fileHash.update(chunk)
            return fileHash.hexdigest()
        except OSError as e:
            logger.error("Cannot hash %r with %s", filePath, str(e))
        return None

    def mkdir(self, dirPath, mode=0o755):
        try:
            os.makedirs(dirPath, mode, exist_ok=True)
            return True
        except OSError as e:
            logger.exception("Failing for %s with %s", dirPath, str(e))
        return False

    def mkdirForFile(self, filePath, mode=0o755):
        """Create the parent directory of an output file (no-op for a bare file name)."""
        dirPath = os.path.dirname(filePath)
        return self.mkdir(dirPath, mode) if dirPath else True

    def remove(self, pth):
        """Remove a file or a directory tree; a missing path counts as removed."""
        try:
            if os.path.isdir(pth) and not os.path.islink(pth):
                shutil.rmtree(pth)
            elif os.path.lexists(pth):
                os.unlink(pth)
            return True
        except OSError as e:
            logger.error("Failing for %s with %s", pth, str(e))
        return False
