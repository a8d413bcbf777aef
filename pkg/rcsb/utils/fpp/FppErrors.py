##
# File:    FppErrors.py
# Date:    14-Sep-2026
#
# Updates:
#  22-Sep-2026 jdw add TruncationWarning for the covariance series
##
"""
Exception hierarchy for the ladder percolation toolkit.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"


class FppError(Exception):
    """Base class for all toolkit errors."""

    def __init__(self, value):
        super(FppError, self).__init__(value)
        self.value = value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return "%s(%r)" % (self.__class__.__name__, self.value)


class ValidationError(FppError):
    """Invalid input parameters."""


class LogSquared(FppError):
    """Product of two series that both carry a log(z) channel."""


class GammaOverflow(FppError):
    """Arithmetic that would produce a non-vanishing gamma**2 term."""


class DivideByZeroSeries(FppError):
    """Division by a series that vanishes through its truncation order."""


class ChannelResidue(FppError):
    """A generating function retained a gamma or log(z) coefficient after assembly."""


class BetaMismatch(FppError):
    """The beta coefficients of a recursion step disagree with their closed form."""


class TableLevelMismatch(FppError):
    """Coefficient tables do not belong to the requested kernel step."""


class DiracEvaluation(FppError):
    """Pointwise evaluation of a kernel layer that is a Dirac measure."""


class DomainError(FppError):
    """Argument outside the domain of a special function."""


class UnknownIdentity(FppError):
    """Unknown summation formula name."""


class TruncationWarning(UserWarning):
    """The truncated covariance series has not settled."""
