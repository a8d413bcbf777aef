##
# File:    LadderSimUtil.py
# Date:    29-Sep-2026
#
# Updates:
#  30-Sep-2026 jdw chunked replicate streams so results do not depend on the worker count
#  02-Oct-2026 jdw add stationary moment and rung difference law checks
#  18-Oct-2026 jdw add the standardized mean verdict to cltCheck
##
"""
Monte Carlo engine for first-passage percolation on the ladder graph with Exp(1) edge weights.

Column k (k = 1..n) carries the bottom rail edge X_k and the top rail edge Y_k between
columns k-1 and k; the rung at column k carries Z_k (Z_0 is the initial rung).

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import math

import multiprocess as multiprocessing
import networkx as nx
import numpy
import scipy.stats

from rcsb.utils.fpp.FppErrors import ValidationError
from rcsb.utils.fpp.KernelUtil import deltaStepSample, piCdf, piTildeSample
from rcsb.utils.fpp.SpecFunUtil import besselJ, hyp2f3

logger = logging.getLogger(__name__)


def exponentialDraws(rng, size):
    """Exp(1) draws by inversion, -log(U) with U in (0, 1]."""
    return -numpy.log(1.0 - rng.random(size))


class LadderSample(object):
    """Edge weights of a ladder with n columns beyond the origin.

    Args:
        n (int): number of columns
        X (list): bottom rail weights X_1..X_n
        Y (list): top rail weights Y_1..Y_n
        Z (list): rung weights Z_0..Z_n
    """

    def __init__(self, n, X, Y, Z):
        self.n = int(n)
        self.X = numpy.asarray(X, dtype=float)
        self.Y = numpy.asarray(Y, dtype=float)
        self.Z = numpy.asarray(Z, dtype=float)
        if self.n < 0 or len(self.X) != self.n or len(self.Y) != self.n or len(self.Z) != self.n + 1:
            raise ValidationError("inconsistent ladder sample sizes for n = %r" % n)
        if numpy.any(self.X <= 0.0) or numpy.any(self.Y <= 0.0) or numpy.any(self.Z <= 0.0):
            raise ValidationError("edge weights must be positive")


class SimRun(object):
    """Per-replicate first-passage times and their summary."""

    def __init__(self, n, replicates, seed, values):
        self.n = n
        self.replicates = replicates
        self.seed = seed
        self.values = values

    @property
    def mean(self):
        return float(numpy.mean(self.values))

    @property
    def variance(self):
        return float(numpy.var(self.values, ddof=1))

    @property
    def stderr(self):
        return math.sqrt(self.variance / len(self.values))


def sampleLadder(n, rng):
    return LadderSample(n, exponentialDraws(rng, n), exponentialDraws(rng, n), exponentialDraws(rng, n + 1))


def dpFirstPassage(sample):
    """First-passage times to (n, 0) and (n, 1) by the column recursion.

    Returns:
        tuple: (l_n, l_n_prime, delta path of length n + 1)
    """
    lv, lp = 0.0, float(sample.Z[0])
    deltaL = [lp - lv]
    for k in range(1, sample.n + 1):
        x, y, z = float(sample.X[k - 1]), float(sample.Y[k - 1]), float(sample.Z[k])
        lv, lp = min(lv + x, lp + y + z), min(lp + y, lv + x + z)
        deltaL.append(lp - lv)
    return lv, lp, deltaL


def firstPassageBatch(n, replicates, rng):
    """First-passage times l_n for independent ladders, vectorized across replicates."""
    lv = numpy.zeros(replicates)
    lp = exponentialDraws(rng, replicates)
    for _ in range(n):
        x, y, z = exponentialDraws(rng, (3, replicates))
        lv, lp = numpy.minimum(lv + x, lp + y + z), numpy.minimum(lp + y, lv + x + z)
    return lv


def ladderGraph(sample):
    gr = nx.Graph()
    gr.add_node((0, 0))
    for k in range(0, sample.n + 1):
        gr.add_edge((k, 0), (k, 1), weight=float(sample.Z[k]))
        if k > 0:
            gr.add_edge((k - 1, 0), (k, 0), weight=float(sample.X[k - 1]))
            gr.add_edge((k - 1, 1), (k, 1), weight=float(sample.Y[k - 1]))
    return gr


def dijkstraOracle(sample):
    """Shortest path weight from (0, 0) to (n, 0) on the full undirected ladder."""
    if sample.n == 0:
        return 0.0
    return float(nx.dijkstra_path_length(ladderGraph(sample), (0, 0), (sample.n, 0), weight="weight"))


def chiClosedForm(summation="fsum"):
    """Percolation rate 3/2 - J_1(2) / (2 J_2(2))."""
    return 1.5 - besselJ(1, 2.0, summation=summation) / (2.0 * besselJ(2, 2.0, summation=summation))


def integralFSquared():
    """Closed form of E[f(M)^2] under the lifted stationary law, (2 J_1(2) - 3 J_0(2) + 2F3(-1) - 1) / J_2(2)."""
    return (2.0 * besselJ(1, 2.0) - 3.0 * besselJ(0, 2.0) + hyp2f3(-1.0) - 1.0) / besselJ(2, 2.0)


def incrementFunction(r, x, y, z):
    """f(m) = min(r + y + z, x), the increment of the bottom rail first-passage time."""
    return numpy.minimum(r + y + z, x)


def _replicateChunk(args):
    n, count, seedSeq = args
    return firstPassageBatch(n, count, numpy.random.default_rng(seedSeq))


class LadderSimUtil(object):
    """Replicated first-passage simulations with deterministic chunked random streams.

    Args:
        **kwargs: threads (int, default 1) worker processes; chunkSize (int, default 500) replicates per random stream
    """

    def __init__(self, **kwargs):
        self.__threads = max(1, int(kwargs.get("threads", 1)))
        self.__chunkSize = int(kwargs.get("chunkSize", 500))

    def runReplicates(self, n, replicates, seed):
        """Simulate l_n for the requested number of replicates.

        The replicate set is split into fixed size chunks, each with its own child stream of
        SeedSequence(seed), so the output is identical for any worker count.

        Returns:
            SimRun: per-replicate first-passage times
        """
        if n < 1 or replicates < 1:
            raise ValidationError("n and replicates must be positive (n=%r replicates=%r)" % (n, replicates))
        numChunks = (replicates + self.__chunkSize - 1) // self.__chunkSize
        childL = numpy.random.SeedSequence(seed).spawn(numChunks)
        argL = [(n, min(self.__chunkSize, replicates - i * self.__chunkSize), childL[i]) for i in range(numChunks)]
        if self.__threads > 1 and numChunks > 1:
            with multiprocessing.Pool(processes=min(self.__threads, numChunks)) as pool:
                resultL = pool.map(_replicateChunk, argL)
        else:
            resultL = [_replicateChunk(args) for args in argL]
        logger.debug("Simulated %d replicates at n = %d in %d chunks", replicates, n, numChunks)
        return SimRun(n, replicates, seed, numpy.concatenate(resultL))

    def rateCheck(self, n, replicates, seed):
        """Monte Carlo l_n / n against the closed form rate with a 3 stderr verdict."""
        chi = chiClosedForm()
        rD = {"chi_closed": chi, "chi_closed_kahan": chiClosedForm(summation="kahan"), "n": n, "replicates": replicates, "seed": seed}
        if replicates <= 0:
            return rD
        run = self.runReplicates(n, replicates, seed)
        rateA = run.values / n
        chiHat = float(numpy.mean(rateA))
        stderr = float(numpy.std(rateA, ddof=1) / math.sqrt(replicates))
        rD.update({"chi_hat": chiHat, "chi_stderr": stderr, "within_3_stderr": abs(chiHat - chi) <= 3.0 * stderr})
        return rD

    def cltCheck(self, n, replicates, seed):
        """Standardized first-passage times (l_n - n chi) / sqrt(n) and normality diagnostics.

        Returns:
            dict: sigma2_hat with its stderr, KS statistic and p-value against N(0, sigma2_hat),
                  the mean of the standardized sample with a 3 stderr verdict, skewness,
                  excess kurtosis and the standardized sample
        """
        chi = chiClosedForm()
        run = self.runReplicates(n, replicates, seed)
        stdA = (run.values - n * chi) / math.sqrt(n)
        s2 = float(numpy.var(stdA, ddof=1))
        m4 = float(numpy.mean((stdA - numpy.mean(stdA)) ** 4))
        ks = scipy.stats.kstest(stdA, "norm", args=(0.0, math.sqrt(s2)))
        rD = {
            "n": n,
            "replicates": replicates,
            "seed": seed,
            "chi_closed": chi,
            "chi_hat": float(numpy.mean(run.values)) / n,
            "mean_standardized": float(numpy.mean(stdA)),
            "mean_stderr": math.sqrt(s2 / replicates),
            "mean_within_3_stderr": abs(float(numpy.mean(stdA))) <= 3.0 * math.sqrt(s2 / replicates),
            "sigma2_hat": s2,
            "sigma2_stderr": math.sqrt(max(m4 - s2 * s2, 0.0) / replicates),
            "ks_stat": float(ks.statistic),
            "p_value": float(ks.pvalue),
            "skewness": float(scipy.stats.skew(stdA)),
            "kurtosis": float(scipy.stats.kurtosis(stdA)),
            "samples": stdA,
        }
        logger.info("CLT check n %d replicates %d sigma2_hat %.5f KS %.4f (p %.3f)", n, replicates, s2, rD["ks_stat"], rD["p_value"])
        return rD

    def sigma2Stability(self, nL, replicates, seed, numStderr=3.0):
        """Compare sigma2_hat across ladder lengths; stable when every pair agrees within numStderr combined stderr.

        Length nL[i] is simulated with seed + i.
        """
        rowL = []
        for ii, n in enumerate(nL):
            rD = self.cltCheck(n, replicates, seed + ii)
            rowL.append({"n": n, "seed": seed + ii, "sigma2_hat": rD["sigma2_hat"], "sigma2_stderr": rD["sigma2_stderr"]})
        stable = True
        for ii, r1 in enumerate(rowL):
            for r2 in rowL[ii + 1 :]:
                if abs(r1["sigma2_hat"] - r2["sigma2_hat"]) > numStderr * math.hypot(r1["sigma2_stderr"], r2["sigma2_stderr"]):
                    stable = False
        return {"rows": rowL, "stable": stable}

    def stationaryMoments(self, numDraws, seed):
        """Monte Carlo E f and E f^2 under the lifted stationary law with standard errors."""
        rng = numpy.random.default_rng(seed)
        fA = incrementFunction(*piTildeSample(numDraws, rng))
        rD = {}
        for ky, vA in [("f", fA), ("f2", fA * fA)]:
            rD[ky] = float(numpy.mean(vA))
            rD[ky + "_stderr"] = float(numpy.std(vA, ddof=1) / math.sqrt(numDraws))
        rD["chi_closed"] = chiClosedForm()
        rD["f2_closed"] = integralFSquared()
        return rD

    def incrementIdentityResidual(self, sample):
        """Largest pathwise defect of l_{k+1} - l_k = f(Delta_k, X_{k+1}, Y_{k+1}, Z_{k+1})."""
        worst = 0.0
        lv, lp = 0.0, float(sample.Z[0])
        for k in range(1, sample.n + 1):
            x, y, z = float(sample.X[k - 1]), float(sample.Y[k - 1]), float(sample.Z[k])
            inc = float(incrementFunction(lp - lv, x, y, z))
            lvNext, lp = min(lv + x, lp + y + z), min(lp + y, lv + x + z)
            worst = max(worst, abs((lvNext - lv) - inc))
            lv = lvNext
        return worst

    def deltaChainLaw(self, steps, burnIn, seed, method="ladder"):
        """KS distance between the empirical law of the rung difference chain after burn-in and the stationary law.

        Args:
            steps (int): retained steps
            burnIn (int): discarded initial steps
            seed (int): random seed
            method (str, optional): "ladder" runs the first-passage recursion on a sampled ladder,
                "kernel" iterates the exact one-step kernel sampler from r = 0. Defaults to "ladder".
        """
        rng = numpy.random.default_rng(seed)
        total = steps + burnIn
        if method == "ladder":
            pathL = dpFirstPassage(sampleLadder(total, rng))[2]
            pathA = numpy.asarray(pathL[burnIn + 1 :])
        elif method == "kernel":
            pathA = self.__kernelPath(total, rng)[burnIn:]
        else:
            raise ValidationError("unknown chain method %r" % method)
        return float(scipy.stats.kstest(pathA, piCdf).statistic)

    def __kernelPath(self, steps, rng):
        pathA = numpy.empty(steps)
        r = 0.0
        for i in range(steps):
            r = deltaStepSample(r, rng)
            pathA[i] = r
        return pathA
