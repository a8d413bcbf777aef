##
# File:    VarianceUtil.py
# Date:    04-Oct-2026
#
# Updates:
#  06-Oct-2026 jdw add overlapping batch means and the chain spread standard error
#  08-Oct-2026 jdw common outer draws across covariance terms, geometric tail bound
##
"""
Two independent estimates of the asymptotic variance in the central limit theorem for ladder
first-passage times: long-run variance of the simulated increment sequence by batch means, and the
series of stationary covariances evaluated with the n-step kernels.

"""

__docformat__ = "google en"
__author__ = "John Westbrook"
__email__ = "john.westbrook@rcsb.org"
__license__ = "Apache 2.0"

import logging
import math
import warnings

import numpy
import scipy.integrate

from rcsb.utils.fpp.FppErrors import TruncationWarning, ValidationError
from rcsb.utils.fpp.KernelUtil import KernelUtil, Quadrature, deltaOne, piTildeSample
from rcsb.utils.fpp.LadderSimUtil import chiClosedForm, exponentialDraws, incrementFunction, integralFSquared

logger = logging.getLogger(__name__)


def conditionalMean(r):
    """E[min(r + Y + Z, X)] for independent Exp(1) edge weights X, Y, Z.

    1 - exp(-r)/4 for r >= 0 and 2 + r - exp(r) (5/4 - r/2) for r < 0.
    """
    scalar = numpy.isscalar(r)
    rr = numpy.asarray(r, dtype=float)
    rp = numpy.maximum(rr, 0.0)
    rn = numpy.minimum(rr, 0.0)
    value = numpy.where(rr >= 0.0, 1.0 - 0.25 * numpy.exp(-rp), 2.0 + rn - numpy.exp(rn) * (1.25 - 0.5 * rn))
    return float(value) if scalar else value


def uFunction(r):
    return conditionalMean(r) - chiClosedForm()


def _nquadOpts(point, upper):
    opts = {"epsabs": 1.0e-13, "epsrel": 1.0e-12}
    if 0.0 < point < upper:
        opts["points"] = [point]
    return opts


def conditionalMeanQuadrature(r, upper=60.0):
    """Adaptive three dimensional quadrature of min(r + y + z, x) exp(-(x + y + z)) over [0, upper]^3."""
    r = float(r)
    opts = [
        lambda y, z, rv: _nquadOpts(rv + y + z, upper),
        lambda z, rv: _nquadOpts(-rv - z, upper),
        _nquadOpts(-r, upper),
    ]
    value, _ = scipy.integrate.nquad(
        lambda x, y, z, rv: min(rv + y + z, x) * math.exp(-(x + y + z)),
        [(0.0, upper)] * 3,
        args=(r,),
        opts=opts,
    )
    return value


def batchMeans(wA, batchSize):
    """Means of consecutive non-overlapping batches along the last axis (a trailing partial batch is dropped)."""
    nb = wA.shape[-1] // batchSize
    if nb < 2:
        raise ValidationError("need at least two batches of size %d, series length %d" % (batchSize, wA.shape[-1]))
    return wA[..., : nb * batchSize].reshape(wA.shape[:-1] + (nb, batchSize)).mean(axis=-1)


def batchMeansEstimate(wA, batchSize):
    """Batch means long-run variance of each row of wA."""
    bmA = batchMeans(numpy.atleast_2d(wA), batchSize)
    return batchSize * numpy.var(bmA, axis=-1, ddof=1)


def overlappingBatchMeansEstimate(wA, batchSize):
    """Overlapping batch means long-run variance of each row of wA.

    n b / ((n - b)(n - b + 1)) times the sum over all n - b + 1 windows of (window mean - overall mean)^2.
    """
    wA = numpy.atleast_2d(wA)
    n = wA.shape[-1]
    if not 1 <= batchSize < n:
        raise ValidationError("overlapping batch size %d must lie in [1, %d)" % (batchSize, n))
    csA = numpy.concatenate([numpy.zeros(wA.shape[:-1] + (1,)), numpy.cumsum(wA, axis=-1)], axis=-1)
    winA = (csA[..., batchSize:] - csA[..., :-batchSize]) / batchSize
    meanA = wA.mean(axis=-1, keepdims=True)
    return n * batchSize / ((n - batchSize) * (n - batchSize + 1.0)) * numpy.sum((winA - meanA) ** 2, axis=-1)


class VarianceReport(object):
    """Asymptotic variance estimates and the per-term covariance series.

    Args:
        nMax (int): truncation of the covariance series
        terms (list): term n = 0 is the stationary variance of f, term n >= 1 the lag n covariance
        termStderrs (list): Monte Carlo standard errors of the terms
        sigma2Kernel (float): kernel series estimate
        sigma2KernelStderr (float): its outer Monte Carlo standard error
        tailBound (float): geometric bound on the neglected part of the series
        geometricDecay (bool): |term(n+1)| <= 0.9 |term(n)| (within 3 stderr) for n >= 3
    """

    def __init__(self, nMax, terms, termStderrs, sigma2Kernel, sigma2KernelStderr, tailBound, geometricDecay):
        self.nMax = nMax
        self.terms = terms
        self.termStderrs = termStderrs
        self.sigma2Kernel = sigma2Kernel
        self.sigma2KernelStderr = sigma2KernelStderr
        self.tailBound = tailBound
        self.geometricDecay = geometricDecay
        self.sigma2Sim = None
        self.sigma2SimStderr = None

    def setSimulation(self, estimate, stderr):
        self.sigma2Sim = estimate
        self.sigma2SimStderr = stderr

    def agreement(self, relTol=0.05, numStderr=3.0):
        """True when the two estimates agree within max(relTol relative, numStderr combined stderr)."""
        if self.sigma2Sim is None:
            return None
        tol = max(relTol * abs(self.sigma2Sim), numStderr * math.hypot(self.sigma2SimStderr, self.sigma2KernelStderr))
        return abs(self.sigma2Kernel - self.sigma2Sim) <= tol

    def toDict(self):
        return {
            "sigma2_kernel": self.sigma2Kernel,
            "sigma2_kernel_stderr": self.sigma2KernelStderr,
            "sigma2_sim": self.sigma2Sim,
            "sigma2_sim_stderr": self.sigma2SimStderr,
            "n_max": self.nMax,
            "tail_bound": self.tailBound,
            "geometric_decay": self.geometricDecay,
            "agreement": self.agreement(),
            "terms": list(self.terms),
        }

    def termRows(self):
        return [{"n": n, "term": t, "stderr": s} for n, (t, s) in enumerate(zip(self.terms, self.termStderrs))]


class VarianceUtil(object):
    """Estimate the asymptotic variance of the ladder first-passage times.

    Args:
        **kwargs: kernelUtil (KernelUtil, optional); chains (int, default 16) independent simulated chains;
                  minSteps (int, default 10**6) smallest admissible simulation length;
                  gridSize (int, default 601) and gridExtent (float, default 12.0) interpolation grid for the
                  conditional expectations
    """

    def __init__(self, **kwargs):
        self.__kernelU = kwargs.get("kernelUtil", None) or KernelUtil()
        self.__chains = int(kwargs.get("chains", 16))
        self.__minSteps = int(kwargs.get("minSteps", 10**6))
        self.__gridSize = int(kwargs.get("gridSize", 601))
        self.__gridExtent = float(kwargs.get("gridExtent", 12.0))

    # --- simulation estimate ---

    def simulateIncrements(self, steps, burnIn, seed):
        """Increments W_k = l_k - l_{k-1} of independent ladders, one row per chain, after burn-in."""
        if steps < self.__minSteps:
            raise ValidationError("simulation needs at least %d steps, got %r" % (self.__minSteps, steps))
        length = steps // self.__chains
        rng = numpy.random.default_rng(seed)
        wA = numpy.empty((self.__chains, length))
        delta = exponentialDraws(rng, self.__chains)
        total = burnIn + length
        block = 4096
        k = 0
        while k < total:
            count = min(block, total - k)
            xyz = exponentialDraws(rng, (3, count, self.__chains))
            for i in range(count):
                x, y, z = xyz[0, i], xyz[1, i], xyz[2, i]
                w = numpy.minimum(delta + y + z, x)
                delta = numpy.minimum(delta + y, x + z) - w
                if k + i >= burnIn:
                    wA[:, k + i - burnIn] = w
            k += count
            logger.debug("Simulated %d of %d increment steps", k, total)
        return wA

    def sigma2SimulationReport(self, steps, burnIn, seed, batchSize=1000):
        """Batch means and overlapping batch means estimates of the long-run variance of the increments.

        Returns:
            dict: sigma2_bm and its stderr from the pooled batch replication, sigma2_obm with its
                  asymptotic stderr, and the chain spread stderr of the batch means estimate
        """
        wA = self.simulateIncrements(steps, burnIn, seed)
        bmA = batchMeans(wA, batchSize)
        dof = bmA.shape[0] * (bmA.shape[1] - 1)
        pooled = float(batchSize * numpy.sum((bmA - bmA.mean(axis=1, keepdims=True)) ** 2) / dof)
        perChain = batchMeansEstimate(wA, batchSize)
        obm = float(numpy.mean(overlappingBatchMeansEstimate(wA, batchSize)))
        n = wA.shape[1]
        rD = {
            "steps": steps,
            "burn_in": burnIn,
            "seed": seed,
            "batch_size": batchSize,
            "chains": wA.shape[0],
            "chi_hat": float(numpy.mean(wA)),
            "sigma2_bm": pooled,
            "sigma2_bm_stderr": pooled * math.sqrt(2.0 / dof),
            "sigma2_bm_chain_stderr": float(numpy.std(perChain, ddof=1) / math.sqrt(len(perChain))) if len(perChain) > 1 else None,
            "sigma2_obm": obm,
            "sigma2_obm_stderr": obm * math.sqrt(4.0 * batchSize / (3.0 * n * wA.shape[0])),
        }
        logger.info("Batch means sigma2 %.5f +/- %.5f (OBM %.5f) batch size %d", pooled, rD["sigma2_bm_stderr"], obm, batchSize)
        return rD

    def sigma2Simulation(self, steps, burnIn, seed, batchSize=1000):
        """Batch means estimate of the asymptotic variance and its standard error."""
        rD = self.sigma2SimulationReport(steps, burnIn, seed, batchSize=batchSize)
        return rD["sigma2_bm"], rD["sigma2_bm_stderr"]

    # --- kernel estimate ---

    def conditionalExpectationGrid(self, m, quad=None):
        """Grid of E[u(Delta_m) | Delta_0 = r'] by quadrature against the m-step kernel (m = 0 is u itself)."""
        gridA = numpy.linspace(-self.__gridExtent, self.__gridExtent, self.__gridSize)
        if m == 0:
            return gridA, uFunction(gridA)
        qd = quad or self.__kernelU.getQuadrature()
        chi = chiClosedForm()
        valA = numpy.empty_like(gridA)
        for i, rp in enumerate(gridA):
            rp = float(rp)
            valA[i] = qd.integrate(lambda rA, rp=rp: self.__kernelU.kn(m, rp, rA) * (conditionalMean(rA) - chi), breakpoints=(0.0, rp, 0.5 * rp))
        return gridA, valA

    def sigma2Kernel(self, nMax, quad=None, mcOuter=200000, seed=None):
        """Covariance series estimate of the asymptotic variance truncated at nMax.

        Term 0 is the closed form stationary variance of f. Term n >= 1 is E[fbar(M_0) I_{n-1}(Delta_1)]
        over the lifted stationary law, where Delta_1 is the deterministic rung difference after one
        step and I_m is the m-step conditional expectation of u on an interpolation grid. All terms share
        the same outer draws.

        Args:
            nMax (int): last covariance lag, 3 <= nMax <= 10
            quad (Quadrature, optional): inner quadrature rule
            mcOuter (int, optional): outer Monte Carlo draws. Defaults to 200000.
            seed (int, optional): outer draw seed

        Returns:
            VarianceReport: estimate, per-term values, tail bound and decay verdict
        """
        if not 3 <= nMax <= 10:
            raise ValidationError("covariance series truncation must lie in [3, 10], got %r" % nMax)
        if quad is not None and not isinstance(quad, Quadrature):
            raise ValidationError("quad must be a Quadrature instance")
        chi = chiClosedForm()
        rng = numpy.random.default_rng(seed)
        rA, xA, yA, zA = piTildeSample(mcOuter, rng)
        fBar = incrementFunction(rA, xA, yA, zA) - chi
        deltaA = deltaOne(rA, xA, yA, zA)
        #
        termL = [integralFSquared() - chi * chi]
        seL = [0.0]
        runningA = numpy.zeros(mcOuter)
        for n in range(1, nMax + 1):
            gridA, valA = self.conditionalExpectationGrid(n - 1, quad=quad)
            prodA = fBar * numpy.interp(deltaA, gridA, valA)
            runningA += prodA
            termL.append(float(numpy.mean(prodA)))
            seL.append(float(numpy.std(prodA, ddof=1) / math.sqrt(mcOuter)))
            logger.debug("Covariance term %d: %.6e (+/- %.1e)", n, termL[-1], seL[-1])
        sigma2 = termL[0] + 2.0 * sum(termL[1:])
        sigma2Se = 2.0 * float(numpy.std(runningA, ddof=1) / math.sqrt(mcOuter))
        #
        decay = all(abs(termL[n + 1]) <= 0.9 * abs(termL[n]) + 3.0 * seL[n + 1] for n in range(3, nMax))
        ratioL = [abs(termL[n]) / abs(termL[n - 1]) for n in range(max(2, nMax - 1), nMax + 1) if termL[n - 1] != 0.0]
        rho = min(0.9, max(ratioL)) if ratioL else 0.9
        tailBound = 2.0 * abs(termL[nMax]) * rho / (1.0 - rho)
        if 2.0 * abs(termL[nMax]) > 0.01 * abs(sigma2):
            warnings.warn("last covariance term %.3e exceeds 1%% of the running total %.4f" % (termL[nMax], sigma2), TruncationWarning)
        logger.info("Kernel sigma2 %.5f +/- %.5f through n = %d (tail bound %.2e)", sigma2, sigma2Se, nMax, tailBound)
        return VarianceReport(nMax, termL, seL, sigma2, sigma2Se, tailBound, decay)

    def varianceReport(self, nMax, steps, burnIn, seed, mcOuter=200000, batchSize=1000, quad=None):
        """Kernel series estimate cross-checked against the batch means simulation estimate."""
        report = self.sigma2Kernel(nMax, quad=quad, mcOuter=mcOuter, seed=seed)
        report.setSimulation(*self.sigma2Simulation(steps, burnIn, seed, batchSize=batchSize))
        return report
