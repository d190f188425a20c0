import os
import unittest

import numpy as np

SLOW = os.environ.get("WAVECLUST_SLOW", "") == "1"


class TestCase(unittest.TestCase):
    """Seeds a generator per test and clears the factorization cache."""

    seed = 20240101

    def setUp(self):
        from src.solvers import factorization_cache

        factorization_cache.clear()
        self.rng = np.random.default_rng(self.seed)

    def assertAllClose(self, actual, desired, atol=1e-10, rtol=0.0, msg=""):
        np.testing.assert_allclose(actual, desired, atol=atol, rtol=rtol, err_msg=msg)


def slow(test):
    return unittest.skipUnless(SLOW, "set WAVECLUST_SLOW=1 to run")(test)
