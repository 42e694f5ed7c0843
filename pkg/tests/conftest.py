import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from nblab import BasisKind, BasisSelection, GramStore, assemble_gram, sieve_moebius


@pytest.fixture(scope="session")
def shared_store():
    """One Gram store for the whole run.

    The expensive part of every distance test is the closed-form entry fill;
    assembling the full-basis pairs up to 300 once keeps the suite inside its
    runtime budget while every test still exercises the real assembly path
    (cache hits go through the same ensure()).
    """
    store = GramStore()
    threads = min(8, os.cpu_count() or 1)
    assemble_gram(300, BasisSelection(BasisKind.ALL), store, threads=threads)
    return store


@pytest.fixture(scope="session")
def moebius_table():
    return sieve_moebius(10_000)
