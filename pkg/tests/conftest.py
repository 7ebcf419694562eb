import os
import sys
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from colorcas.algebra import normal_order  # noqa: E402
from colorcas.catalog import build  # noqa: E402
from colorcas.scalars import parse_scalar  # noqa: E402

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


@lru_cache(maxsize=None)
def entry(name, m=None, n=None):
    return build(name, m=m, n=n)


def named_table(alg, table):
    """{(name, name): text} -> {(index, index): scalar}"""
    return {(alg.index[a], alg.index[b]): parse_scalar(v, alg.n) for (a, b), v in table.items()}


def nonzero(table):
    return {k: v for k, v in table.items() if not v.is_zero()}


def words_to_quad(alg, words):
    raw = [(parse_scalar(c, alg.n), [alg.index[x] for x in w]) for c, w in words]
    return normal_order(alg, raw)


def deg(alg, text):
    return alg.ctx.parse(text)


@pytest.fixture
def z3():
    return entry("z32-sl2")


@pytest.fixture
def q2():
    return entry("qn", n=2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    ran = any("test_acceptance" in r.nodeid for key in ("passed", "failed", "xfailed")
              for r in terminalreporter.stats.get(key, []))
    if mod is None or not ran:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
