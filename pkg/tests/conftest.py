import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from jorbkit.alphabet import gamma2, gamma3, gamma5  # noqa: E402
from jorbkit.spexpr import Leaf, Node  # noqa: E402
from jorbkit.word import MWord  # noqa: E402

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parents[1]


def words(alphabet=gamma3, min_pairs=1, max_pairs=4):
    n = len(alphabet)
    return st.integers(min_pairs, max_pairs).flatmap(
        lambda k: st.lists(st.integers(0, n - 1), min_size=2 * k, max_size=2 * k)
    ).map(lambda xs: MWord(alphabet, tuple(xs)))


def shells(alphabet=gamma3):
    n = len(alphabet)
    return st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).map(lambda t: MWord(alphabet, t))


def sp_trees(max_leaves=5):
    leaf = st.sampled_from(["C", "R", "L"]).map(lambda k: Leaf(k))
    return st.recursive(
        leaf,
        lambda kids: st.builds(
            lambda op, cs: Node(op, tuple(cs)), st.sampled_from("sp"), st.lists(kids, min_size=2, max_size=3)
        ),
        max_leaves=max_leaves,
    )


@pytest.fixture
def graphs_dir():
    return ROOT / "demos" / "graphs"


ALPHABETS = {"gamma2": gamma2, "gamma3": gamma3, "gamma5": gamma5}
