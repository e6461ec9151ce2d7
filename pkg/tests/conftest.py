from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

import cycledec as cd

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def multigraphs(draw, min_n=1, max_n=8, max_m=14):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return cd.MultiGraph(1, [])
    m = draw(st.integers(0, max_m))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pairs, min_size=m, max_size=m))
    return cd.MultiGraph(n, edges)


@st.composite
def eulerian_graphs(draw, max_n=10, max_extra=3):
    n = draw(st.integers(2, max_n))
    extra = draw(st.integers(0, max_extra))
    seed = draw(seeds)
    return cd.gen_random_eulerian(n, extra, seed)


@st.composite
def built_graphs(draw, max_n=10):
    n = draw(st.integers(2, max_n))
    seed = draw(seeds)
    return cd.gen_class_G(n, seed, max_leaf=2)[0]
