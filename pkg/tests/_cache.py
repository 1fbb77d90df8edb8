"""Memoised planes and graphs shared across test modules."""

import functools

from sympframe import graph as gr
from sympframe.planes import enumerate_planes
from sympframe.symp import space


@functools.lru_cache(maxsize=None)
def planes_for(q, n, r=0):
    return enumerate_planes(space(q, n, r))


@functools.lru_cache(maxsize=None)
def graph_for(q, n):
    return gr.build_graph(space(q, n), planes_for(q, n))
