"""Shared test helpers: an enumeration oracle independent of the library.

The oracle builds H(n) by recursion on the last digit of a word, without
touching the single-step-reduction machinery it is used to check.
"""

from functools import lru_cache

from hbgraphs.words import shortlex_key


@lru_cache(maxsize=None)
def oracle_expansions(n: int) -> tuple[str, ...]:
    """All hyperbinary expansions of n, shortlex-sorted."""
    if n == 0:
        return ("",)
    out = []
    for d in (0, 1, 2):
        if d <= n and (n - d) % 2 == 0:
            m = (n - d) // 2
            if m == 0:
                if d:
                    out.append(str(d))
            else:
                out.extend(u + str(d) for u in oracle_expansions(m))
    return tuple(sorted(out, key=shortlex_key))


@lru_cache(maxsize=None)
def cached_graph(n: int):
    from hbgraphs.graphs import build_graph

    return build_graph(n)


@lru_cache(maxsize=None)
def cached_embed(n: int):
    from hbgraphs.blocks import embed

    return embed(n)
