"""Session-wide caches for the expensive generators."""

from functools import lru_cache

from rp4tri import constructions, designs

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def c1():
    return constructions.c1_pipeline()


@lru_cache(maxsize=None)
def c2():
    return constructions.c2_pipeline()


@lru_cache(maxsize=None)
def c3():
    return constructions.c3_pipeline()


@lru_cache(maxsize=None)
def k6():
    return designs.build_k6()


@lru_cache(maxsize=None)
def rp4_k6():
    return constructions.rp4_from_k6(k6())
