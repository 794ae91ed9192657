"""Negative-control switch for the verification harness.

Setting ``STACKYCOVERS_MUTATE`` to one of :data:`MUTATIONS` deliberately breaks
the matching closed-form shortcut, so ``stackycovers verify`` can prove that the
oracle suite notices. Never set it outside tests.
"""
import os

ENV_VAR = "STACKYCOVERS_MUTATE"

MUTATIONS = (
    "torsor",
    "taut",
    "pic_stack",
    "pic_index",
    "coarse_pic",
    "lattice_index",
    "witness",
    "zlt13",
    "strata_p1",
)


def active(name: str) -> bool:
    return os.environ.get(ENV_VAR, "") == name
