"""Exact characters of tame modules over osp(2m+1|2n) and osp(2m|2n)."""

import json

from . import _ospkw
from ._ospkw import OspError, run

__all__ = ["OspError", "atypicality", "block_family", "bottom", "character", "classify", "run"]


def _parts(partition):
    if isinstance(partition, str):
        return partition
    return ",".join(str(int(p)) for p in partition)


def classify(algebra, partition, minus=False):
    return json.loads(_ospkw.classify(algebra, _parts(partition), minus))


def character(algebra, partition, minus=False, threads=1, weyl_sum="orbit"):
    return json.loads(_ospkw.character(algebra, _parts(partition), minus, threads, weyl_sum))


def bottom(algebra, partition):
    return json.loads(_ospkw.bottom(algebra, _parts(partition)))


def block_family(algebra, partition):
    return json.loads(_ospkw.block_family(algebra, _parts(partition)))


def atypicality(algebra, partition, minus=False):
    return _ospkw.atypicality(algebra, _parts(partition), minus)
