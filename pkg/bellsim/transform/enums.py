"""Transformation-law enums."""

from enum import IntEnum


class Branch(IntEnum):
    """The four half-open sub-intervals on which the law has a closed form.

    For deltabar >= 0 they are [-pi, d-pi), [d-pi, 0), [0, d), [d, pi);
    for deltabar < 0 they are [-pi, d), [d, 0), [0, d+pi), [d+pi, pi).
    """

    FIRST = 1
    SECOND = 2
    THIRD = 3
    FOURTH = 4
