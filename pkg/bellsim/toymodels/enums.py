"""Kinds of certificate attached to an infeasible verdict."""

from enum import Enum


class CertificateKind(str, Enum):
    CHSH = "chsh"  # a CHSH-type combination above the local bound
    SIGNALING = "signaling"  # a marginal that depends on the remote setting
