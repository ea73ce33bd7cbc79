"""Uniform verdict record returned by every decision procedure."""

PASS_CERTIFIED = "PASS_CERTIFIED"
PASS_SAMPLED = "PASS_SAMPLED"
FAIL = "FAIL"

_STATUSES = (PASS_CERTIFIED, PASS_SAMPLED, FAIL)


class Verdict:
    """Outcome of a check.

    status      one of PASS_CERTIFIED / PASS_SAMPLED / FAIL
    witness     structured payload; on FAIL this is the exact counterexample,
                on PASS it may carry derived data (e.g. an underlying matroid)
    certificate short tag naming the rule that certified a PASS
    effort      counters (samples examined, relations checked, ...)
    """

    __slots__ = ("status", "witness", "certificate", "effort")

    def __init__(self, status, witness=None, certificate=None, effort=None):
        if status not in _STATUSES:
            raise ValueError(f"bad verdict status {status!r}")
        self.status = status
        self.witness = witness
        self.certificate = certificate
        self.effort = dict(effort) if effort else {}

    @property
    def passed(self):
        return self.status != FAIL

    @property
    def failed(self):
        return self.status == FAIL

    def __repr__(self):
        bits = [self.status]
        if self.certificate:
            bits.append(f"certificate={self.certificate}")
        if self.witness is not None:
            bits.append(f"witness={self.witness!r}")
        return f"Verdict({', '.join(bits)})"


def certified(certificate, witness=None, effort=None):
    return Verdict(PASS_CERTIFIED, witness=witness, certificate=certificate, effort=effort)


def sampled(witness=None, effort=None):
    return Verdict(PASS_SAMPLED, witness=witness, effort=effort)


def failed(witness, effort=None):
    return Verdict(FAIL, witness=witness, effort=effort)
