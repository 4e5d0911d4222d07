"""
    Outcome of one identity check.

    Verifiers never raise on a failed identity. They return CheckResult entries carrying
    the first failing index and both sides, serialized, so a report doubles as a
    counterexample.
"""


class CheckResult(object):
    __slots__ = ("name", "passed", "index", "lhs", "rhs", "details")

    def __init__(self, name, passed, index=None, lhs=None, rhs=None, details=None):
        assert isinstance(name, str), "name expected to be str. Got {:s}".format(repr(name))
        assert isinstance(passed, bool), "passed expected to be bool. Got {:s}".format(repr(passed))
        assert index is None or isinstance(index, int), "index expected to be int. Got {:s}".format(repr(index))
        self.name = name
        self.passed = passed
        self.index = index
        self.lhs = None if lhs is None else str(lhs)
        self.rhs = None if rhs is None else str(rhs)
        self.details = dict(details) if details else {}

    @classmethod
    def success(cls, name, **details):
        return cls(name, True, details=details)

    @classmethod
    def failure(cls, name, index, lhs, rhs, **details):
        return cls(name, False, index, lhs, rhs, details)

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return "<CheckResult {:s}: {:s}>".format(self.name, "pass" if self.passed else "FAIL at {}".format(self.index))

    def to_dict(self):
        result = {"check": self.name, "passed": self.passed}
        if not self.passed:
            result["index"] = self.index
            result["lhs"] = self.lhs
            result["rhs"] = self.rhs
        if self.details:
            result["details"] = self.details
        return result


def all_passed(checks):
    return all(check.passed for check in checks)


def first_failure(checks):
    for check in checks:
        if not check.passed:
            return check
    return None


def serialize_scalar(value):
    """
        JSON friendly form: exact scalars as their string, numeric reals as floats and
        complex values as [real, imag].
    """
    if isinstance(value, complex):
        return value.real if value.imag == 0 else [value.real, value.imag]
    if isinstance(value, float):
        return value
    return str(value)
