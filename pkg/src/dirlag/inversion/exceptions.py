class InversionError(Exception):
    def __repr__(self):
        return "<{:s} type> object at address 0x{:x}".format(type(self).__name__, id(self))

    def __str__(self):
        return "Inversion Error"


class FixedPointNotConverged(InversionError):
    def __init__(self, iterations):
        self.iterations = iterations

    def __str__(self):
        return "Fixed point iteration did not stabilise after {:d} iterations".format(self.iterations)


class SupportViolation(InversionError):
    def __init__(self, index):
        self.index = index

    def __str__(self):
        return "Series has a nonzero coefficient at {:d}, which is not a power of 2".format(self.index)


class InvalidPowerSeries(InversionError):
    def __init__(self, reason):
        self.__reason = reason

    def __str__(self):
        return "Invalid Power Series: {:s}".format(self.__reason)
