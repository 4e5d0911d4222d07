class SeriesError(Exception):
    def __repr__(self):
        return "<{:s} type> object at address 0x{:x}".format(type(self).__name__, id(self))

    def __str__(self):
        return "Dirichlet Series Error"


class OrderMismatch(SeriesError):
    def __init__(self, first, second):
        self.first = first
        self.second = second

    def __str__(self):
        return "Truncation orders differ: {:d} and {:d}".format(self.first, self.second)


class ModeMismatch(SeriesError):
    def __init__(self, first, second):
        self.first = first
        self.second = second

    def __str__(self):
        return "Scalar modes differ: {:s} and {:s}".format(self.first, self.second)


class NotInD0(SeriesError):
    def __init__(self, constant_term=None):
        self.constant_term = constant_term

    def __str__(self):
        return "Series has a nonzero constant term c_1 = {:s}".format(str(self.constant_term))


class NotUnit(SeriesError):
    def __init__(self, constant_term=None):
        self.constant_term = constant_term

    def __str__(self):
        return "Series constant term c_1 = {:s} is not 1".format(str(self.constant_term))


class InexactShift(SeriesError):
    def __init__(self, shift):
        self.shift = shift

    def __str__(self):
        return "Vertical shift by {:s} leaves the rationals; use numeric mode".format(str(self.shift))
