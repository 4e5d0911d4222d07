class FamilyError(Exception):
    def __repr__(self):
        return "<{:s} type> object at address 0x{:x}".format(type(self).__name__, id(self))

    def __str__(self):
        return "Convolution Family Error"


class InvalidFamilyValues(FamilyError):
    def __init__(self, reason):
        self.__reason = reason

    def __str__(self):
        return "Invalid Family Values: {:s}".format(self.__reason)


class NotCompletelyMultiplicative(FamilyError):
    def __init__(self, m, n):
        self.m = m
        self.n = n

    def __str__(self):
        return "Twist sequence is not completely multiplicative: c_{:d} != c_{:d} * c_{:d}".format(
            self.m * self.n, self.m, self.n
        )
