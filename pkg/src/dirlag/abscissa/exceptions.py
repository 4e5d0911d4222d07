class AbscissaError(Exception):
    def __repr__(self):
        return "<{:s} type> object at address 0x{:x}".format(type(self).__name__, id(self))

    def __str__(self):
        return "Abscissa Error"


class TailBoundUnreachable(AbscissaError):
    def __init__(self, reason):
        self.__reason = reason

    def __str__(self):
        return "Tail Bound Unreachable: {:s}".format(self.__reason)


class ClassificationInconclusive(AbscissaError):
    def __init__(self, limit, target, band):
        self.limit = limit
        self.target = target
        self.band = band

    def __str__(self):
        return "Cannot separate f'(sigma+) ~ {:.6g} from -1/w = {:.6g} within {:.3g}".format(
            self.limit, self.target, self.band
        )


class BracketFailure(AbscissaError):
    def __init__(self, reason):
        self.__reason = reason

    def __str__(self):
        return "Bracket Failure: {:s}".format(self.__reason)
