class PolyAlgError(Exception):
    def __repr__(self):
        return "<{:s} type> object at address 0x{:x}".format(type(self).__name__, id(self))

    def __str__(self):
        return "Polynomial Algebra Error"


class MissingVariable(PolyAlgError):
    def __init__(self, variable):
        self.variable = variable

    def __str__(self):
        return "Variable {:s} has no numeric assignment".format(str(self.variable))


class InexactOperation(PolyAlgError):
    def __init__(self, reason):
        self.__reason = reason

    def __str__(self):
        return "Inexact Operation: {:s}".format(self.__reason)


class InvalidRational(PolyAlgError):
    def __init__(self, text):
        self.text = text

    def __str__(self):
        return "Invalid rational literal: {:s}".format(repr(self.text))
