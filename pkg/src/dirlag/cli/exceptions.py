class CliError(Exception):
    def __repr__(self):
        return "<{:s} type> object at address 0x{:x}".format(type(self).__name__, id(self))

    def __str__(self):
        return "Command Line Error"


class SpecParseError(CliError):
    def __init__(self, line, column, reason):
        self.line = line
        self.column = column
        self.__reason = reason

    def __str__(self):
        return "Series spec parse error at line {:d}, column {:d}: {:s}".format(self.line, self.column, self.__reason)


class SpecValidationError(CliError):
    def __init__(self, reason):
        self.__reason = reason

    def __str__(self):
        return "Invalid series spec: {:s}".format(self.__reason)


class UnknownBuiltin(CliError):
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return "Unknown builtin series {:s}".format(repr(self.name))
