import linecache
import traceback
from os import environ, getcwd
from pathlib import Path

__pwd = Path(environ.get("PWD", getcwd()))

_MAX_VALUE_LENGTH = 120


def __relative(file_name):
    try:
        return Path(file_name).absolute().relative_to(__pwd)
    except ValueError:
        return Path(file_name)


def __summarise(value):
    # Series, families and results carry a summary(); their full text runs to megabytes.
    summary = getattr(value, "summary", None)
    if callable(summary):
        try:
            return summary()
        except Exception:
            pass
    text = str(value)
    if len(text) > _MAX_VALUE_LENGTH:
        text = text[:_MAX_VALUE_LENGTH - 3] + "..."
    return text


def __frame_lines(frame, line_number, with_locals):
    code = frame.f_code
    owner = frame.f_locals.get("self")
    where = code.co_name if owner is None else "{:s}.{:s}".format(type(owner).__name__, code.co_name)
    lines = [
        "File \"{:s}\", line {:d}, in {:s}".format(str(__relative(code.co_filename)), line_number, where),
        "    " + linecache.getline(code.co_filename, line_number).strip(),
    ]
    if with_locals:
        values = [
            "    {:s} = {:s}".format(name, __summarise(frame.f_locals[name]))
            for name in sorted(code.co_varnames) if name != "self" and name in frame.f_locals
        ]
        if values:
            lines.append("  locals:")
            lines.extend(values)
    return lines


def __detailed_trace(ex_type, ex_value, ex_tb):
    """
        Stack trace with the local values of every frame below the entry point.
    """
    headline = " {:s}: {:s}".format(ex_type.__name__, str(ex_value))
    frames = [
        __frame_lines(frame, line_number, depth > 0)
        for (depth, (frame, line_number)) in enumerate(traceback.walk_tb(ex_tb))
    ]
    width = max([len(headline)] + [len(line) for lines in frames for line in lines])
    rule = "-" * width
    result = [rule, headline, " most recent call last"]
    for lines in frames:
        result.append(rule)
        result.extend(lines)
    result.extend([rule, headline, rule])
    return result


def custom_logging_callback(log_book, level, ex_type, ex_value, ex_tb):
    log_book.log(level, "\n" + "\n".join(__detailed_trace(ex_type, ex_value, ex_tb)))


def logger_module_name(file):
    """
        Logger name of a module: its path relative to the working directory, without suffix.
    """
    location = __relative(file)
    return str(location.with_suffix(""))
