"""
    Series specifications: one JSON document per line.

        {"N": 8, "mode": "exact", "coeffs": {"2": "1", "3": "-1/2"}}
        {"N": 64, "builtin": "log_zeta"}
        {"N": 32, "builtin": "random_rational", "seed": 7, "params": {"density": 0.5}}

    Exact mode takes rationals as strings so no float ever reaches an exact series.
    N and mode may be left to the command line defaults.
"""

import json
import pathlib
from collections import OrderedDict

from dirlag import globals
from dirlag.polyalg.rational import parse_rational, format_rational
from dirlag.polyalg.exceptions import InvalidRational
from dirlag.dseries.series import DirichletSeries
from dirlag.cli import data_validation
from dirlag.cli.builtins import BUILTINS, builtin
from dirlag.cli.exceptions import SpecParseError, SpecValidationError, UnknownBuiltin

_KEYS = ("N", "mode", "coeffs", "builtin", "params", "seed")


class SeriesSpec(object):
    __slots__ = ("order", "mode", "coeffs", "builtin", "params", "seed")

    def __init__(self, order, mode=globals.EXACT, coeffs=None, builtin=None, params=None, seed=None):
        assert data_validation.is_positive_int(order), "order expected to be a positive int. Got {:s}".format(
            repr(order)
        )
        assert mode in globals.MODES, "mode expected to be one of {:s}. Got {:s}".format(str(globals.MODES), repr(mode))
        assert (coeffs is None) != (builtin is None), "a spec holds either coefficients or a builtin"
        self.order = order
        self.mode = mode
        self.coeffs = None if coeffs is None else OrderedDict(sorted(coeffs.items(), key=lambda item: int(item[0])))
        self.builtin = builtin
        self.params = None if params is None else OrderedDict(sorted(params.items()))
        self.seed = seed

    def __eq__(self, other):
        if not isinstance(other, SeriesSpec):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash(serialize(self))

    def __repr__(self):
        return "SeriesSpec({:s})".format(serialize(self))

    def to_dict(self):
        result = OrderedDict((("N", self.order), ("mode", self.mode)))
        if self.coeffs is not None:
            result["coeffs"] = OrderedDict(self.coeffs)
        else:
            result["builtin"] = self.builtin
            if self.params:
                result["params"] = OrderedDict(self.params)
            if self.seed is not None:
                result["seed"] = self.seed
        return result

    def to_series(self):
        if self.builtin is not None:
            params = dict(self.params or {})
            if self.seed is not None:
                params["seed"] = self.seed
            return builtin(self.builtin, self.order, self.mode, **params)
        return DirichletSeries.from_dict(
            self.order, {int(key): value for (key, value) in self.coeffs.items()}, self.mode
        )


def serialize(spec):
    assert isinstance(spec, SeriesSpec), "spec expected to be SeriesSpec. Got {:s}".format(repr(spec))
    return json.dumps(spec.to_dict())


def _canonical_coefficient(key, value, mode):
    if not data_validation.is_coefficient(value, mode):
        raise SpecValidationError(
            "coefficient {:s} = {:s} is not a valid {:s} value".format(key, repr(value), mode)
        )
    if mode == globals.EXACT:
        try:
            return format_rational(parse_rational(value))
        except InvalidRational as ex:
            raise SpecValidationError(str(ex))
    return value


def _validate(document, require_d0, default_order, default_mode):
    if not isinstance(document, dict):
        raise SpecValidationError("a spec is a JSON object")
    unknown = sorted(set(document) - set(_KEYS))
    if unknown:
        raise SpecValidationError("unknown keys {:s}".format(", ".join(unknown)))

    order = document.get("N", default_order)
    if not data_validation.is_positive_int(order):
        raise SpecValidationError("N must be a positive integer. Got {:s}".format(repr(order)))
    mode = document.get("mode", default_mode or globals.EXACT)
    if mode not in globals.MODES:
        raise SpecValidationError("mode must be one of {:s}. Got {:s}".format(str(globals.MODES), repr(mode)))

    has_coeffs = "coeffs" in document
    has_builtin = "builtin" in document
    if has_coeffs == has_builtin:
        raise SpecValidationError("exactly one of coeffs and builtin must be given")

    if has_builtin:
        name = document["builtin"]
        if name not in BUILTINS:
            raise UnknownBuiltin(name)
        params = document.get("params", {})
        if not isinstance(params, dict) or not all(data_validation.is_parameter_value(v) for v in params.values()):
            raise SpecValidationError("params must map names to plain values")
        seed = document.get("seed")
        if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
            raise SpecValidationError("seed must be an integer. Got {:s}".format(repr(seed)))
        if params:
            # parameter types are only known to the builtin; the seed may still come from --seed
            SeriesSpec(order, mode, builtin=name, params=params, seed=0 if seed is None else seed).to_series()
        return SeriesSpec(order, mode, builtin=name, params=params or None, seed=seed)

    if "params" in document or "seed" in document:
        raise SpecValidationError("params and seed only apply to builtins")
    coeffs = document["coeffs"]
    if not isinstance(coeffs, dict):
        raise SpecValidationError("coeffs must map indices to values")
    canonical = {}
    for (key, value) in coeffs.items():
        if not data_validation.is_index_key(key, order):
            raise SpecValidationError("index {:s} outside 1..{:d}".format(repr(key), order))
        canonical[str(int(key))] = _canonical_coefficient(key, value, mode)
    spec = SeriesSpec(order, mode, coeffs=canonical)
    if require_d0 and not spec.to_series().in_d0():
        raise SpecValidationError("index 1 must be zero for a series in D_0")
    return spec


def parse_spec(text, require_d0=False, default_order=None, default_mode=None, line=1):
    """
        :param line: line number reported by parse errors
    """
    assert isinstance(text, str), "text expected to be str. Got {:s}".format(repr(text))
    try:
        document = json.loads(text)
    except json.JSONDecodeError as ex:
        raise SpecParseError(line + ex.lineno - 1, ex.colno, ex.msg)
    return _validate(document, require_d0, default_order, default_mode)


def parse_specs(text, require_d0=False, default_order=None, default_mode=None):
    """
        Parses one spec per non blank line.
    """
    specs = []
    for (number, content) in enumerate(text.splitlines(), start=1):
        if content.strip():
            specs.append(parse_spec(content, require_d0, default_order, default_mode, number))
    return specs


def load_spec_argument(argument, require_d0=False, default_order=None, default_mode=None):
    """
        Reads the specs behind a --spec argument: inline JSON, or @path to a file holding one
        spec per line.
    """
    if argument.startswith("@"):
        location = pathlib.Path(argument[1:])
        if not location.is_file():
            raise SpecValidationError("spec file {:s} does not exist".format(str(location)))
        text = location.read_text()
    else:
        text = argument
    specs = parse_specs(text, require_d0, default_order, default_mode)
    if not specs:
        raise SpecValidationError("no series spec given")
    return specs
