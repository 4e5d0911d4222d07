import logging
import sys
from dirlag.helpers import logger_module_name

_log = logging.getLogger(logger_module_name(__file__))

# Scalar modes
EXACT = "exact"
NUMERIC = "numeric"
MODES = (EXACT, NUMERIC)

# Numeric comparisons (relative)
NUMERIC_TOLERANCE = 1e-9

# Fixed point stopping rule: max-norm < FIXED_POINT_TOLERANCE * (1 + max|c|)
FIXED_POINT_TOLERANCE = 1e-14
FIXED_POINT_EXTRA_ITERATIONS = 2

# Abscissa numerics
DIVERGENCE_THRESHOLD = 1e6
MAX_CUTOFF = 10 ** 6
INITIAL_CUTOFF = 64
DERIVATIVE_PROBE_DEPTH = 40
GOLDEN_SECTION_TOLERANCE = 1e-11
ROOT_TOLERANCE = 1e-14
EVALUATION_TOLERANCE = 1e-13

# Default run configuration, overridden by the command line
default_configs = {
    "order": 16,
    "mode": EXACT,
    "w": "1",
    "seed": None,
    "tolerance": NUMERIC_TOLERANCE,
    "max_cutoff": MAX_CUTOFF,
    "logLevel": 'DEBUG' if sys.flags.debug else 'INFO',
}

# Configuration of the current run. default_configs holds the command line defaults only.
active_configs = dict(default_configs)


def initialise(configs):
    assert isinstance(configs, dict), "configs expected to be dict. Got {:s}".format(repr(configs))
    global NUMERIC_TOLERANCE, MAX_CUTOFF

    active_configs.clear()
    active_configs.update(default_configs)
    for key in configs:
        if key in default_configs and configs[key] is not None:
            active_configs[key] = configs[key]

    NUMERIC_TOLERANCE = float(active_configs["tolerance"])
    MAX_CUTOFF = int(active_configs["max_cutoff"])
    _log.debug(
        "Configurations:\n{:s}".format(
            "".join(list(("  {}: {}\n".format(key, active_configs[key]) for key in active_configs)))
        )
    )
