"""Parse the suite configuration file (seed, size caps, trial counts) that
``interlacepy check`` and the single-input commands read their defaults from."""

import os
from copy import deepcopy

import yaml

from ..eulerian.circuits import DEFAULT_CIRCUIT_CAP
from ..eulerian.transitions import DEFAULT_TRANSITION_CAP
from ..graphs.stats import DEFAULT_ORBIT_CAP
from ..interlace.oracles import DEFAULT_ORACLE_MAX_N
from ..interlace.statesum import DEFAULT_GLOBAL_MAX_N, DEFAULT_STATESUM_MAX_N
from ..isotropic.tutte_martin import DEFAULT_ISOTROPIC_MAX_N

DEFAULT_CONFIG = {
    "seed": 0,
    "caps": {
        "statesum_max_n": DEFAULT_STATESUM_MAX_N,
        "global_max_n": DEFAULT_GLOBAL_MAX_N,
        "oracle_max_n": DEFAULT_ORACLE_MAX_N,
        "orbit_cap": DEFAULT_ORBIT_CAP,
        "transition_cap": DEFAULT_TRANSITION_CAP,
        "circuit_cap": DEFAULT_CIRCUIT_CAP,
        "isotropic_max_n": DEFAULT_ISOTROPIC_MAX_N,
    },
    "suites": {
        "interlace": {
            "trials": 200,
            "max_n": 10,
            "exhaustive_n": 5,
            "global_exhaustive_n": 4,
            "orbit_n": 6,
            "oracle_n": 8,
        },
        "euler": {"trials": 20, "max_n": 5},
        "plane": {"max_edges": 7},
        "isotropic": {"trials": 100, "max_n": 7, "host_max_n": 5},
        "delta": {"trials": 100, "max_n": 7, "vf_search_n": 4, "matroid_max_m": 6},
    },
}


def data_directory():
    """``$INTERLACEPY_PATH/interlacepy-data``, or ``~/interlacepy-data``."""
    if "INTERLACEPY_PATH" in os.environ:
        home_directory = os.environ["INTERLACEPY_PATH"]
    else:
        from os.path import expanduser

        home_directory = expanduser("~")
    return os.path.join(home_directory, "interlacepy-data")


def _merge(defaults, overrides):
    merged = deepcopy(defaults)
    for key, value in (overrides or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class SuiteConfigParser:
    """Read the suite configuration.

    Config file should be under '~/interlacepy-data/interlace-config.yml'

    Config file structure example::

        seed : 7
        caps :
          statesum_max_n : 16
        suites :
          interlace :
            trials : 50
            max_n : 7

    Keys missing from the file keep their defaults; a missing file means all
    defaults.
    """

    def __init__(self, config_file_path=None):
        """
        :param config_file_path: full path to config file,
            Default : ~/interlacepy-data/interlace-config.yml
        """
        if config_file_path is None:
            self.config_file_path = os.path.join(data_directory(), "interlace-config.yml")
        else:
            self.config_file_path = config_file_path

    def get_config(self, conf_file=None):
        """Defaults overlaid with the file content.

        :param conf_file: full path to config file, Default : the parser's file
        :return: dict with ``seed``, ``caps`` and ``suites``
        """
        file_path = conf_file or self.config_file_path
        if not os.path.isfile(file_path):
            return deepcopy(DEFAULT_CONFIG)
        with open(file_path, encoding="utf-8") as config_file:
            config = yaml.load(config_file, Loader=yaml.SafeLoader)
        return _merge(DEFAULT_CONFIG, config)

    def get_caps(self, conf_file=None):
        return self.get_config(conf_file)["caps"]

    def get_suite(self, suite, conf_file=None):
        return self.get_config(conf_file)["suites"][suite]
