# -*- coding: utf-8 -*-
"""Settings."""

# Third-Party Imports
from scipy import constants

# Physical Constants
HBAR = constants.hbar  # J s
BOLTZMANN = constants.k  # J / K
SPEED_OF_LIGHT = constants.c  # m / s

# Device Defaults (SI)
DEFAULT_REFRACTIVE_INDEX = 1.48
DEFAULT_MASS = 10e-12  # kg
DEFAULT_RADIUS = 1.1e-3  # m
DEFAULT_WAVELENGTH = 0.78e-6  # m
DEFAULT_OMEGA_M = 5.0e7  # rad / s

# Rate Defaults (units of omega_m)
DEFAULT_KAPPA = 0.44
DEFAULT_GAMMA_M = 3.5e-3
DEFAULT_J = 0.0
DEFAULT_EPSILON = 2000.0
DEFAULT_N_BAR_M = 0.0
DEFAULT_DELTA_C = 0.5

# Integrator
DEFAULT_TOLERANCE = 1e-8
MAX_TOLERANCE = 1e-2
MIN_STEP = 1e-12  # 1 / omega_m

# Metrology
PURITY_TOLERANCE = 1e-6
SINGULAR_VALUE_CUTOFF = 1e-10
MAX_TRUNCATED_SINGULAR_VALUES = 4

# Steady State
STEADY_RELATIVE_CHANGE = 0.01
STEADY_TRAILING_FRACTION = 0.1
STEADY_INITIAL_HORIZON = 20.0
STEADY_HORIZON_CAP = 200.0

# Oracle
MIN_FOCK_DIMENSION = 2
MAX_FOCK_DIMENSION = 16
MAX_ORACLE_STEP = 1e-2
TRUNCATION_LEAK_THRESHOLD = 1e-4

# Reinforcement Learning
DEFAULT_ACTION_BOUNDS = (-1.5, 1.5)
DEFAULT_BAND_HZ = (-4000.0, 4000.0)
DEFAULT_GRID_POINTS = 9
DEFAULT_EPISODE_STEPS = 10
DEFAULT_STEP_DURATION = 2.0  # 1 / omega_m
DEFAULT_REWARD_SCALE = 1e17
MIN_REWARD_MAGNITUDE = 1e-6
SNAPSHOT_FORMAT_VERSION = 1

# File Extensions
CSV_EXTENSION = ".csv"
DAT_EXTENSION = ".dat"
JSON_EXTENSION = ".json"

# Defaults
DEFAULT_CSV_DELIMITER = ","
DEFAULT_CSV_DIALECT = "excel"
DEFAULT_CSV_NEWLINE = ""
DEFAULT_CSV_QUOTECHAR = '"'
DEFAULT_DAT_DELIMITER = " "
DEFAULT_FILE_ENCODING = "utf-8"
DEFAULT_JSON_INDENT = 2

# Environment
THREADS_ENVIRONMENT_VARIABLE = "GYRO_QFI_THREADS"
MANIFEST_FILENAME = "manifest.json"
DIAGNOSTICS_FILENAME = "diagnostics.json"
