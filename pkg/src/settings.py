"""Configuration settings for cluster-lambda."""

import logging
import os
from dotenv import load_dotenv

load_dotenv()

# Logging setup
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL),
    format="%(asctime)s | %(name)s | %(levelname)s | %(message)s",
    datefmt="%H:%M:%S",
)

# Profile selection (see src/config/profiles.yaml)
PROFILE = os.getenv("CLUSTER_LAMBDA_PROFILE", "default")

# Worker pool for suite orchestration
WORKERS = int(os.getenv("CLUSTER_LAMBDA_WORKERS", "4"))

# Quantum dilogarithm evaluation
POLE_DISTANCE = 1e-6  # Refuse evaluation closer than this to the pole lattice
QUAD_LIMIT = 500  # Subinterval limit for scipy.integrate.quad on the rays
QUAD_EPSABS = 1e-14
ARC_NODES = 64  # Gauss-Legendre nodes on the half-circle arc
COMPACT_TAIL = 1e-18  # Truncation target for compact product tails

# Quantum torus
DEFAULT_SERIES_ORDER = 8
DEFAULT_MATRIX_ORDERS = (5, 7, 11)
MATRIX_DIMENSION_CAP = 4096

# Operator grids
GRID_1D_POINTS = 8192
GRID_1D_EXTENT = 120.0  # Box length; samples span [-60, 60)
GRID_2D_POINTS = 512
GRID_2D_EXTENT = 30.0
HBAR_RANGE = (0.2, 2.0)
LEAKAGE_THRESHOLD = 1e-8  # Boundary mass fraction that triggers an accuracy warning
MODULAR_DIM = 16  # Truncation of each q-Weyl pair in the Λ=+1 pentagon

# Randomised suites
RANDOM_SEED = 0
