#!/usr/bin/env python3
"""
Steklov Average Toolkit - Configuration
All system settings in one place
"""

import math
import os

from dotenv import load_dotenv

load_dotenv()

# ═══════════════════════════════════════════════════════════
# 📐 DEFAULT GRID (desk scale)
# ═══════════════════════════════════════════════════════════

DEFAULT_GRID = {
    "t0": 0.0,
    "t_end": 1.0,
    "time_points": 257,      # dt = 1/256
    "space_points": 65,      # dx = 1/64 on [0, 1]
    "space_origin": 0.0,
    "space_length": 1.0,
}

# ═══════════════════════════════════════════════════════════
# 🧪 CORPUS (analytic test fields)
# ═══════════════════════════════════════════════════════════

CORPUS_CONFIG = {
    "seed": int(os.getenv("STEKLOV_SEED", "42")),
    "constant": 3.0,
    "sin_omega": 2.0 * math.pi,
    "gauss_center": 0.5,
    "gauss_width": 0.15,
    "step_time": 0.5,
    "step_height": 1.0,
    "cantor_level": 8,
    "cantor_max_level": 12,
    "random_modes": 3,
    "grid_2d_points": 33,    # smoke-test 2-D field, 33 x 33
}

# ═══════════════════════════════════════════════════════════
# ✅ VERIFICATION SWEEPS
# ═══════════════════════════════════════════════════════════

VERIFY_CONFIG = {
    "exponents": ["1", "2", "inf"],
    "window_steps": [1, 8, 64],                   # h in units of dt
    "kernel_window_steps": [1, 2, 8, 64, -1],     # -1 means k = n - 1
    "convergence_steps": [64, 32, 16, 8, 4, 2],   # h halved 5 times from 64 dt
    "ibp_levels": 5,                              # dt halvings for integration by parts
    "weak_form_levels": 3,                        # dx halvings for the pairing identity
    "weak_form_time_slices": 16,                  # time slices the pairing identity is evaluated on
    "bump_center_fraction": 0.4,                  # off-centre bump, as a share of each axis extent
    "bump_radius_fraction": 0.3,
    "pointwise_samples": 5,                       # spatial points for the pointwise-value check
    "random_fields": 100,
    "cantor_levels": [1, 2, 3, 4, 5, 6, 7, 8],
    "jobs": int(os.getenv("STEKLOV_JOBS", "1")),
}

# ═══════════════════════════════════════════════════════════
# 🎯 TOLERANCES
# ═══════════════════════════════════════════════════════════

TOLERANCE_CONFIG = {
    "identity_rtol": 1e-12,       # exact discrete identities, relative to a scale
    "inequality_rtol": 1e-12,     # margin >= -rtol * scale
    "order_floor": 1e-13,         # errors at/below floor * scale are left out of fits
    "uniform_order_window": 0.1,  # fitted order in [0.9, 1.1]
    "lr_order_window": 0.2,
    "terminal_slice_ratio": 0.05, # field counts as nonzero at the right end of I above this share of max|v|
    "step_order_window": 0.15,
    "ibp_order_window": 0.2,
    "weak_form_order_window": 0.3,
    "monotone_slack": 0.05,       # allowed rise between consecutive errors when no order is asserted
    "ae_drop_ratio": 0.25,        # finest-h error must fall below this share of the worst one
    "cantor_discrepancy": 0.99,
}

# ═══════════════════════════════════════════════════════════
# ⚡ AVERAGING KERNEL
# ═══════════════════════════════════════════════════════════

KERNEL_CONFIG = {
    "compensated_window": 10_000,   # k above this uses compensated prefix sums
    "multiple_rtol": 1e-9,          # how close h/dt must be to an integer
}

# ═══════════════════════════════════════════════════════════
# 📄 REPORTS
# ═══════════════════════════════════════════════════════════

REPORT_CONFIG = {
    "suite_version": "1.0.0",
    "default_format": "json",
    "default_path": os.getenv("STEKLOV_REPORT", "steklov_report.json"),
    "csv_columns": [
        "check_id", "field_name", "h", "q", "r", "dt",
        "measured", "bound_or_target", "margin", "tolerance", "passed", "runtime_ms",
    ],
    "max_failures_shown": 20,
}

# ═══════════════════════════════════════════════════════════
# 🔧 SYSTEM SETTINGS
# ═══════════════════════════════════════════════════════════

# Module discovery
CHECK_PACKAGES = ["modules.verify"]

# Logging
LOGGING_CONFIG = {
    "level": os.getenv("STEKLOV_LOG_LEVEL", "WARNING"),
    "show_path": False,
}
