"""Cross-validation batteries, one per area, run by ``interlacepy check``."""

from . import delta_suite, euler_suite, interlace_suite, isotropic_suite, plane_suite

SUITE_REGISTRY = {
    "interlace": interlace_suite.run_suite,
    "euler": euler_suite.run_suite,
    "plane": plane_suite.run_suite,
    "isotropic": isotropic_suite.run_suite,
    "delta": delta_suite.run_suite,
}
