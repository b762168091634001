"""L2-invariants of arithmetic locally symmetric spaces."""

from ._l2bs import (
    CertificateFailure,
    Error,
    InvalidInput,
    PreconditionFailed,
    Unsupported,
    __version__,
    corner_strata,
    describe_group,
    estimate_density,
    isotropy,
    ns_bound,
    olbrich_profile,
    parabolics,
    pipeline,
    restrict,
    run_cli,
    torsion_verdict,
)

__all__ = [
    "CertificateFailure",
    "Error",
    "InvalidInput",
    "PreconditionFailed",
    "Unsupported",
    "__version__",
    "corner_strata",
    "describe_group",
    "estimate_density",
    "isotropy",
    "ns_bound",
    "olbrich_profile",
    "parabolics",
    "pipeline",
    "restrict",
    "run_cli",
    "torsion_verdict",
]
