"""qshear: quaternion shearlet transforms on periodic 2D grids."""

from .quaternion import (
    Quaternion,
    SymplecticPair,
    qconj,
    qinner,
    qmul,
    qnorm,
    qnorm2,
    symplectic_recompose,
    symplectic_split,
)
from .qft import (
    FieldPairing,
    QField,
    cconvolve,
    check_op,
    energy,
    pair,
    qconvolve,
    qft_forward,
    qft_inverse,
    symplectic_fft,
    symplectic_ifft,
    tilde_op,
)
from .shearlet import (
    AdmissibilityTable,
    GeneratorSpec,
    SamplingGrid,
    ShearParams,
    admissibility_classical,
    atom_spectrum,
    classical_transform,
    make_matrices,
)
from .qst import (
    CoefficientVolume,
    MoyalReport,
    QGeneratorSpec,
    admissibility_q,
    covariance_suite,
    moyal,
    qst_decompose,
    qst_forward,
    qst_inverse,
)
from .uncertainty import (
    UncertaintyReport,
    heisenberg,
    log_inequality_constant,
    log_uncertainty,
    moments,
)
from .verify import run_verification

__version__ = "0.1.0"
