"""lsg-lab: large sum graphs of finite modules.

Build finite modules over Z or Z/n, enumerate their submodule lattices,
construct the graph whose vertices are the nonzero non-large submodules
(edges where the pairwise sum is again non-large), compute exact graph
invariants, and verify a catalog of structural claims over module corpora.
"""

from .modules import (
    Caps,
    DEFAULT_CAPS,
    Element,
    FiniteModule,
    Ideal,
    IncompatibleRingError,
    MismatchedModuleError,
    QuotientModule,
    RingSpec,
    SizeCapError,
    Submodule,
    annihilator_in_module,
    annihilator_in_ring,
    build_module,
    divisors,
    enumerate_submodules,
    format_module_spec,
    generate_submodule,
    parse_module_spec,
    quotient_module,
)

__version__ = "0.1.0"
