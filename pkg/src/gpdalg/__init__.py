"""Exact structure theory for groupoid algebras at desk scale.

The package decomposes the algebra of a finite groupoid into matrix
blocks over isotropy group algebras, decides Noetherian, Artinian, and
semisimple for the result, and applies the same machinery to Leavitt
path algebras of small graphs and to finite inverse semigroup
algebras.  Every structural claim can be re-derived by exhaustive
checks and, for semisimplicity, by an independent brute-force radical
computation.
"""

from .errors import (
    InternalCheckError,
    LaurentOverflowError,
    OracleBudgetError,
    ParseError,
    RingMismatchError,
)
from .rings import (
    GaloisField,
    Integers,
    Laurent,
    ModularIntegers,
    Product,
    Q,
    Rationals,
    RingElement,
    RingPredicates,
    Z,
    laurent_variable,
    parse_ring_descriptor,
    render_ring_descriptor,
    ring_predicates,
)
from .group_algebra import (
    BlockMatrix,
    BlockShape,
    FiniteGroupTable,
    GroupAlgebraElement,
    IntegerGroup,
)
from .groupoid import (
    FiniteGroupoid,
    Orbit,
    OrbitSummary,
    StructuredGroupoid,
    Violation,
    orbits,
    parse_groupoid,
    render_groupoid,
    structured_from_finite,
    validate,
)
from .constructions import (
    action_groupoid,
    cyclic_table,
    disjoint_union,
    group_groupoid,
    klein_table,
    pair_groupoid,
    product_with_group,
    symmetric_table,
)
from .algebra import (
    AlgebraElement,
    Decomposition,
    VerificationReport,
    convolve,
    decompose,
    parse_element_literal,
    phi,
    phi_inv,
    verify_isomorphism,
)
from .verdicts import (
    RadicalReport,
    Verdict,
    radical_oracle,
    verdicts,
)
from .leavitt import (
    Cycle,
    ExitWitness,
    Graph,
    GraphDecomposition,
    Lasso,
    SinkPath,
    as_finite_groupoid,
    boundary_paths,
    condition_ne,
    enumerate_cycles,
    generator_images,
    graph_groupoid,
    is_arrow,
    leavitt_verdicts,
    parse_graph,
    path_start,
    prepend_edge,
    render_graph,
    render_path,
    verify_leavitt_relations,
)
from .isg import (
    InverseSemigroup,
    isg_verdicts,
    maximal_subgroup,
    natural_partial_order,
    parse_isg,
    render_isg,
    semigroup_algebra_iso,
    underlying_groupoid,
)
from .report import AnalysisReport, render_report_machine, render_report_text

__version__ = "1.0.0"
