"""Finite subgroups of U(2): construction, pseudoreflections and Molien series."""
from .matrices import UnitaryMatrix2, eigendata, is_pseudoreflection
from .su2 import GeneratorError, SU2Subgroup, closure, su2_group, su2_subgroup
from .duval import (
    TYPE_TAGS,
    DuValSpec,
    ElementRecord,
    FiniteU2Group,
    InvalidSpec,
    PrimitivePseudoreflection,
    binary_dihedral_group,
    cyclic_product_group,
    duval_group,
    enumerate_groups_of_order,
    gamma_finite_closed_form,
    group_from_generators,
    primitive_pseudoreflection_set,
    scalar_cyclic_group,
    su2_cyclic_group,
)
from .molien import (
    MolienData,
    molien_coefficients,
    molien_denominator,
    molien_matrix_oracle,
    molien_real,
    molien_series,
    quadratic_dimension,
    typeIII_closed_form,
    typeIIIprime_closed_form,
    typeIIIprime_printed_form,
)
