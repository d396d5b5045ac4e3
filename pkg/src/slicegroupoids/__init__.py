"""Finite groupoids: slices, induced functors and their kernels, action groupoids and coset spaces."""
from __future__ import annotations

from .action import (
    ActionGroupoid,
    action_groupoid,
    check_hom_action_laws,
    embed_slice_co,
    embed_slice_contra,
    embeddings,
    hom_action,
    hom_action_map,
    opposite,
    source_functor_action,
    source_functor_slice,
)
from .builders import (
    cyclic_group,
    dihedral_group,
    direct_product,
    disjoint_union,
    group_homomorphisms,
    group_library,
    one_object_from_table,
    pair_groupoid,
    permutation_group,
    quaternion_group,
    random_groupoid,
    symmetric_group_3,
)
from .coset import (
    CosetActionGroupoid,
    CosetClass,
    CosetRelation,
    SlicedCosetGroupoid,
    coset_action_groupoid,
    coset_relation,
    projection,
    rho_H_map,
    rho_H_obj,
    sliced_coset_groupoid,
    source_functor_coset,
    source_functors_and_diagram,
)
from .functor import (
    GroupoidFunctor,
    Verdict,
    check_essentially_surjective,
    check_faithful,
    check_full,
    compose_functors,
    identity_functor,
    is_full_at,
    validate_functor,
)
from .gdsl import Diagnostic, Document, ParseError, SourceSpan, parse, parse_file, serialize
from .groupoid import (
    Groupoid,
    GroupoidData,
    GroupoidError,
    NotComposable,
    SizeLimitError,
    SubgroupoidSelection,
    UnknownRef,
    ValidationError,
    Violation,
    closure,
    connected_component,
    identities_only,
    is_wide_closed_subgroupoid,
    validate_groupoid,
    whole,
)
from .kernel import image_and_partition, induced_functor, kernel, kernel_report
from .question import BudgetExceeded, explore_question
from .slice import SliceGroupoid, slice_compose, slice_groupoid, slice_hom, zero_object

__version__ = "0.1.0"
