"""Exact computations with modules, complexes, silting and tilting objects over
finite-dimensional bound quiver algebras."""
from .algebra import (BoundQuiverAlgebra, Quiver, Relation, algebra_info, build_algebra, dual_numbers,
                      linear_a2, opposite, semisimple)
from .bridge import (ComplexAlgebra, RepClassification, canonical_cotilting, canonical_tilting, classify,
                     complex_algebra, ext_transport, from_complex, make_special, silting_to_tilting,
                     tilting_to_silting, to_complex)
from .complexes import (ChainComplex, ChainMap, GradedHomTable, HomComplex, cohomology, cone, dualize_complex,
                        hom_table, shift, stalk)
from .decompose import decompose, is_indecomposable
from .errors import *  # noqa: F401,F403
from .homological import (ExceedsCap, ext_dim, global_dimension, injdim, min_proj_resolution, pd)
from .linalg import Field, PrimeField, Rationals
from .minimal import MinimalModel, decompose_complex, minimal_model
from .modules import (Representation, RepMorphism, direct_sum, dualize, hom_space, injective_rep,
                      projective_rep, regular_module, simple_rep, standard_modules)
from .silting import (AisleWitness, SiltingReport, aisle_witness, cosilting_class_member,
                      enumerate_two_term_silting, intermediate_window, is_cosilting, is_n_silting,
                      is_presilting, is_silting, silting_class_member, silting_equivalent)
from .tilting import TiltingReport, is_cotilting, is_tilting

__version__ = "0.1.0"
