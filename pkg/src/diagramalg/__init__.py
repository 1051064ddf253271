"""Exact computations in the partition algebra and its diagram subalgebras."""

from .diagram import (Diagram, HalfDiagram, SplitData, compose, from_json, identity, involute,
                      is_planar, join, split)
from .errors import (DefectError, DiagramAlgError, DimensionError, DomainError, LabelError,
                     ResourceError, UnsupportedError)
from .families import (FAMILIES, FamilySpec, algebra_dim, cell_dim, cell_labels, contains,
                       enumerate_basis, enumerate_cell_basis, enumerate_halves)
from .linalg import (Element, GramReport, Params, Poly, act_on_cell, gram_det_poly, gram_matrix,
                     is_semisimple_at, multiply, verify_family)
from .wreath import (DecorationAlgebra, WreathDiagram, WreathLabel, cyclic_group, wreath_cell_labels,
                     wreath_dim, wreath_multiply)

__version__ = "0.1.0"
