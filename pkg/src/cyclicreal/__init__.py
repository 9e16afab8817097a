"""Exact combinatorial models of geometric realization for posets and cyclic sets."""

from .cyclic import DeltaTildeMor, F, G, NablaTildeMor, compose_delta_tilde, compose_nabla, dual, hom_enumerate
from .cyclic_realization import CyclicPoint, cyclic_metric, cyclic_point, homeo_from_product, homeo_to_product, rotate
from .errors import CyclicRealError
from .nerve import enumerate_simplicial_maps, nerve
from .poset import FinitePoset, MonotoneMap, enumerate_monotone_maps, new_poset, product, standard_poset
from .ppset import Embedded, Product, Standard, archimedean_normal_form
from .realization import BaryPoint, StepPoint, cell_complex, from_barycentric, metric, step_point, to_barycentric

__version__ = "0.1.0"
