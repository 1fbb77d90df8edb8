"""Symplectic spaces over finite fields, their orthogonality graph and frame complex."""

from .ff import FieldElement, FieldSpec, arith, elements, make_field
from .symp import SympSpace, Subspace, space, psi, project, circ, orth_complement, radical_dim, is_nondegenerate
from .planes import Plane, PlaneSet, canonical_plane, enumerate_planes, classify, case_census
from .graph import OrthoGraph, build_graph, components_and_diameter, walk_vector, empirical_mu, spectrum_certificate
from .frames import enumerate_frames, euler_characteristic, boundary_matrices, betti

__version__ = "0.1.0"
