from .annihilator import annihilator
from .annihilator import is_faithful
from .annihilator import is_sincere
from .constructions import cokernel
from .constructions import direct_sum
from .constructions import dual
from .constructions import image
from .constructions import injective
from .constructions import kernel
from .constructions import power
from .constructions import projective
from .constructions import radical_of
from .constructions import simple
from .constructions import socle
from .constructions import top
from .constructions import zero_module
from .decomposition import ProjDecomp
from .hom import hom_basis
from .hom import hom_dim
from .homological import ext1_dim
from .homological import injective_envelope
from .homological import proj_dim
from .homological import projective_cover
from .homological import ProjectiveDimension
from .homological import syzygy
from .io import load_module
from .io import module_from_json
from .iso import is_direct_summand
from .iso import iso_test
from .morphism import Morphism
from .morphism import rank_of
from .representation import act
from .representation import Representation

__all__ = (
    'Morphism',
    'ProjDecomp',
    'ProjectiveDimension',
    'Representation',
    'act',
    'annihilator',
    'cokernel',
    'direct_sum',
    'dual',
    'ext1_dim',
    'hom_basis',
    'hom_dim',
    'image',
    'injective',
    'injective_envelope',
    'is_direct_summand',
    'is_faithful',
    'is_sincere',
    'iso_test',
    'kernel',
    'load_module',
    'module_from_json',
    'power',
    'proj_dim',
    'projective',
    'projective_cover',
    'radical_of',
    'simple',
    'socle',
    'syzygy',
    'top',
    'zero_module',
)
