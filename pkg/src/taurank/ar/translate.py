import logging

from taurank.ar.nakayama import nakayama_complex
from taurank.exceptions import InvariantViolation
from taurank.modules.constructions import dual
from taurank.modules.constructions import kernel
from taurank.presentations.complex import min_presentation


from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from taurank.modules.representation import Representation


logger = logging.getLogger(__name__)


def tau(module: 'Representation') -> 'Representation':
    """
    The Auslander-Reiten translate, from the exact sequence
    ``0 -> τM -> νP1 -> νP0`` of a minimal presentation.
    """
    presentation = min_presentation(module)
    translate, _ = kernel(nakayama_complex(presentation))
    # P1 vanishes exactly for projective modules
    if translate.is_zero != presentation.p1.is_zero:
        raise InvariantViolation(
            f'τ of {module!r} is {translate!r} although P1 is '
            f'P{presentation.p1}'
        )
    logger.debug('τ %r = %r', module, translate)
    return translate


def tau_minus(module: 'Representation') -> 'Representation':
    """ ``τ⁻ M = D τ_{A^op} D M``. """
    return dual(tau(dual(module)))
