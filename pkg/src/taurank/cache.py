"""
Memoization of data derived from an algebra or a representation.

Both are never mutated once built, so the projectives of an algebra or
the Hom bases out of a representation are stored on the object itself
and go away together with it.
"""
from functools import wraps


from typing import Any, TypeVar, TYPE_CHECKING
if TYPE_CHECKING:
    from collections.abc import Callable
    from typing_extensions import ParamSpec

    _P = ParamSpec('_P')

_T = TypeVar('_T')

ATTRIBUTE = '_derived'

_MISSING = object()


def derived_data(instance: object) -> dict[str, dict[Any, Any]]:
    """ The cached results on ``instance``, grouped by function. """
    data = getattr(instance, ATTRIBUTE, None)
    if data is None:
        data = {}
        setattr(instance, ATTRIBUTE, data)
    return data


def instance_cache() -> 'Callable[[Callable[_P, _T]], Callable[_P, _T]]':
    """
    Caches results on the first positional argument.

    Works for methods as well as for module level functions like
    ``projective(algebra, vertex)``, the remaining arguments form the
    key and need to be hashable.
    """

    def decorating_function(
        user_function: 'Callable[_P, _T]'
    ) -> 'Callable[_P, _T]':

        name = user_function.__qualname__

        @wraps(user_function)
        def wrapper(*args: '_P.args', **kwds: '_P.kwargs') -> _T:
            cache = derived_data(args[0]).setdefault(name, {})
            key = (args[1:], frozenset(kwds.items()))
            result = cache.get(key, _MISSING)
            if result is _MISSING:
                result = user_function(*args, **kwds)
                cache[key] = result
            return result

        return wrapper

    return decorating_function
