from dataclasses import dataclass
from dataclasses import field as dataclass_field
from fractions import Fraction


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    """
    A path in a quiver, stored in the "after" convention.

    ``arrows`` lists arrow indices so that ``arrows[0]`` is traversed
    last: ``a*b`` is ``(a, b)`` and runs from ``source(b)`` to
    ``target(a)``. Trivial paths carry their vertex in both ends.
    """

    arrows: tuple[int, ...]
    source: int
    target: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    @classmethod
    def trivial(cls, vertex: int) -> 'Path':
        return cls((), vertex, vertex)

    def compose(self, other: 'Path') -> 'Path | None':
        """ ``self * other``: first ``other``, then ``self``. """
        if self.source != other.target:
            return None
        return Path(self.arrows + other.arrows, other.source, self.target)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _arrow_index: dict[str, int] = dataclass_field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError('vertex labels must be unique')
        index: dict[str, int] = {}
        for i, arrow in enumerate(self.arrows):
            if arrow.name in index:
                raise ValueError(f'duplicate arrow name: {arrow.name}')
            for vertex in (arrow.source, arrow.target):
                if not 0 <= vertex < len(self.vertices):
                    raise ValueError(
                        f'arrow {arrow.name} uses an undeclared vertex'
                    )
            index[arrow.name] = i
        object.__setattr__(self, '_arrow_index', index)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def vertex_index(self, label: str) -> int:
        try:
            return self.vertices.index(label)
        except ValueError:
            raise KeyError(f'unknown vertex: {label}') from None

    def arrow_index(self, name: str) -> int:
        return self._arrow_index[name]

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_index

    def path(self, names: tuple[str, ...]) -> Path | None:
        """ The path ``names[0]*names[1]*...`` or None if not composable. """
        result: Path | None = None
        for name in reversed(names):
            arrow = self.arrows[self.arrow_index(name)]
            step = Path((self._arrow_index[name],), arrow.source,
                        arrow.target)
            result = step if result is None else step.compose(result)
            if result is None:
                return None
        return result

    def paths_of_length(self, length: int) -> list[Path]:
        """
        All paths of the given length, in a fixed order: a path of
        length k is extended to the left by arrows in declaration order.
        """
        current = [Path.trivial(v) for v in range(self.vertex_count)]
        for _ in range(length):
            current = [
                Path((a,) + path.arrows, path.source, arrow.target)
                for path in current
                for a, arrow in enumerate(self.arrows)
                if arrow.source == path.target
            ]
        return current

    def label(self, path: Path) -> str:
        if not path.arrows:
            return f'e{self.vertices[path.source]}'
        return '*'.join(self.arrows[a].name for a in path.arrows)

    def opposite(self) -> 'Quiver':
        return Quiver(
            self.vertices,
            tuple(Arrow(a.name, a.target, a.source) for a in self.arrows)
        )


@dataclass(frozen=True)
class RelationPoly:
    """ A linear combination of parallel paths of length at least two. """

    terms: tuple[tuple[Fraction, Path], ...]

    @property
    def source(self) -> int:
        return self.terms[0][1].source

    @property
    def target(self) -> int:
        return self.terms[0][1].target
