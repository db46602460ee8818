class TilerScopeError(Exception):
    """Base class for every error raised by tilerscope."""


class ConfigError(TilerScopeError, ValueError):
    pass


class IndexOutOfRange(TilerScopeError, IndexError):
    pass


# polyhedron validation

class PolyhedronError(TilerScopeError, ValueError):
    pass


class NonConvex(PolyhedronError):
    pass


class NonPlanarFacet(PolyhedronError):
    pass


class BadIncidence(PolyhedronError):
    pass


class EulerViolation(PolyhedronError):
    pass


# sections and polygons

class GeometryError(TilerScopeError, ValueError):
    pass


class NotASection(GeometryError):
    """The plane does not meet the polyhedron in a polygon."""


class NoRoom(GeometryError):
    """No polyhedron vertex lies strictly on either side of the plane."""


class DegeneratePolygon(TilerScopeError, ValueError):
    pass


class WrongArity(TilerScopeError, ValueError):
    pass


# constructive search

class SearchError(TilerScopeError):
    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class ConstructionFailed(SearchError):
    pass


class WrongValence(SearchError, ValueError):
    pass


class EpsilonTooLarge(SearchError, ValueError):
    pass


class BothTrivial(SearchError):
    pass


# mesh files

class MeshParseError(TilerScopeError, ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class MeshIndexError(TilerScopeError, IndexError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
