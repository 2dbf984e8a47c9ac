from ..exception import PetalgrowError


class MeshError(PetalgrowError):
    ...


class MeshInputError(MeshError, ValueError):
    ...


class NonManifoldInputError(MeshInputError):
    ...


class InconsistentOrientationError(MeshInputError):
    ...


class DanglingIndexError(MeshInputError):
    ...


class DeadHandleError(MeshError, KeyError):
    ...


class DegenerateFaceError(MeshError, ValueError):
    ...


class IsolatedVertexError(MeshError, ValueError):
    ...


class MeshValidationError(MeshError):
    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


class ObjParseError(MeshInputError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f'line {lineno}: {message}')
        self.lineno = lineno


class EditRefusedError(MeshError):
    """A topology edit was refused; the mesh is left unchanged."""


class BoundaryEdgeError(EditRefusedError):
    ...


class NonConvexQuadError(EditRefusedError):
    ...


class EdgeExistsError(EditRefusedError):
    ...


class LinkConditionViolation(EditRefusedError):
    ...


class WouldBreakBoundaryError(EditRefusedError):
    ...


class FoldOverError(EditRefusedError):
    ...


class NotAnEarTipError(EditRefusedError):
    ...
