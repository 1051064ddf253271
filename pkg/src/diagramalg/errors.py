"""Exception types raised by diagramalg."""


class DiagramAlgError(Exception):
    pass


class DimensionError(DiagramAlgError, ValueError):
    """Operands live on different numbers of vertices."""


class DefectError(DiagramAlgError, ValueError):
    """Half diagrams with incompatible defect counts."""


class DomainError(DiagramAlgError, ValueError):
    """Argument outside the domain of a sequence or label set."""


class LabelError(DomainError):
    """Cell label not in the label set of the family."""


class UnsupportedError(DiagramAlgError):
    """Operation not available for an index-only family."""


class ResourceError(DiagramAlgError):
    """Enumeration would exceed the configured bound."""
