"""Exception hierarchy with machine-readable codes and CLI exit codes."""

from __future__ import annotations


class NavMapError(Exception):
    """Base error carrying a stable code and the pipeline stage that raised it."""

    exit_code = 1

    def __init__(self, code: str, message: str, stage: str | None = None):
        super().__init__(message)
        self.code = code
        self.stage = stage

    def __str__(self) -> str:
        prefix = f"[{self.stage}] " if self.stage else ""
        return f"{prefix}{self.code}: {super().__str__()}"


class MaskError(NavMapError):
    """Unreadable input raster or a mask violating a load-time invariant."""

    exit_code = 2


class CorridorError(NavMapError):
    """No corridor run falls inside the configured width window."""

    exit_code = 3


class RouteError(NavMapError):
    """Start and target are not connected in the navigation graph."""

    exit_code = 4


class LandmarkError(NavMapError):
    """A door or the start marker could not be attached to the skeleton."""

    exit_code = 5


class GraphError(NavMapError):
    """Graph construction hit an inconsistency, e.g. an unlabeled junction."""

    exit_code = 1
