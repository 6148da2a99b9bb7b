from .scalar import Backend, BackendError, make_backend
from .geom import Circle, GeometryError, Intersection, Line, Point, Ray

__all__ = [
    "Backend",
    "BackendError",
    "make_backend",
    "Circle",
    "GeometryError",
    "Intersection",
    "Line",
    "Point",
    "Ray",
]
