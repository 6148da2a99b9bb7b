from .svg import EmptyTrace, RenderOptions, to_svg

__all__ = ["EmptyTrace", "RenderOptions", "to_svg"]
