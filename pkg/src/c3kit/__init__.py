"""Mine readability contexts for method parameters, judge test inputs against
them, and synthesize context-satisfying string inputs."""

__version__ = "0.1.0"
