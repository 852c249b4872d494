# Germ Engine Enums Module

from enum import Enum
from typing import List


class Variable(Enum):
    """Spatial variables of the plane."""
    X = 'x'
    Y = 'y'

    @classmethod
    def parse(cls, value) -> 'Variable':
        """Accept a Variable or its letter."""
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


class Restriction(Enum):
    """Curve a two-variable series is restricted to before a growth report."""
    NONE = 'none'
    X0 = 'x0'
    DIAGONAL = 'diag'

    @classmethod
    def all_restrictions(cls) -> List[str]:
        """Get all restriction values as a list."""
        return [restriction.value for restriction in cls]


class GrowthTarget(Enum):
    """Series the `growth` command reports on."""
    GENERATOR = 'generator'
    TRANSPORT = 'transport'
    WHAT = 'what-series'

    @classmethod
    def all_targets(cls) -> List[str]:
        """Get all target values as a list."""
        return [target.value for target in cls]


class GrowthTrend(Enum):
    """Divergence-evidence vocabulary; never a verdict."""
    GEOMETRIC_BOUNDED = 'geometric-bounded'
    INCREASING_ROOT_TEST = 'increasing root-test'
    SUPER_GEOMETRIC = 'super-geometric trend'


class OutputFormat(Enum):
    """Output formats of the command line."""
    TEXT = 'text'
    JSON = 'json'
    CSV = 'csv'

    @classmethod
    def all_formats(cls) -> List[str]:
        """Get all format values as a list."""
        return [fmt.value for fmt in cls]
