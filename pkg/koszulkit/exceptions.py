"""Error hierarchy shared by the library and the command line."""


class KoszulkitError(Exception):
    """Base class for every error raised by koszulkit"""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


class InputError(KoszulkitError):
    """Input document or presentation failed validation"""

    code = "input"


class UnknownGeneratorError(InputError):
    code = "unknown-generator"

    def __init__(self, name: str):
        super().__init__(f"relation references undeclared generator '{name}'")
        self.name = name


class InhomogeneousRelationError(InputError):
    code = "inhomogeneous"

    def __init__(self, degrees):
        listed = ", ".join(str(d) for d in sorted(degrees))
        super().__init__(f"inhomogeneous relation: mixes degrees {listed}")
        self.degrees = sorted(degrees)


class OddSquareError(InputError):
    code = "odd-square"

    def __init__(self, name: str):
        super().__init__(
            f"monomial {name}*{name} is an odd square and vanishes identically"
        )
        self.name = name


class DescriptorError(KoszulkitError):
    """A space descriptor violates one of its constraints"""

    code = "descriptor"


class DimensionMismatchError(KoszulkitError):
    code = "dimension"


class NegativeDegreeError(KoszulkitError):
    code = "negative-degree"


class SeriesError(KoszulkitError):
    code = "series"


class ConnectivityError(KoszulkitError):
    code = "connectivity"


class ConfigurationError(KoszulkitError):
    code = "config"


class DifferentialError(KoszulkitError):
    """A constructed differential does not square to zero"""

    code = "differential"
