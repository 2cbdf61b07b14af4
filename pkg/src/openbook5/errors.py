"""Exception hierarchy shared by the library, CLI and HTTP service."""


class OpenBookError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidExponent(OpenBookError):
    """Brieskorn exponent tuple is malformed (entry < 2 or too short)."""


class InvalidIndex(OpenBookError):
    """Coordinate index outside the exponent tuple."""


class NonSquare(OpenBookError):
    """A square matrix was required (monodromy acting on a lattice)."""


class MatrixTooLarge(OpenBookError):
    """Matrix dimension exceeds the OPENBOOK_MAX_MATRIX cap."""


class UnsupportedAssembly(OpenBookError):
    """The Mayer-Vietoris case analysis does not cover the given groups.

    This signals that the implemented argument does not apply, not that
    the manifold fails to exist.
    """


class NonCoprime(OpenBookError):
    """No isotopy parameter exists: rotated exponent shares a factor."""


class GridTooCoarse(OpenBookError):
    """Profile grid has too few points for finite differences."""


class NotAlmostContact(OpenBookError):
    """Target class forces W3 != 0, hence no almost contact structure."""


class ChernParityMismatch(OpenBookError):
    """Chern data incompatible with the spin type of the target."""


class MultipleXSummands(OpenBookError):
    """A prime decomposition may contain at most one X-type summand."""
