"""Exception types shared across the package.

Every domain error raised by the library derives from TropsingError so
callers (and the CLI) can separate domain failures from genuine bugs.
"""


class TropsingError(Exception):
    """Base class for all domain errors."""


# -- exact linear algebra ---------------------------------------------------

class NotACircuit(TropsingError):
    """The given points are not a circuit (minimally dependent set)."""


class NoSuchDependency(TropsingError):
    """No combination of the points lies in the span of the prior set."""


class NotUnique(TropsingError):
    """The dependency modulo the prior span is not unique up to scalar."""


class ZeroCoefficient(TropsingError):
    """Every dependency modulo the prior span kills some point."""


# -- simplex ----------------------------------------------------------------

class NotInSimplex(TropsingError):
    """Point is not a lattice point of the simplex at hand."""


class BadIndices(TropsingError):
    """Projection indices out of range or in the wrong order."""


# -- dual subdivisions / paths ----------------------------------------------

class EmptyDomain(TropsingError):
    """Weight function has an empty domain."""


class OutsideHull(TropsingError):
    """Evaluation point lies outside the convex hull of the domain."""


class TooFewPoints(TropsingError):
    """Not enough points for the requested construction."""


class EmptySet(TropsingError):
    """The queried point set is empty."""


# -- graded circuits ----------------------------------------------------------

class LevelDependent(TropsingError):
    """A level of a graded circuit is linearly dependent."""


class DependencyMissing(TropsingError):
    """A level has no dependency over the span of earlier levels."""


class DependencyNotUnique(TropsingError):
    """A level's dependency over earlier levels is not unique up to scalar."""


class ZeroCoefficientInRelation(TropsingError):
    """Every dependency of a level has a vanishing coefficient."""


class BadLevelIndex(TropsingError):
    """Level index out of range."""


class CenterFiber(TropsingError):
    """Min-sections are undefined on the fiber of the projected center."""


class EmptyFiber(TropsingError):
    """The fiber of the requested point contains no lattice points."""


# -- enumeration --------------------------------------------------------------

class ContainsExcludedPoint(TropsingError):
    """The triangulated region contains the excluded point."""


class PreconditionViolated(TropsingError):
    """Center/point data does not match the requested construction."""


class OutOfSimplex(TropsingError):
    """A constructed point falls outside the simplex."""


class HypothesesViolated(TropsingError):
    """Gluing hypotheses (span shape, elementary type) do not hold."""


# -- counting / real counts ---------------------------------------------------

class OutOfRadius(TropsingError):
    """Argument outside the convergence disk of the generating function."""


class PathDegenerate(TropsingError):
    """The lattice path is too degenerate for sign propagation."""


class UnsupportedConfiguration(TropsingError):
    """Sign bookkeeping for this configuration is ambiguous; refusing to guess."""


class TooLarge(TropsingError):
    """Exhaustive sweep would exceed the supported instance size."""


class CentersCollide(TropsingError):
    """Multi-nodal centers must have pairwise distinct last coordinates."""
