"""Exception hierarchy shared by every layer of the package."""


class FusionKitError(Exception):
    """Base class for all errors raised by fusionkit."""


class OrderBoundExceeded(FusionKitError):
    pass


class DegreeMismatch(FusionKitError):
    pass


class NotASubgroup(FusionKitError):
    pass


class NotAPGroup(FusionKitError):
    pass


class NotNormal(FusionKitError):
    pass


class SearchBoundExceeded(FusionKitError):
    pass


class UnknownName(FusionKitError):
    pass


class NotStronglyClosed(FusionKitError):
    pass


class NoDecomposition(FusionKitError):
    """Alperin decomposition search came up empty (never expected for saturated systems)."""
