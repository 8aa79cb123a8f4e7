"""Exception types shared across the package.

InputError covers anything a user can fix (bad files, bad values, bad
flags) and maps to CLI exit code 2.  SolverError covers internal failures
(optimizer did not converge, contract violations) and maps to exit code 3.
"""


class SiteRankError(Exception):
    pass


class InputError(SiteRankError, ValueError):
    pass


class SolverError(SiteRankError, RuntimeError):
    pass
