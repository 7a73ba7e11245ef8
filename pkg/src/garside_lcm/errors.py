"""Exception hierarchy shared by the package."""


class GarsideError(Exception):
    """Base class for every error raised by garside_lcm."""


class AlphabetError(GarsideError):
    """A word uses letters outside the alphabet, or two alphabets disagree."""


class WordParseError(AlphabetError):
    def __init__(self, text, position, message):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class PresentationError(GarsideError):
    """Malformed presentation or Coxeter matrix."""


class PresentationParseError(PresentationError):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip() if where else message)


class NotRightComplemented(PresentationError):
    def __init__(self, message, relations=()):
        self.relations = tuple(relations)
        super().__init__(message)


class NotHomogeneous(GarsideError):
    """The operation needs a length-preserving presentation."""


class AmbiguousGcd(GarsideError):
    """Two incomparable maximal common divisors were found."""

    def __init__(self, candidates):
        self.candidates = tuple(candidates)
        super().__init__(f"no unique left-gcd: maximal common divisors {self.candidates}")


class ReversingError(GarsideError):
    pass


class NoNegativePositiveFactor(ReversingError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"no factor s'·t at position {position}")


class ComplementUndefined(ReversingError):
    def __init__(self, s, t):
        self.s = s
        self.t = t
        super().__init__(f"right-complement undefined for letters {s}, {t}")


class ClassificationExhausted(GarsideError):
    """Classifier limits were hit before a definite answer was reached."""

    def __init__(self, result):
        self.result = result
        super().__init__(f"classification exhausted: {result.reason}")


class NotCertified(GarsideError):
    """Completeness of right-reversing could not be certified."""

    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(f"presentation not certified complete: {certificate.status}")


class Diverged(GarsideError):
    """Garside closure hit its limits; ``partial`` holds the state reached."""

    def __init__(self, reason, partial):
        self.reason = reason
        self.partial = partial
        super().__init__(f"Garside closure diverged: {reason}")
