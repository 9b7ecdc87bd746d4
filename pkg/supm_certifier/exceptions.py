#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""Exceptions for the SUPM certifier."""

from supm_certifier._i18n import _


class SupmException(Exception):
    """Base SUPM certifier exception.

    Subclasses define a ``message`` template which is formatted with the
    keyword arguments given to the constructor.
    """
    message = _("SUPM certifier failure: %(reason)s")

    def __init__(self, msg=None, **kwargs):
        self.kwargs = kwargs
        if msg is None:
            # Ensure kwargs has 'reason' if not provided
            if 'reason' not in kwargs and 'error' in kwargs:
                kwargs['reason'] = kwargs['error']
            try:
                msg = self.message % kwargs
            except (KeyError, TypeError):
                msg = self.message
        self.msg = str(msg)
        super(SupmException, self).__init__(self.msg)

    def __str__(self):
        return self.msg


class ArithmeticDomainError(SupmException):
    """Raised when an exact operation is undefined for its operands."""
    message = _("Arithmetic error: %(reason)s")


class DivisionByZero(ArithmeticDomainError):
    """Raised on inversion of zero or division by the zero polynomial."""
    message = _("Division by zero: %(reason)s")


class ZeroPolynomialError(ArithmeticDomainError):
    """Raised when an operation needs a nonzero polynomial."""
    message = _("Operation %(operation)s is undefined for the zero "
                "polynomial")


class ConstantPolynomialError(ArithmeticDomainError):
    """Raised when an operation needs a nonconstant polynomial."""
    message = _("Operation %(operation)s needs a nonconstant polynomial")


class PolyParseError(SupmException):
    """Base class for polynomial input errors; carries the offset."""
    message = _("Cannot parse polynomial at position %(position)s: "
                "%(reason)s")

    def __init__(self, msg=None, position=0, **kwargs):
        self.position = position
        super(PolyParseError, self).__init__(msg=msg, position=position,
                                             **kwargs)


class PolySyntaxError(PolyParseError):
    message = _("Syntax error at position %(position)s: %(reason)s")


class MultipleVariablesError(PolyParseError):
    message = _("Variable %(found)s at position %(position)s conflicts "
                "with variable %(expected)s; exactly one variable is "
                "permitted")


class InvalidExponentError(PolyParseError):
    message = _("Invalid exponent at position %(position)s: %(reason)s")


class DegreeLimitError(PolyParseError):
    message = _("Degree %(degree)s at position %(position)s exceeds the "
                "limit %(limit)s")


class StructureError(SupmException):
    """Raised when a polynomial has no usable critical structure."""
    message = _("No critical structure: %(reason)s")


class DegreeTooLow(StructureError):
    message = _("Polynomial of degree %(degree)s has no critical structure; "
                "degree at least 2 is required")


class InsufficientCriticalPoints(StructureError):
    message = _("Operation %(operation)s needs at least %(needed)s distinct "
                "critical points, found %(found)s")


class FamilyError(SupmException):
    message = _("Polynomial family failure: %(reason)s")


class UnknownFamily(FamilyError):
    message = _("Unknown polynomial family %(family)s; known families: "
                "%(known)s")


class FamilyParameterError(FamilyError):
    """Raised when family parameters violate a constraint."""
    message = _("Invalid parameters for family %(family)s: %(constraint)s "
                "(excluded set: %(excluded)s)")

    def __init__(self, family=None, constraint=None, excluded=None):
        self.family = family
        self.constraint = constraint
        self.excluded = excluded or {}
        super(FamilyParameterError, self).__init__(
            msg=None, family=family, constraint=constraint,
            excluded=_format_excluded(self.excluded))


class LemmaPreconditionError(SupmException):
    message = _("Lemma %(lemma)s precondition violated: %(reason)s")


class UrsParamsError(SupmException):
    message = _("Invalid unique range set parameters: %(reason)s")


def _format_excluded(excluded):
    if not excluded:
        return '{}'
    parts = []
    for name in sorted(excluded):
        values = ', '.join(sorted(str(v) for v in excluded[name]))
        parts.append('%s: {%s}' % (name, values))
    return '; '.join(parts)
