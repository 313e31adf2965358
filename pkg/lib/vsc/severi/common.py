#
# Copyright 2024-2026 Ghent University
#
# This file is part of vsc-severi,
# originally created by the HPC team of Ghent University (http://ugent.be/hpc/en),
# with support of Ghent University (http://ugent.be/hpc),
# the Flemish Supercomputer Centre (VSC) (https://www.vscentrum.be),
# the Flemish Research Foundation (FWO) (http://www.fwo.be/en)
# and the Department of Economy, Science and Innovation (EWI) (http://www.ewi-vlaanderen.be/en).
#
# https://github.com/hpcugent/vsc-severi
#
# vsc-severi is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation v2.
#
# vsc-severi is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with vsc-severi.  If not, see <http://www.gnu.org/licenses/>.
#
"""
Common between the algebra, cubic, geometry and roots packages
"""
import importlib
import logging
import os
import pkgutil
from fractions import Fraction

from vsc.utils.exceptions import LoggedException
from vsc.utils.missing import get_subclasses


class SeveriError(LoggedException):
    """Base class for all errors raised by vsc-severi"""
    LOC_INFO_TOP_PKG_NAMES = ['vsc']


class ModelMismatchError(SeveriError):
    """Operands belong to different models, or have the wrong number of coordinates"""


class TagMismatchError(SeveriError):
    """Composition elements over different algebras"""


class GenericityError(SeveriError):
    """Non-generic input; callers are expected to resample"""
    LOGGING_METHOD_NAME = 'debug'


class SamplerError(SeveriError):
    """Retry budget exhausted"""


class RootSystemError(SeveriError):
    """Invalid root system type or rank"""


class FixtureError(SeveriError):
    """Fixture missing or unreadable"""


def rational(value):
    """
    Return value as an exact Fraction.

    Strings like '3/4', ints and Fractions are accepted; floats are refused (no rounding, ever).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise SeveriError("Refusing non-exact scalar %r", value)
    return Fraction(value)


def fmt_rational(value):
    """Exact text form of a Fraction: '3', '-1/2'"""
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def load_plugins(pkg):
    """Import all modules in the directory of package pkg, so all subclasses are registered"""
    for _, modulename, _ in pkgutil.walk_packages([os.path.dirname(pkg.__file__)]):
        fullname = f"{pkg.__name__}.{modulename}"
        logging.debug("loading plugin module %s", fullname)
        importlib.import_module(fullname)


def filtered_subclasses(klass):
    """All subclasses of klass, without the HIDDEN ones (abstract bases)"""
    return [c for c in get_subclasses(klass) if not c.HIDDEN]


def what_class(requested, klass, checker):
    """
    Return the subclass of klass for which classmethod checker accepts requested, and all candidates.

    @param requested: name to look for
    @param klass: base class
    @param checker: name of the _is_X_for classmethod
    """
    found = sorted(filtered_subclasses(klass), key=lambda k: k.__name__.lower())
    for candidate in found:
        if getattr(candidate, checker)(requested):
            return candidate, found
    logging.debug("no %s subclass for %s (found %s)", klass.__name__, requested, [k.__name__ for k in found])
    return None, found
