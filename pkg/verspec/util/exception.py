"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations


class VerspecException(Exception):
    """
    A VerspecException.

    Raised for every invalid input to the engine: malformed rings, mixed rings,
    classes of the wrong degree, unknown strata, unsupported bases.

    A failing identity is not an exception, it is a verdict.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args)
        self.message = str(args[0]) if args else ""

    def __str__(self):
        return f"[VerspecException] {self.message}"


class UsageError(VerspecException):
    """
    Invalid run configuration (command line flags or configuration file).

    The command line maps it to exit code 2.
    """

    def __str__(self):
        return f"[UsageError] {self.message}"


def raiser(exception: str | Exception):
    """
    Utility function to raise errors after an "or".

    Examples:

        >>> {'O': 2}.get('O') or raiser('Unknown stratum')
        2

        >>> {'O': 2}.get('Q') or raiser('Unknown stratum: Q')  # doctest: +IGNORE_EXCEPTION_DETAIL
        Traceback (most recent call last):
        ...
        verspec.util.exception.VerspecException: [VerspecException] Unknown stratum: Q

    Inspired by https://mail.python.org/pipermail/python-ideas/2014-November/029921.html

    Args:
        exception: in case of a string, raises a VerspecException

    Returns:
        raises the given exception or a VerspecException
    """
    if isinstance(exception, Exception):
        raise exception
    else:
        raise VerspecException(str(exception))


if __name__ == "__main__":

    try:
        try:
            raise ValueError("constant term is 2")
        except Exception as ex:
            raise VerspecException(ex)

    except VerspecException as pe:

        print("caught : ", pe)
