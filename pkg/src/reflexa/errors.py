"""Exception root shared by every reflexa package.

Each package defines its own subclasses next to the code that raises
them; catching ``ReflexaError`` catches all of them.
"""

from __future__ import annotations


class ReflexaError(Exception):
    """Base class for errors raised by reflexa."""
