"""
Cycle and one-line notation at the parse/print boundary.

Accepted permutation forms: cycle notation "(1 2 3)(4 5)" (points separated by
whitespace or commas, fixed points omissible once the degree is known), one-line
form "3,1,2", and "()" or "e" for the identity. Cycle types use "1^6 2^3".
"""

import re
from collections import Counter

from caystir.exceptions import NotationError, PermutationError
from caystir.perms.cycle_type import CycleType
from caystir.perms.permutation import Permutation, identity

_CYCLE = re.compile(r"\(([^()]*)\)")
_SEPARATORS = re.compile(r"[\s,]+")
_TYPE_TOKEN = re.compile(r"^(\d+)(?:\^\{?(\d+)\}?)?$")


def _points(body: str) -> list[int]:
    tokens = [token for token in _SEPARATORS.split(body.strip()) if token]
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        msg = f"non-integer point in {body!r}"
        raise NotationError(msg) from e


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """
    Parse cycle or one-line notation.

    Args:
        text: The permutation, e.g. ``"(1 2)(3 4)"`` or ``"2,1,4,3"``.
        degree: Explicit degree; required for cycle notation that omits the
            largest fixed points, inferred from the largest point otherwise.

    Returns:
        Permutation: The parsed permutation.

    Raises:
        NotationError: If the text is malformed or does not fit the degree.
    """
    stripped = text.strip()
    if stripped in {"", "()", "e", "id"}:
        if degree is None:
            msg = "the identity needs an explicit degree"
            raise NotationError(msg)
        return identity(degree)

    try:
        if stripped.startswith("("):
            if _CYCLE.sub("", stripped).strip():
                msg = f"unexpected text outside cycles in {text!r}"
                raise NotationError(msg)
            cycles = [_points(body) for body in _CYCLE.findall(stripped)]
            largest = max((max(cycle) for cycle in cycles if cycle), default=1)
            n = degree if degree is not None else largest
            return Permutation.from_cycles([c for c in cycles if c], n)

        images = _points(stripped)
        if degree is not None and degree != len(images):
            msg = f"one-line form has {len(images)} images, expected {degree}"
            raise NotationError(msg)
        return Permutation(tuple(images))
    except NotationError:
        raise
    except PermutationError as e:
        raise NotationError(str(e)) from e


def format_permutation(g: Permutation) -> str:
    """Cycle notation with fixed points omitted; ``()`` for the identity."""
    return str(g)


def format_one_line(g: Permutation) -> str:
    return ",".join(map(str, g.images))


def parse_cycle_type(text: str, degree: int | None = None) -> CycleType:
    """
    Parse "1^6 2^3" style notation; bare lengths count once.

    When a degree is given, fixed points are added or checked so that the result
    has exactly that degree.
    """
    counts: Counter[int] = Counter()
    for token in _SEPARATORS.split(text.strip()):
        if not token:
            continue
        match = _TYPE_TOKEN.match(token)
        if match is None:
            msg = f"bad cycle-type token {token!r} in {text!r}"
            raise NotationError(msg)
        counts[int(match.group(1))] += int(match.group(2) or 1)
    if not counts and degree is None:
        msg = "empty cycle type needs an explicit degree"
        raise NotationError(msg)
    try:
        if not counts:
            return CycleType.identity(degree or 1)
        parsed = CycleType.from_counts(counts)
        if degree is None:
            return parsed
        if counts[1] and parsed.degree != degree:
            msg = f"cycle type {parsed} has degree {parsed.degree}, expected {degree}"
            raise NotationError(msg)
        return parsed.with_degree(degree)
    except NotationError:
        raise
    except PermutationError as e:
        raise NotationError(str(e)) from e
