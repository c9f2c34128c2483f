"""Canonical text form for ring, Weyl and Witt elements.

Terms are listed in decreasing order of (d-power, y_pow, e_part, x_part);
the output parses back to the same element under the session's parser.
"""

from __future__ import annotations

from .expolyring import ExpoMonomial, ExpoPoly
from .scalars import Scalar


def _coords(v) -> str:
    return ",".join(str(c) for c in v)


def monomial_text(m: ExpoMonomial, k: int = 0) -> str:
    parts = []
    if m.y_pow == 1:
        parts.append("Y")
    elif m.y_pow:
        parts.append(f"Y^{m.y_pow}")
    if any(m.e_part):
        parts.append(f"E({_coords(m.e_part)})")
    if any(m.x_part):
        parts.append(f"X({_coords(m.x_part)})")
    if k == 1:
        parts.append("D")
    elif k:
        parts.append(f"D^{k}")
    return "*".join(parts)


def _term_text(c: Scalar, mono: str, lone: bool):
    """Return (negative, body) for coefficient c times the monomial text."""
    simple = len(c.num) == 1
    neg = simple and c.sign() < 0
    if neg:
        c = -c
    if not mono:
        s = str(c)
        if not simple and not lone:
            s = f"({s})"
        return neg, s
    if c.is_one():
        return neg, mono
    s = str(c)
    if not simple:
        s = f"({s})"
    return neg, f"{s}*{mono}"


def format_terms(items) -> str:
    """``items``: list of (Scalar, monomial_text) already in print order."""
    if not items:
        return "0"
    lone = len(items) == 1
    out = ""
    for i, (c, mono) in enumerate(items):
        neg, body = _term_text(c, mono, lone)
        if i == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def print_canonical(obj) -> str:
    from .weylalg import WeylElement
    from .wittalg import WittElement

    if isinstance(obj, WittElement):
        obj = obj.as_weyl()
    if isinstance(obj, WeylElement):
        keys = sorted(obj.terms, key=lambda km: (km[1], km[0]), reverse=True)
        return format_terms([(obj.terms[km], monomial_text(km[0], km[1])) for km in keys])
    if isinstance(obj, ExpoPoly):
        keys = sorted(obj.terms, reverse=True)
        return format_terms([(obj.terms[m], monomial_text(m)) for m in keys])
    if isinstance(obj, Scalar):
        return str(obj)
    raise TypeError(f"cannot print {type(obj).__name__}")
