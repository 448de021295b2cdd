"""Shared test helpers."""

from __future__ import annotations

from typing import Optional

from lexseg import Monomial, parse_monomial


def mono(text: str, n: Optional[int] = None) -> Monomial:
    """Monomial from an exponent CSV, or from letter form when n is given."""
    return parse_monomial(text, n)
