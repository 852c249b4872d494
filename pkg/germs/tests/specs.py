"""Spec builders shared by the tests."""

import json

from src.invariants import GermSpec
from src.series import parse_series2


def spec_from_text(delta: str, w: str, order: int) -> GermSpec:
    return GermSpec(parse_series2(delta, order), parse_series2(w, order), order)


def spec_json(delta: str, w: str, order: int) -> str:
    return json.dumps(spec_from_text(delta, w, order).to_dict())
