"""Run configuration: a single JSON document describing pairs of filtrations.

Example::

    {
      "ring": {"num_vars": 3},
      "ideals": {"T": "x1*x2, x2*x3, x3*x1", "P": "x2, x3"},
      "pairs": [
        {"name": "triangle", "filtrationI": "sat(T, P)",
         "filtrationJ": "symbolic(T)", "n_min": 1, "n_max": 10}
      ],
      "fit": {"p_max": 6, "d_max": 5, "validation_margin": 2},
      "outputs": "out"
    }

Filtration expressions: ``ordinary(NAME)``, ``symbolic(NAME)``,
``sat(NAME, NAME)``, ``closure(NAME)``, ``closure_of(EXPR)``,
``scaled(EXPR, INT)``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Mapping

from .filtration import (
    Closure,
    ClosureOf,
    FiltrationSpec,
    Ordinary,
    Saturation,
    Scaled,
    Symbolic,
)
from .ring import MonomialIdeal, RingContext, parse_ideal


class ConfigError(ValueError):
    pass


_TOKENS = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\d+)|([(),]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if not m or m.end() == pos:
            raise ConfigError(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


def parse_spec(text: str, ideals: Mapping[str, MonomialIdeal]) -> FiltrationSpec:
    tokens = _tokenize(text)
    pos = 0

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ConfigError(f"unexpected end of expression {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ConfigError(f"expected {expected!r} but found {tok!r} in {text!r}")
        pos += 1
        return tok

    def ideal() -> MonomialIdeal:
        name = take()
        if name not in ideals:
            raise ConfigError(f"unknown ideal name {name!r}")
        return ideals[name]

    def expr() -> FiltrationSpec:
        head = take()
        take("(")
        try:
            if head == "ordinary":
                spec = Ordinary(ideal())
            elif head == "symbolic":
                spec = Symbolic(ideal())
            elif head == "sat":
                base = ideal()
                take(",")
                spec = Saturation(base, ideal())
            elif head == "closure":
                spec = Closure(ideal())
            elif head == "closure_of":
                spec = ClosureOf(expr())
            elif head == "scaled":
                inner = expr()
                take(",")
                factor = take()
                if not factor.isdigit():
                    raise ConfigError(f"scale factor must be an integer, got {factor!r}")
                spec = Scaled(inner, int(factor))
            else:
                raise ConfigError(f"unknown filtration {head!r}")
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(f"invalid filtration {text!r}: {exc}") from None
        take(")")
        return spec

    spec = expr()
    if pos != len(tokens):
        raise ConfigError(f"trailing input in {text!r}")
    return spec


@dataclass(frozen=True)
class PairConfig:
    name: str
    spec_i: FiltrationSpec
    spec_j: FiltrationSpec
    n_min: int
    n_max: int


@dataclass(frozen=True)
class FitConfig:
    p_max: int = 6
    d_max: int = 5
    validation_margin: int = 2


@dataclass(frozen=True)
class RunConfig:
    ring: RingContext
    ideals: dict[str, MonomialIdeal]
    pairs: list[PairConfig]
    fit: FitConfig = field(default_factory=FitConfig)
    outputs: str | None = None


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{what} must be an integer")
    return value


def load_config(data: dict) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    ring_data = data.get("ring")
    if not isinstance(ring_data, dict):
        raise ConfigError("missing 'ring' section")
    num_vars = _int(ring_data.get("num_vars"), "ring.num_vars")
    names = ring_data.get("names")
    try:
        if names is None:
            ring = RingContext.standard(num_vars)
        else:
            if len(names) != num_vars:
                raise ConfigError("ring.names must have num_vars entries")
            ring = RingContext(tuple(names))
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"bad ring: {exc}") from None

    ideals = {}
    for name, text in (data.get("ideals") or {}).items():
        try:
            ideals[name] = parse_ideal(text, ring)
        except (ValueError, TypeError, AttributeError) as exc:
            raise ConfigError(f"ideal {name!r}: {exc}") from None

    pairs = []
    seen = set()
    for i, p in enumerate(data.get("pairs") or []):
        name = p.get("name")
        if not isinstance(name, str) or not re.fullmatch(r"[A-Za-z0-9_.-]+", name):
            raise ConfigError(f"pair {i}: name must be a plain file-name string")
        if name in seen:
            raise ConfigError(f"duplicate pair name {name!r}")
        seen.add(name)
        try:
            spec_i = parse_spec(p["filtrationI"], ideals)
            spec_j = parse_spec(p["filtrationJ"], ideals)
        except KeyError as exc:
            raise ConfigError(f"pair {name!r}: missing {exc}") from None
        except ConfigError as exc:
            raise ConfigError(f"pair {name!r}: {exc}") from None
        n_min = _int(p.get("n_min"), f"pair {name!r}: n_min")
        n_max = _int(p.get("n_max"), f"pair {name!r}: n_max")
        if not 1 <= n_min <= n_max:
            raise ConfigError(f"pair {name!r}: need 1 <= n_min <= n_max")
        pairs.append(PairConfig(name, spec_i, spec_j, n_min, n_max))

    fit_data = data.get("fit") or {}
    fit = FitConfig(
        p_max=_int(fit_data.get("p_max", 6), "fit.p_max"),
        d_max=_int(fit_data.get("d_max", 5), "fit.d_max"),
        validation_margin=_int(fit_data.get("validation_margin", 2), "fit.validation_margin"),
    )
    outputs = data.get("outputs")
    if outputs is not None and not isinstance(outputs, str):
        raise ConfigError("outputs must be a directory path string")
    return RunConfig(ring, ideals, pairs, fit, outputs)


def loads_config(text: str) -> RunConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON: {exc}") from None
    return load_config(data)
