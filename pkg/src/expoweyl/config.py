"""Session configuration: INI loading and construction of the algebra stack.

Recognised keys (all optional)::

    [lattice]
    rank = 2
    embed = 1, s2            ; scalar expressions, first must be 1

    [algebraic]
    s2 = 1, 0, -2            ; monic min-poly coefficients, highest degree first

    [ring]
    p = 1, 1
    variant = constant       ; constant | dynamic
    t_symbol = t
    tau_symbol = tau

    [deformation]
    q_mode = generic         ; classical | generic | root:N
    exp_twist = formal       ; formal | trivial

    [galois]
    layer = s2

    [verma]
    negative = -1; -2

    [symbols]
    extra = lam, mu          ; additional formal transcendentals
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property

from .expolyring import ExpoRing, RingError, Variant
from .lattice import LatticeBasis, LatticeError
from .parser import EvalError, ParseError, parse_scalar
from .repthy import NegativePart, RepError
from .ringmaps import GaloisAction
from .scalars import AlgebraicSymbol, ScalarError, ScalarField
from .weylalg import DeformationConfig, WeylAlgebra, WeylError

_SCHEMA = {
    "lattice": {"rank", "embed"},
    "algebraic": None,  # any key
    "ring": {"p", "variant", "t_symbol", "tau_symbol"},
    "deformation": {"q_mode", "exp_twist"},
    "galois": {"layer"},
    "verma": {"negative"},
    "symbols": {"extra"},
}

BASE_SYMBOLS = ("t", "tau", "lam")


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class SessionConfig:
    rank: int = 1
    embed: tuple[str, ...] = ("1",)
    algebraic: tuple[tuple[str, tuple[Fraction, ...]], ...] = (("s2", (Fraction(1), Fraction(0), Fraction(-2))),)
    p: tuple[int, ...] = (1,)
    variant: str = "constant"
    t_symbol: str = "t"
    tau_symbol: str = "tau"
    q_mode: str = "classical"
    exp_twist: str = "formal"
    galois_layer: str | None = "s2"
    negative: str = "-1"
    extra_symbols: tuple[str, ...] = field(default_factory=tuple)

    def with_q_mode(self, q_mode: str | None) -> SessionConfig:
        return self if q_mode is None else replace(self, q_mode=q_mode)

    def build(self) -> Session:
        return Session(self)


class Session:
    """The scalar field, lattice, ring and algebra described by a :class:`SessionConfig`."""

    def __init__(self, config: SessionConfig):
        self.config = config
        try:
            self.deformation = DeformationConfig.parse(config.q_mode, config.exp_twist)
            variant = Variant(config.variant)
        except (WeylError, ValueError) as exc:
            raise ConfigError(str(exc)) from None
        e_rank = config.rank + (1 if variant is Variant.DYNAMIC else 0)
        extra_alg, extra_trans = self.deformation.required_symbols(config.rank, e_rank)
        try:
            algebraic = [AlgebraicSymbol(n, c) for n, c in config.algebraic] + extra_alg
            trans = []
            for s in (*BASE_SYMBOLS, config.t_symbol, config.tau_symbol, *config.extra_symbols, *extra_trans):
                if s not in trans and s not in {a.name for a in algebraic}:
                    trans.append(s)
            self.field = ScalarField(algebraic, trans)
        except ScalarError as exc:
            raise ConfigError(str(exc)) from None
        if len(config.embed) != config.rank:
            raise ConfigError(f"embed lists {len(config.embed)} values for rank {config.rank}")
        try:
            embed = tuple(parse_scalar(s, self.field) for s in config.embed)
            self.basis = LatticeBasis(embed)
            self.ring = ExpoRing(self.basis, config.p, variant, config.t_symbol, config.tau_symbol)
            self.algebra = WeylAlgebra(self.ring, self.deformation)
        except (ParseError, EvalError, LatticeError, RingError, ScalarError, WeylError) as exc:
            raise ConfigError(str(exc)) from None
        self.galois = None
        if config.galois_layer:
            if not self.field.is_algebraic(config.galois_layer):
                raise ConfigError(f"galois layer {config.galois_layer!r} is not a configured algebraic symbol")
            if self.field.algebraic_symbol(config.galois_layer).degree != 2:
                raise ConfigError(f"galois layer {config.galois_layer!r} is not quadratic")
            self.galois = GaloisAction(config.galois_layer)
        self._negative_text = config.negative

    @cached_property
    def negative(self) -> NegativePart:
        try:
            return NegativePart.parse(self._negative_text)
        except RepError as exc:
            raise ConfigError(str(exc)) from None


def _coords(text: str):
    return tuple(int(c) for c in text.replace(" ", "").split(",") if c)


def _key_line(lines, section, key):
    cur = None
    for i, line in enumerate(lines, 1):
        s = line.strip()
        if s.startswith("[") and s.endswith("]"):
            cur = s[1:-1].strip()
        elif cur == section and "=" in s and s.split("=", 1)[0].strip() == key:
            return i
    return None


def parse_config_text(text: str, source: str = "<config>") -> SessionConfig:
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"), interpolation=None)
    cp.optionxform = str  # keep symbol names case-sensitive
    try:
        cp.read_string(text, source=source)
    except configparser.ParsingError as exc:
        lineno = exc.errors[0][0] if exc.errors else None
        raise ConfigError("malformed line", lineno) from None
    except configparser.Error as exc:
        raise ConfigError(str(exc).splitlines()[0], getattr(exc, "lineno", None)) from None
    lines = text.splitlines()
    for sec in cp.sections():
        if sec not in _SCHEMA:
            raise ConfigError(f"unknown section [{sec}]", _key_line_section(lines, sec))
        allowed = _SCHEMA[sec]
        if allowed is not None:
            for key in cp[sec]:
                if key not in allowed:
                    raise ConfigError(f"unknown key {key!r} in [{sec}]", _key_line(lines, sec, key))

    kw = {}

    def get(sec, key, conv):
        if not cp.has_option(sec, key):
            return
        raw = cp.get(sec, key)
        try:
            kw[key if sec != "galois" else "galois_layer"] = conv(raw)
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"bad value for {key!r} in [{sec}]: {exc}", _key_line(lines, sec, key)) from None

    get("lattice", "rank", int)
    get("lattice", "embed", lambda s: tuple(x.strip() for x in s.split(",")))
    if cp.has_section("algebraic"):
        alg = []
        for name in cp["algebraic"]:
            try:
                coeffs = tuple(Fraction(c.strip()) for c in cp["algebraic"][name].split(","))
                AlgebraicSymbol(name, coeffs)
            except (ValueError, ScalarError, ZeroDivisionError) as exc:
                raise ConfigError(f"bad algebraic symbol {name!r}: {exc}", _key_line(lines, "algebraic", name)) from None
            alg.append((name, coeffs))
        kw["algebraic"] = tuple(alg)
    get("ring", "p", _coords)
    get("ring", "variant", str.strip)
    get("ring", "t_symbol", str.strip)
    get("ring", "tau_symbol", str.strip)
    get("deformation", "q_mode", str.strip)
    get("deformation", "exp_twist", str.strip)
    get("galois", "layer", lambda s: s.strip() or None)
    get("verma", "negative", str.strip)
    if cp.has_option("symbols", "extra"):
        kw["extra_symbols"] = tuple(s.strip() for s in cp.get("symbols", "extra").split(",") if s.strip())
    if "rank" in kw and "embed" not in kw:
        raise ConfigError("[lattice] rank given without embed", _key_line(lines, "lattice", "rank"))
    if "rank" in kw and "p" not in kw:
        kw["p"] = (1,) + (0,) * (kw["rank"] - 1)
    if "embed" in kw and "rank" not in kw:
        kw["rank"] = len(kw["embed"])
    return SessionConfig(**kw)


def _key_line_section(lines, sec):
    for i, line in enumerate(lines, 1):
        if line.strip() == f"[{sec}]":
            return i
    return None


def load_config(path) -> SessionConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    return parse_config_text(text, str(path))
