"""Built-in group actions on countable ordered sets.

Each family knows its generator labels, how generators act on canonical
state objects, how to enumerate group elements (identity first, inverses
adjacent) for metric construction, and which order the action preserves.

State objects are exact and hashable (integer tuples, strings, Fractions)
so that orbit deduplication and order comparisons never depend on floats.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from .errors import StateSpaceError, UnknownFamilyError, ConfigError

IDENTITY = "1"


@dataclass(frozen=True)
class GeneratorSystem:
    """A finite symmetric generator alphabet with an involutive inverse pairing."""

    labels: tuple[str, ...]
    inverse: dict[str, str]
    identity: str = IDENTITY

    def __post_init__(self):
        for s in self.labels:
            t = self.inverse.get(s)
            if t is None or t not in self.labels:
                raise ConfigError(f"generator set not symmetric at {s!r}")
            if self.inverse.get(t) != s:
                raise ConfigError(f"inverse pairing not an involution at {s!r}")
        if self.inverse.get(self.identity, self.identity) != self.identity:
            raise ConfigError("identity must be its own inverse")

    def pairs(self):
        """Yield each {s, s^-1} pair once, self-inverse labels as singletons."""
        seen = set()
        for s in self.labels:
            if s in seen:
                continue
            t = self.inverse[s]
            seen.add(s)
            seen.add(t)
            yield (s,) if s == t else (s, t)


@dataclass(frozen=True)
class GroupElement:
    label: str
    inverse_label: str
    apply: Callable

    def __repr__(self):
        return f"GroupElement({self.label})"


class ActionFamily:
    """Base interface for a group action on a countable set."""

    name = "?"
    # order_kind: "linear" (invariant total order), "circular" (exact circle
    # positions), or None when the action preserves no usable order.
    order_kind: str | None = None
    # True when the whole orbit fits in a finite truncation (no tail mass).
    finite = False
    supports_bulk = False

    def generators(self) -> GeneratorSystem:
        raise NotImplementedError

    def apply(self, label, state):
        raise NotImplementedError

    def seeds(self) -> list:
        raise NotImplementedError

    def validate_state(self, state):
        return state

    def state_str(self, state) -> str:
        return str(state)

    # exact order primitives; orbits.order_for() wraps them
    def linear_cmp(self, a, b) -> int:
        raise NotImplementedError

    def position(self, state):
        """Exact circle coordinate in [0, 1) for positional circular orders."""
        raise NotImplementedError

    def enumerate_group(self) -> Iterator[GroupElement]:
        raise NotImplementedError(
            f"family {self.name!r} does not enumerate its group elements"
        )

    def element(self, label) -> GroupElement:
        """Resolve a generator label or canonical element label."""
        raise NotImplementedError

    # bulk hooks (integer coordinate matrices) for large lattice sweeps
    def bulk_seed(self) -> np.ndarray:
        raise NotImplementedError

    def bulk_apply(self, label, coords: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def bulk_pack(self, coords: np.ndarray, radius: int) -> np.ndarray:
        raise NotImplementedError


def _tuple_add(state, vec):
    return tuple(s + v for s, v in zip(state, vec))


class ZdTranslation(ActionFamily):
    """Z^d acting on itself by translation, with the invariant lex order."""

    order_kind = "linear"
    supports_bulk = True

    def __init__(self, d: int = 1):
        if d < 1:
            raise ConfigError("dimension must be >= 1")
        self.d = d
        self.name = "z" if d == 1 else f"z{d}"

    def generators(self) -> GeneratorSystem:
        labels = []
        inverse = {}
        for i in range(1, self.d + 1):
            labels += [f"+{i}", f"-{i}"]
            inverse[f"+{i}"] = f"-{i}"
            inverse[f"-{i}"] = f"+{i}"
        return GeneratorSystem(tuple(labels), inverse)

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        sign = 1 if label[0] == "+" else -1
        axis = int(label[1:]) - 1
        return state[:axis] + (state[axis] + sign,) + state[axis + 1:]

    def seeds(self):
        return [(0,) * self.d]

    def validate_state(self, state):
        state = tuple(int(x) for x in state)
        if len(state) != self.d:
            raise StateSpaceError(f"state {state} has wrong dimension for {self.name}")
        return state

    def state_str(self, state):
        return ";".join(str(x) for x in state)

    def linear_cmp(self, a, b):
        return (a > b) - (a < b)

    def _vector_element(self, vec):
        vec = tuple(vec)
        inv = tuple(-x for x in vec)
        label = "t" + ";".join(str(x) for x in vec)
        inv_label = "t" + ";".join(str(x) for x in inv)
        return GroupElement(label, inv_label, lambda s, v=vec: _tuple_add(s, v))

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)
        emitted = set()
        for norm in itertools.count(1):
            for vec in _l1_sphere(self.d, norm):
                if vec in emitted:
                    continue
                emitted.add(vec)
                inv = tuple(-x for x in vec)
                emitted.add(inv)
                yield self._vector_element(vec)
                yield self._vector_element(inv)

    def element(self, label):
        if label == IDENTITY:
            return GroupElement(IDENTITY, IDENTITY, lambda s: s)
        if label[0] in "+-" and label[1:].isdigit():
            sign = 1 if label[0] == "+" else -1
            axis = int(label[1:]) - 1
            vec = tuple(sign if i == axis else 0 for i in range(self.d))
            return self._vector_element(vec)
        if label.startswith("t"):
            vec = tuple(int(x) for x in label[1:].split(";"))
            if len(vec) != self.d:
                raise StateSpaceError(f"bad element label {label!r} for {self.name}")
            return self._vector_element(vec)
        raise StateSpaceError(f"unknown element label {label!r} for {self.name}")

    def bulk_seed(self):
        return np.zeros((1, self.d), dtype=np.int64)

    def bulk_apply(self, label, coords):
        sign = 1 if label[0] == "+" else -1
        axis = int(label[1:]) - 1
        out = coords.copy()
        out[:, axis] += sign
        return out

    def bulk_pack(self, coords, radius):
        base = 2 * radius + 3
        key = np.zeros(len(coords), dtype=np.int64)
        for j in range(self.d):
            key = key * base + (coords[:, j] + radius + 1)
        return key


def _l1_sphere(d, norm):
    """All integer vectors of l1 norm ``norm`` in lex order."""
    out = []

    def rec(prefix, remaining, axes_left):
        if axes_left == 1:
            for v in (-remaining, remaining) if remaining else (0,):
                out.append(prefix + (v,))
            return
        for a in range(-remaining, remaining + 1):
            rec(prefix + (a,), remaining - abs(a), axes_left - 1)

    rec((), norm, d)
    return sorted(set(out))


class HeisenbergAction(ActionFamily):
    """Discrete Heisenberg group acting on itself via normal forms (x, y, z).

    Product rule: (x1,y1,z1)*(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2),
    so the commutator of the two standard generators is central.
    States are acted on by left multiplication; the lex order on normal
    forms is invariant under left translations.
    """

    order_kind = "linear"
    supports_bulk = True

    GENS = {"a": (1, 0, 0), "A": (-1, 0, 0), "b": (0, 1, 0), "B": (0, -1, 0),
            "c": (0, 0, 1), "C": (0, 0, -1)}

    def __init__(self, central: bool = False):
        self.central = central
        self.name = "heisenberg_c" if central else "heisenberg"

    def generators(self):
        labels = ["a", "A", "b", "B"] + (["c", "C"] if self.central else [])
        inverse = {"a": "A", "A": "a", "b": "B", "B": "b", "c": "C", "C": "c"}
        inverse = {k: v for k, v in inverse.items() if k in labels}
        return GeneratorSystem(tuple(labels), inverse)

    @staticmethod
    def mul(g, h):
        return (g[0] + h[0], g[1] + h[1], g[2] + h[2] + g[0] * h[1])

    @staticmethod
    def inv(g):
        x, y, z = g
        return (-x, -y, x * y - z)

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        return self.mul(self.GENS[label], state)

    def seeds(self):
        return [(0, 0, 0)]

    def validate_state(self, state):
        state = tuple(int(v) for v in state)
        if len(state) != 3:
            raise StateSpaceError("heisenberg states are integer triples")
        return state

    def state_str(self, state):
        return ";".join(str(v) for v in state)

    def linear_cmp(self, a, b):
        return (a > b) - (a < b)

    def _element(self, g):
        label = "h" + ";".join(str(v) for v in g)
        gi = self.inv(g)
        inv_label = "h" + ";".join(str(v) for v in gi)
        return GroupElement(label, inv_label, lambda s, g=g: self.mul(g, s))

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)
        gens = [self.GENS[l] for l in self.generators().labels]
        seen = {(0, 0, 0)}
        frontier = [(0, 0, 0)]
        emitted = set()
        while True:
            nxt = set()
            for s in frontier:
                for g in gens:
                    t = self.mul(g, s)
                    if t not in seen:
                        nxt.add(t)
            for g in sorted(nxt):
                seen.add(g)
            for g in sorted(nxt):
                if g in emitted:
                    continue
                gi = self.inv(g)
                emitted.add(g)
                emitted.add(gi)
                yield self._element(g)
                if gi != g:
                    yield self._element(gi)
            if not nxt:
                return
            frontier = sorted(nxt)

    def element(self, label):
        if label == IDENTITY:
            return GroupElement(IDENTITY, IDENTITY, lambda s: s)
        if label in self.GENS:
            return self._element(self.GENS[label])
        if label.startswith("h"):
            g = tuple(int(v) for v in label[1:].split(";"))
            return self._element(g)
        raise StateSpaceError(f"unknown element label {label!r} for {self.name}")

    def bulk_seed(self):
        return np.zeros((1, 3), dtype=np.int64)

    def bulk_apply(self, label, coords):
        x, y, z = coords[:, 0], coords[:, 1], coords[:, 2]
        out = coords.copy()
        if label == "a":
            out[:, 0] = x + 1
            out[:, 2] = z + y
        elif label == "A":
            out[:, 0] = x - 1
            out[:, 2] = z - y
        elif label == "b":
            out[:, 1] = y + 1
        elif label == "B":
            out[:, 1] = y - 1
        elif label == "c":
            out[:, 2] = z + 1
        elif label == "C":
            out[:, 2] = z - 1
        else:
            raise StateSpaceError(f"unknown generator {label!r}")
        return out

    def bulk_pack(self, coords, radius):
        # |x|, |y| <= radius and |z| <= radius^2/4 + radius on the ball
        bxy = 2 * radius + 3
        bz = (radius * radius) // 2 + 2 * radius + 3
        key = (coords[:, 0] + radius + 1).astype(np.int64)
        key = key * bxy + (coords[:, 1] + radius + 1)
        key = key * (2 * bz + 1) + (coords[:, 2] + bz)
        return key


_GRIG_SECTIONS = {"b": ("a", "c"), "c": ("a", "d"), "d": (IDENTITY, "b")}


class GrigorchukRayAction(ActionFamily):
    """The Grigorchuk automaton acting on eventually-one binary rays.

    A state is the finite prefix before the all-ones tail, canonicalised to
    not end in '1'.  The embedding prefix -> (int(prefix,2)+1)/2^len gives
    exact circle coordinates in (0, 1]; the induced circular order is
    provided as a diagnostic order (the action does not preserve it, which
    order_preservation_report makes visible).
    """

    name = "grigorchuk"
    order_kind = "circular"

    def generators(self):
        labels = ("a", "b", "c", "d")
        return GeneratorSystem(labels, {l: l for l in labels})

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        g = label
        out = []
        broke = False
        for i, ch in enumerate(state):
            if g == IDENTITY:
                out.append(state[i:])
                broke = True
                break
            if g == "a":
                out.append("1" if ch == "0" else "0")
                out.append(state[i + 1:])
                broke = True
                break
            zero, one = _GRIG_SECTIONS[g]
            out.append(ch)
            g = zero if ch == "0" else one
        if not broke and g == "a":
            out.append("0")  # the all-ones tail maps to 0 followed by ones
        return "".join(out).rstrip("1")

    def seeds(self):
        return [""]

    def validate_state(self, state):
        if not isinstance(state, str) or state.strip("01"):
            raise StateSpaceError("grigorchuk states are binary strings")
        return state.rstrip("1")

    def state_str(self, state):
        return state if state else "e"

    def position(self, state):
        num = int(state, 2) if state else 0
        return (Fraction(num + 1, 2 ** len(state))) % 1


class FreeAbelianTower(ActionFamily):
    """Free abelian group of unbounded rank; generators revealed lazily.

    States are finitely supported integer sequences stored as tuples with
    trailing zeros trimmed.  Only the first ``revealed`` axes are declared
    as graph generators; the group enumeration keeps producing elements of
    higher weight (and eventually higher support) after them.
    """

    order_kind = "linear"

    def __init__(self, revealed: int = 3):
        if revealed < 1:
            raise ConfigError("revealed must be >= 1")
        self.revealed = revealed
        self.name = "oplus_z"

    @staticmethod
    def _trim(state):
        state = tuple(state)
        while state and state[-1] == 0:
            state = state[:-1]
        return state

    def generators(self):
        labels = []
        inverse = {}
        for i in range(1, self.revealed + 1):
            labels += [f"+{i}", f"-{i}"]
            inverse[f"+{i}"] = f"-{i}"
            inverse[f"-{i}"] = f"+{i}"
        return GeneratorSystem(tuple(labels), inverse)

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        sign = 1 if label[0] == "+" else -1
        axis = int(label[1:]) - 1
        vec = list(state) + [0] * max(0, axis + 1 - len(state))
        vec[axis] += sign
        return self._trim(vec)

    def seeds(self):
        return [()]

    def validate_state(self, state):
        return self._trim(int(v) for v in state)

    def state_str(self, state):
        return ";".join(str(v) for v in state) if state else "0"

    def linear_cmp(self, a, b):
        n = max(len(a), len(b))
        pa = a + (0,) * (n - len(a))
        pb = b + (0,) * (n - len(b))
        return (pa > pb) - (pa < pb)

    def _vector_element(self, vec):
        vec = self._trim(vec)
        inv = self._trim(-x for x in vec)
        mk = lambda v: "t" + (";".join(str(x) for x in v) if v else "0")

        def app(s, v=vec):
            out = list(s) + [0] * max(0, len(v) - len(s))
            for i, x in enumerate(v):
                out[i] += x
            return self._trim(out)

        return GroupElement(mk(vec), mk(inv), app)

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)
        emitted = set()
        # weight = highest occupied axis + l1 norm; axis i first appears at
        # weight i + 1, so generators are revealed one index at a time
        for weight in itertools.count(2):
            block = []
            for top in range(1, weight):
                norm = weight - top
                for vec in _l1_sphere(top, norm):
                    if vec[-1] == 0:
                        continue
                    block.append(self._trim(vec))
            for vec in sorted(set(block)):
                if vec in emitted:
                    continue
                inv = self._trim(-x for x in vec)
                emitted.add(vec)
                emitted.add(inv)
                yield self._vector_element(vec)
                yield self._vector_element(inv)

    def element(self, label):
        if label == IDENTITY:
            return GroupElement(IDENTITY, IDENTITY, lambda s: s)
        if label[0] in "+-" and label[1:].isdigit():
            axis = int(label[1:])
            sign = 1 if label[0] == "+" else -1
            return self._vector_element((0,) * (axis - 1) + (sign,))
        if label.startswith("t"):
            body = label[1:]
            vec = () if body == "0" else tuple(int(v) for v in body.split(";"))
            return self._vector_element(vec)
        raise StateSpaceError(f"unknown element label {label!r} for {self.name}")


class LamplighterAction(ActionFamily):
    """(Z/2) wr Z acting on itself: the standard exponential-growth control.

    Group elements and states are pairs (lamps, pos) with lamps a frozenset
    of lit positions.  No invariant order exists (the lamp toggles are
    involutions), so order_kind is None.
    """

    name = "lamplighter"
    order_kind = None

    @staticmethod
    def mul(g, h):
        lg, pg = g
        lh, ph = h
        return (lg ^ frozenset(x + pg for x in lh), pg + ph)

    @staticmethod
    def inv(g):
        lg, pg = g
        return (frozenset(x - pg for x in lg), -pg)

    GENS = {"t": (frozenset(), 1), "T": (frozenset(), -1), "a": (frozenset([0]), 0)}

    def generators(self):
        return GeneratorSystem(("t", "T", "a"), {"t": "T", "T": "t", "a": "a"})

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        return self.mul(self.GENS[label], state)

    def seeds(self):
        return [(frozenset(), 0)]

    def validate_state(self, state):
        lamps, pos = state
        return (frozenset(int(x) for x in lamps), int(pos))

    def state_str(self, state):
        lamps, pos = state
        body = ",".join(str(x) for x in sorted(lamps))
        return f"[{body}]p{pos}"

    def _element(self, g):
        gi = self.inv(g)
        mk = lambda e: "w" + self.state_str(e)
        return GroupElement(mk(g), mk(gi), lambda s, g=g: self.mul(g, s))

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)
        gens = [self.GENS[l] for l in ("a", "t", "T")]
        ident = (frozenset(), 0)
        seen = {ident}
        frontier = [ident]
        emitted = set()
        while frontier:
            nxt = set()
            for s in frontier:
                for g in gens:
                    u = self.mul(g, s)
                    if u not in seen:
                        nxt.add(u)
            seen |= nxt
            ordered = sorted(nxt, key=self.state_str)
            for g in ordered:
                if g in emitted:
                    continue
                gi = self.inv(g)
                emitted.add(g)
                emitted.add(gi)
                yield self._element(g)
                if gi != g:
                    yield self._element(gi)
            frontier = ordered


class DyadicAffineAction(ActionFamily):
    """The solvable affine group <x -> 2x, x -> x+1> on the dyadic rationals.

    An order-preserving action (affine maps with positive slope) whose orbit
    growth is exponential: the certification pipeline must refuse it.
    """

    name = "bs12"
    order_kind = "linear"

    def generators(self):
        return GeneratorSystem(("a", "A", "b", "B"),
                               {"a": "A", "A": "a", "b": "B", "B": "b"})

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        if label == "a":
            return state * 2
        if label == "A":
            return state / 2
        if label == "b":
            return state + 1
        if label == "B":
            return state - 1
        raise StateSpaceError(f"unknown generator {label!r}")

    def seeds(self):
        return [Fraction(0)]

    def validate_state(self, state):
        state = Fraction(state)
        if state.denominator & (state.denominator - 1):
            raise StateSpaceError("bs12 states are dyadic rationals")
        return state

    def state_str(self, state):
        return f"{state.numerator}/{state.denominator}"

    def linear_cmp(self, a, b):
        return (a > b) - (a < b)

    # elements are affine maps x -> 2^k x + q with dyadic q
    @staticmethod
    def _mul(g, h):
        k1, q1 = g
        k2, q2 = h
        return (k1 + k2, Fraction(2) ** k1 * q2 + q1)

    @staticmethod
    def _inv(g):
        k, q = g
        return (-k, -q / Fraction(2) ** k)

    def _element(self, g):
        gi = self._inv(g)
        mk = lambda e: f"g{e[0]};{e[1].numerator}/{e[1].denominator}"
        return GroupElement(mk(g), mk(gi),
                            lambda s, g=g: Fraction(2) ** g[0] * s + g[1])

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)
        gens = [(1, Fraction(0)), (-1, Fraction(0)), (0, Fraction(1)), (0, Fraction(-1))]
        ident = (0, Fraction(0))
        seen = {ident}
        frontier = [ident]
        emitted = set()
        while frontier:
            nxt = set()
            for s in frontier:
                for g in gens:
                    u = self._mul(g, s)
                    if u not in seen:
                        nxt.add(u)
            seen |= nxt
            ordered = sorted(nxt)
            for g in ordered:
                if g in emitted:
                    continue
                gi = self._inv(g)
                emitted.add(g)
                emitted.add(gi)
                yield self._element(g)
                if gi != g:
                    yield self._element(gi)
            frontier = ordered


class DisjointLinesAction(ActionFamily):
    """Z translating several disjoint copies of Z: the non-transitive case."""

    order_kind = "linear"

    def __init__(self, copies: int = 2):
        if copies < 1:
            raise ConfigError("copies must be >= 1")
        self.copies = copies
        self.name = "z_copies"

    def generators(self):
        return GeneratorSystem(("+1", "-1"), {"+1": "-1", "-1": "+1"})

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        copy, k = state
        return (copy, k + (1 if label == "+1" else -1))

    def seeds(self):
        return [(i, 0) for i in range(self.copies)]

    def validate_state(self, state):
        copy, k = state
        copy, k = int(copy), int(k)
        if not 0 <= copy < self.copies:
            raise StateSpaceError(f"copy index {copy} out of range")
        return (copy, k)

    def state_str(self, state):
        return f"{state[0]}:{state[1]}"

    def linear_cmp(self, a, b):
        return (a > b) - (a < b)

    def _shift_element(self, n):
        mk = lambda m: f"t{m}"
        return GroupElement(mk(n), mk(-n), lambda s, n=n: (s[0], s[1] + n))

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)
        for n in itertools.count(1):
            yield self._shift_element(n)
            yield self._shift_element(-n)

    def element(self, label):
        if label == IDENTITY:
            return GroupElement(IDENTITY, IDENTITY, lambda s: s)
        if label in ("+1", "-1"):
            return self._shift_element(1 if label == "+1" else -1)
        if label.startswith("t"):
            return self._shift_element(int(label[1:]))
        raise StateSpaceError(f"unknown element label {label!r} for {self.name}")


_GOLDEN_BITS = 256


def _golden_fraction() -> Fraction:
    # (sqrt(5) - 1) / 2 rounded to a 256-bit dyadic; exact arithmetic after that
    scaled = math.isqrt(5 << (2 * _GOLDEN_BITS))
    return Fraction((scaled - (1 << _GOLDEN_BITS)) // 2, 1 << _GOLDEN_BITS)


class RotationOrbitAction(ActionFamily):
    """Z acting on the circle orbit {k*alpha mod 1} with exact coordinates.

    alpha is an exact Fraction; the preset "golden" uses a 256-bit dyadic
    approximant so order comparisons stay exact at any practical truncation.
    Rational alpha with a small denominator gives a finite orbit.
    """

    order_kind = "circular"

    def __init__(self, alpha="golden"):
        if alpha == "golden":
            self.alpha = _golden_fraction()
        else:
            self.alpha = Fraction(alpha) % 1
        self.finite = self.alpha.denominator <= 10 ** 6
        self.period = self.alpha.denominator if self.finite else None
        self.name = "rotation"

    def generators(self):
        return GeneratorSystem(("+1", "-1"), {"+1": "-1", "-1": "+1"})

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        k = state + (1 if label == "+1" else -1)
        return k % self.period if self.finite else k

    def seeds(self):
        return [0]

    def validate_state(self, state):
        state = int(state)
        return state % self.period if self.finite else state

    def state_str(self, state):
        return str(state)

    def position(self, state):
        return (state * self.alpha) % 1

    def _shift_element(self, n):
        def app(s, n=n):
            k = s + n
            return k % self.period if self.finite else k

        return GroupElement(f"t{n}", f"t{-n}", app)

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)
        top = self.period if self.finite else None
        for n in itertools.count(1):
            if top is not None and n > top // 2 + 1:
                return
            yield self._shift_element(n)
            yield self._shift_element(-n)

    def element(self, label):
        if label == IDENTITY:
            return GroupElement(IDENTITY, IDENTITY, lambda s: s)
        if label in ("+1", "-1"):
            return self._shift_element(1 if label == "+1" else -1)
        if label.startswith("t"):
            return self._shift_element(int(label[1:]))
        raise StateSpaceError(f"unknown element label {label!r} for {self.name}")


class IdentityCircleAction(ActionFamily):
    """The trivial group acting on m equally spaced circle points."""

    order_kind = "circular"
    finite = True

    def __init__(self, points: int = 8):
        if points < 1:
            raise ConfigError("points must be >= 1")
        self.points = points
        self.name = "identity_circle"

    def generators(self):
        return GeneratorSystem((), {})

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        raise StateSpaceError(f"unknown generator {label!r}")

    def seeds(self):
        return list(range(self.points))

    def validate_state(self, state):
        state = int(state)
        if not 0 <= state < self.points:
            raise StateSpaceError("point index out of range")
        return state

    def position(self, state):
        return Fraction(state, self.points)

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)

    def element(self, label):
        if label == IDENTITY:
            return GroupElement(IDENTITY, IDENTITY, lambda s: s)
        raise StateSpaceError(f"unknown element label {label!r}")


class TableAction(ActionFamily):
    """A user-supplied action given by explicit edge tables.

    Spec dictionary shape::

        {"family": "table",
         "params": {"states": [...], "order": [...] | null,
                    "circular": true|false},
         "generators": [{"label": "s", "inverse": "S"}, ...],
         "edges": [{"state": ..., "generator": ..., "image": ...}, ...]}

    ``order`` lists states in increasing (or cyclic) order.  Omitted edges
    are honest gaps: balls touching them raise truncation errors.
    """

    name = "table"

    def __init__(self, spec: dict):
        params = spec.get("params", {})
        self._states = [str(s) for s in params.get("states", [])]
        if not self._states:
            raise ConfigError("table action needs a nonempty state list")
        gens = spec.get("generators", [])
        labels = []
        inverse = {}
        for g in gens:
            lab, inv = str(g["label"]), str(g.get("inverse", g["label"]))
            labels.append(lab)
            inverse[lab] = inv
        self._gens = GeneratorSystem(tuple(labels), inverse)
        self._edges = {}
        for e in spec.get("edges", []):
            self._edges[(str(e["state"]), str(e["generator"]))] = str(e["image"])
        order = params.get("order")
        self._order = [str(s) for s in order] if order else None
        self._circular = bool(params.get("circular", False))
        self.order_kind = (
            None if self._order is None else ("circular" if self._circular else "linear")
        )
        self.finite = True
        self._rank = {s: i for i, s in enumerate(self._order or [])}

    def generators(self):
        return self._gens

    def apply(self, label, state):
        if label == IDENTITY:
            return state
        image = self._edges.get((state, label))
        if image is None:
            raise KeyError((state, label))
        return image

    def has_edge(self, state, label):
        return (state, label) in self._edges

    def seeds(self):
        return [self._states[0]]

    def validate_state(self, state):
        state = str(state)
        if state not in self._states:
            raise StateSpaceError(f"state {state!r} not in declared state space")
        return state

    def linear_cmp(self, a, b):
        ra, rb = self._rank[a], self._rank[b]
        return (ra > rb) - (ra < rb)

    def position(self, state):
        return Fraction(self._rank[state], max(1, len(self._order or [])))

    def enumerate_group(self):
        yield GroupElement(IDENTITY, IDENTITY, lambda s: s)
        for pair in self._gens.pairs():
            lab = pair[0]
            inv = self._gens.inverse[lab]
            yield GroupElement(lab, inv, lambda s, l=lab: self.apply(l, s))
            if inv != lab:
                yield GroupElement(inv, lab, lambda s, l=inv: self.apply(l, s))

    def element(self, label):
        if label == IDENTITY:
            return GroupElement(IDENTITY, IDENTITY, lambda s: s)
        if label in self._gens.labels:
            return GroupElement(label, self._gens.inverse[label],
                                lambda s, l=label: self.apply(l, s))
        raise StateSpaceError(f"unknown element label {label!r}")


_REGISTRY = {
    "z": lambda p: ZdTranslation(1),
    "z2": lambda p: ZdTranslation(2),
    "z3": lambda p: ZdTranslation(3),
    "zd": lambda p: ZdTranslation(int(p.get("d", 2))),
    "heisenberg": lambda p: HeisenbergAction(central=bool(p.get("central", False))),
    "heisenberg_c": lambda p: HeisenbergAction(central=True),
    "grigorchuk": lambda p: GrigorchukRayAction(),
    "oplus_z": lambda p: FreeAbelianTower(revealed=int(p.get("revealed", 3))),
    "lamplighter": lambda p: LamplighterAction(),
    "bs12": lambda p: DyadicAffineAction(),
    "z_copies": lambda p: DisjointLinesAction(copies=int(p.get("copies", 2))),
    "rotation": lambda p: RotationOrbitAction(alpha=p.get("alpha", "golden")),
    "identity_circle": lambda p: IdentityCircleAction(points=int(p.get("points", 8))),
}


def family_names():
    return sorted(_REGISTRY) + ["table"]


def make_family(name: str, params: dict | None = None) -> ActionFamily:
    params = dict(params or {})
    if name == "table":
        return TableAction(params.get("spec") or params)
    try:
        builder = _REGISTRY[name]
    except KeyError:
        raise UnknownFamilyError(
            f"unknown action family {name!r}; known: {', '.join(family_names())}"
        ) from None
    return builder(params)
