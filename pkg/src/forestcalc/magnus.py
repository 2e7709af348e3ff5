"""Magnus expansion of link longitudes and the resulting invariants.

Longitude words in the free group on x1..xm are expanded as truncated
noncommutative power series (x_i -> 1 + X_i).  The least degree with a
nonzero homogeneous part yields the first nonvanishing invariant, assembled
as mu = sum_i X_i (x) l_i with l_i the Lie reduction of that part.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BracketNonzeroError,
    DomainError,
    NotPrimitiveError,
    ParameterError,
    ParseError,
)
from .freelie import (
    TensorElement,
    bracket_map,
    k_project_lie,
    k_project_tensor,
    tensor_of,
    tensor_to_lie,
    word_multiplicity,
)


class MagnusSeries:
    """Noncommutative power series over Z, truncated beyond a fixed degree."""

    __slots__ = ("m", "trunc", "coeffs")

    def __init__(self, m, trunc, coeffs=None):
        self.m = m
        self.trunc = trunc
        self.coeffs = coeffs if coeffs is not None else {}

    @staticmethod
    def one(m, trunc):
        return MagnusSeries(m, trunc, {(): 1})

    @staticmethod
    def generator(m, trunc, i, inverse=False):
        """Image of x_i (or x_i^-1) under the expansion."""
        if inverse:
            # (1 + X)^-1 = 1 - X + X^2 - ...
            coeffs = {
                tuple([i] * d): (-1) ** d for d in range(trunc + 1)
            }
            return MagnusSeries(m, trunc, coeffs)
        return MagnusSeries(m, trunc, {(): 1, (i,): 1})

    def __mul__(self, other):
        acc = {}
        for wa, ca in self.coeffs.items():
            for wb, cb in other.coeffs.items():
                if len(wa) + len(wb) > self.trunc:
                    continue
                w = wa + wb
                acc[w] = acc.get(w, 0) + ca * cb
        return MagnusSeries(self.m, self.trunc, {w: c for w, c in acc.items() if c})

    def homogeneous(self, degree) -> dict:
        return {w: c for w, c in self.coeffs.items() if len(w) == degree and c}

    def coefficient(self, word) -> int:
        return self.coeffs.get(tuple(word), 0)


def parse_word(text: str, m: int):
    """A free-group word: space-separated letters x3 (generator) / X3 (inverse)."""
    letters = []
    for pos, token in enumerate(text.split()):
        if len(token) < 2 or token[0] not in "xX" or not token[1:].isdigit():
            raise ParseError(f"bad letter {token!r}", position=pos)
        i = int(token[1:])
        if not 1 <= i <= m:
            raise ParseError(f"letter index {i} out of range 1..{m}", position=pos)
        letters.append((i, token[0] == "X"))
    return letters


def magnus_expand(word, m: int, trunc: int) -> MagnusSeries:
    out = MagnusSeries.one(m, trunc)
    for i, inverse in word:
        out = out * MagnusSeries.generator(m, trunc, i, inverse)
    return out


@dataclass(frozen=True)
class LongitudeData:
    m: int
    words: tuple  # index i-1 -> parsed word for longitude l_i


def parse_longitudes(text: str) -> LongitudeData:
    """Longitude file: first line "m = <int>", then "l<i>: <word>" lines."""
    m = None
    raw = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if m is None:
            parts = line.replace(" ", "").split("=")
            if len(parts) != 2 or parts[0] != "m" or not parts[1].isdigit():
                raise ParseError(f"expected 'm = <int>' on line {lineno}", position=lineno)
            m = int(parts[1])
            if m < 1:
                raise ParseError("m must be >= 1", position=lineno)
            continue
        if ":" not in line:
            raise ParseError(f"expected 'l<i>: <word>' on line {lineno}", position=lineno)
        head, body = line.split(":", 1)
        head = head.strip()
        if not head.startswith("l") or not head[1:].isdigit():
            raise ParseError(f"bad longitude name {head!r}", position=lineno)
        i = int(head[1:])
        if not 1 <= i <= m:
            raise ParseError(f"longitude index {i} out of range 1..{m}", position=lineno)
        if i in raw:
            raise ParseError(f"duplicate longitude l{i}", position=lineno)
        raw[i] = parse_word(body.strip(), m)
    if m is None:
        raise ParseError("empty longitude input")
    words = tuple(tuple(raw.get(i, [])) for i in range(1, m + 1))
    return LongitudeData(m, words)


class AllVanishing(Exception):
    """All invariants vanish up to the truncation cap."""

    def __init__(self, cap):
        super().__init__(f"all invariants vanish through order {cap}")
        self.cap = cap


@dataclass(frozen=True)
class MilnorResult:
    order: int  # n: first nonvanishing order
    value: TensorElement  # mu in L1 (x) L_{n+1}
    table: tuple  # ((word, longitude index, coefficient), ...)


def milnor_from_longitudes(data: LongitudeData, cap: int = 8, k=None) -> MilnorResult:
    """First nonvanishing invariant of the longitudes, scanning orders 0..cap.

    At order n the degree-(n+1) parts of the expansions are reduced to Lie
    elements (non-primitivity signals inconsistent input).  With k set, parts
    are multiplicity-filtered before the vanishing test.
    """
    if cap < 0:
        raise ParameterError("cap must be >= 0")
    m = data.m
    for n in range(cap + 1):
        trunc = n + 2
        series = [magnus_expand(w, m, trunc) for w in data.words]
        degree = n + 1
        parts = []
        found = False
        for i, s in enumerate(series, start=1):
            part = s.homogeneous(degree)
            if k is not None:
                part = {
                    w: c for w, c in part.items()
                    if word_multiplicity(w + (i,)) <= k
                }
            parts.append(part)
            if part:
                found = True
        if not found:
            continue
        value = TensorElement.zero(m, degree)
        table = []
        for i, part in enumerate(parts, start=1):
            if not part:
                continue
            try:
                lie = tensor_to_lie(m, degree, part)
            except NotPrimitiveError:
                raise DomainError(
                    f"longitude l{i} is not primitive at degree {degree}"
                ) from None
            value = value + tensor_of(i, lie)
            for w in sorted(part):
                table.append((w, i, part[w]))
        check = bracket_map(value)
        if k is not None:
            check = k_project_lie(check, k)
        if not check.is_zero:
            raise BracketNonzeroError(
                "longitude invariant escapes the bracket kernel"
            )
        if k is not None:
            value = k_project_tensor(value, k)
        return MilnorResult(n, value, tuple(table))
    raise AllVanishing(cap)
