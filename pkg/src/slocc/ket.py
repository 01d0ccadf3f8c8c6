"""Reading and writing ket expressions such as ``(|0000> + |1111>)/sqrt(2)``.

Grammar (whitespace between tokens is ignored)::

    expr   := group | sum
    group  := "(" sum ")" "/" root
    sum    := term { ("+" | "-") term }
    term   := [coeff ["*"]] ket
    ket    := "|" (decimal | bits) (">" | "⟩")
    coeff  := [sign] [factor]
    factor := number ["i"] ["/" root] | "i" ["/" root] | root ["/" root]
    number := uint ["/" uint] | decimal-literal
    root   := "sqrt(" uint ")"

Indices made of 0/1 digits are bitstrings when their length equals the
qubit count (declared, or fixed by a 0/1 index with a leading zero, or by a
0/1 index of four or more digits); every other index is decimal.  Decimal
literals such as ``0.25`` or ``1e-3`` are read as exact rationals.  Terms
with the same ket are added.

A state file holds one expression, optionally preceded by ``qubits: n``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .exact import GaussianRational, Rational
from .state import MAX_QUBITS, PureState, state_from_terms

__all__ = ["KetSyntaxError", "parse", "parse_file", "format_state", "read_state_text"]


class KetSyntaxError(ValueError):
    """Malformed ket expression; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}")


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<sqrt>sqrt\s*\(\s*(?P<rad>\d+)\s*\))
  | (?P<num>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<ket>[|](?P<idx>[^>⟩|]*)[>⟩])
  | (?P<op>[-+*/()i−])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise KetSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind == "rad":
            kind = "sqrt"
        if kind == "idx":
            kind = "ket"
        if kind != "ws":
            if kind == "sqrt":
                toks.append(("sqrt", int(m.group("rad")), pos))
            elif kind == "ket":
                toks.append(("ket", m.group("idx").strip(), pos))
            elif kind == "num":
                toks.append(("num", m.group("num"), pos))
            else:
                op = m.group("op")
                toks.append(("op", "-" if op == "−" else op, pos))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Term:
    """Coefficient ``q * sqrt(r)`` times ``|index>`` (index still textual)."""

    __slots__ = ("q", "r", "index", "pos")

    def __init__(self, q, r, index, pos):
        self.q = q
        self.r = r
        self.index = index
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        tok = self.toks[self.k]
        self.k += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise KetSyntaxError(message, tok[2], self.text)

    def is_op(self, ch) -> bool:
        t = self.peek()
        return t[0] == "op" and t[1] == ch

    def expect_op(self, ch):
        if not self.is_op(ch):
            self.error(f"expected {ch!r}")
        return self.take()

    def expr(self) -> list[_Term]:
        if self.is_op("("):
            self.take()
            terms = self.sum()
            self.expect_op(")")
            self.expect_op("/")
            q, r = self.divisor()
            for t in terms:
                t.q = t.q / q
                t.r = t.r / r
        else:
            terms = self.sum()
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")
        return terms

    def divisor(self):
        """Group divisor: ``sqrt(k)`` or a positive rational."""
        tok = self.peek()
        if tok[0] == "sqrt":
            self.take()
            if tok[1] == 0:
                self.error("sqrt(0) divisor", tok)
            return Rational(1), Fraction(tok[1])
        if tok[0] == "num":
            val = self.number()
            if not val:
                self.error("division by zero", tok)
            return val, Fraction(1)
        self.error("expected sqrt(k) or a number after '/'")

    def sum(self) -> list[_Term]:
        terms = [self.term(first=True)]
        while self.is_op("+") or self.is_op("-"):
            terms.append(self.term(first=False))
        return terms

    def number(self):
        tok = self.take()
        val = Rational(Fraction(tok[1]))
        if self.is_op("/") and self.toks[self.k + 1][0] == "num" and "." not in tok[1]:
            self.take()
            den_tok = self.take()
            if "." in den_tok[1] or "e" in den_tok[1].lower():
                self.error("denominator must be an integer", den_tok)
            den = int(den_tok[1])
            if den == 0:
                self.error("division by zero", den_tok)
            val = val / den
        return val

    def root_divisor(self) -> int:
        """Optional ``/ sqrt(k)`` after a coefficient; 1 when absent."""
        if self.is_op("/") and self.toks[self.k + 1][0] == "sqrt":
            self.take()
            rad = self.take()
            if rad[1] == 0:
                self.error("sqrt(0) divisor", rad)
            return rad[1]
        return 1

    def term(self, first: bool) -> _Term:
        start = self.peek()
        sign = 1
        if self.is_op("+") or self.is_op("-"):
            sign = -1 if self.take()[1] == "-" else 1
        elif not first:
            self.error("expected '+' or '-'")
        q = GaussianRational(sign)
        r = Fraction(1)
        tok = self.peek()
        have_coeff = False
        if tok[0] == "num":
            q = q * self.number()
            have_coeff = True
            if self.is_op("i"):
                self.take()
                q = q * GaussianRational(0, 1)
            r = r / self.root_divisor()
        elif self.is_op("i"):
            self.take()
            q = q * GaussianRational(0, 1)
            r = r / self.root_divisor()
            have_coeff = True
        elif tok[0] == "sqrt":
            self.take()
            r = r * tok[1] / self.root_divisor()
            have_coeff = True
        if have_coeff and self.is_op("*"):
            self.take()
        ket = self.peek()
        if ket[0] != "ket":
            if have_coeff:
                self.error("coefficient must be followed by a ket")
            self.error("expected a term")
        self.take()
        if not ket[1]:
            self.error("empty ket", ket)
        return _Term(q, r, ket[1], start[2])


def _resolve_indices(terms: list[_Term], n: int | None, text: str) -> tuple[int, list[int]]:
    width = n
    if width is None:
        for t in terms:
            s = t.index
            if re.fullmatch(r"[01]+", s) and len(s) >= 2 and s[0] == "0":
                if width is not None and width != len(s):
                    raise KetSyntaxError("bitstrings of different lengths", t.pos, text)
                width = len(s)
        if width is None:
            for t in terms:
                s = t.index
                if re.fullmatch(r"[01]+", s) and len(s) >= 4:
                    if width is not None and width != len(s):
                        raise KetSyntaxError("bitstrings of different lengths", t.pos, text)
                    width = len(s)
    indices = []
    for t in terms:
        s = t.index
        if not re.fullmatch(r"\d+", s):
            raise KetSyntaxError(f"bad ket index {s!r}", t.pos, text)
        if width is not None and width >= 2 and re.fullmatch(r"[01]+", s) and len(s) == width:
            indices.append(int(s, 2))
        elif len(s) >= 2 and s[0] == "0" and re.fullmatch(r"[01]+", s):
            raise KetSyntaxError(f"bitstring {s!r} does not match {width} qubits", t.pos, text)
        else:
            indices.append(int(s))
    needed = max(max(i.bit_length() for i in indices), 1)
    if n is None:
        n = max(needed, width or 1)
    if n < 1 or n > MAX_QUBITS:
        raise ValueError(f"qubit count {n} outside 1..{MAX_QUBITS}")
    for t, i in zip(terms, indices):
        if i >= 1 << n:
            raise ValueError(f"ket index {i} exceeds 2^{n}-1")
    return n, indices


def _build(n: int, terms: list[_Term], indices: list[int]) -> PureState:
    try:
        return state_from_terms(n, [(i, t.q, t.r) for t, i in zip(terms, indices)])
    except ValueError as exc:
        raise ValueError(f"expression denotes the zero state") from exc


def parse(text: str, n: int | None = None) -> PureState:
    """Parse a ket expression into a :class:`PureState`.

    The result is exact whenever all coefficients share one ``sqrt`` factor
    (up to rational multiples); otherwise it is floating.
    """
    terms = _Parser(text).expr()
    n, indices = _resolve_indices(terms, n, text)
    return _build(n, terms, indices)


def read_state_text(text: str) -> PureState:
    """Parse state-file contents (optional ``qubits: n`` header line)."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    n = None
    if lines:
        m = re.fullmatch(r"\s*qubits\s*:\s*(\d+)\s*", lines[0])
        if m:
            n = int(m.group(1))
            lines = lines[1:]
    if not lines:
        raise ValueError("state file holds no expression")
    return parse(" ".join(lines), n)


def parse_file(path) -> PureState:
    return read_state_text(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# printing


def _qtext(q) -> str:
    q = Rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coeff_terms(c: GaussianRational):
    """Split ``c`` into (sign, magnitude text, imaginary?) pieces."""
    out = []
    for part, imag in ((c.re, False), (c.im, True)):
        if not part:
            continue
        sign = "-" if part < 0 else "+"
        mag = abs(part)
        if imag:
            text = "i" if mag == 1 else _qtext(mag) + "i"
        else:
            text = "" if mag == 1 else _qtext(mag)
        out.append((sign, text))
    return out


def _float_text(x: float) -> str:
    return format(x, ".12g")


def _float_terms(z: complex):
    out = []
    for part, imag in ((z.real, False), (z.imag, True)):
        if part == 0:
            continue
        sign = "-" if part < 0 else "+"
        text = "" if abs(part) == 1 else _float_text(abs(part))
        if imag:
            text += "i"
        out.append((sign, text))
    return out


def _ket_label(i: int, n: int, bits: bool) -> str:
    return format(i, f"0{n}b") if bits else str(i)


def _join(pieces) -> str:
    s = ""
    for k, (sign, body) in enumerate(pieces):
        if k == 0:
            s = ("- " if sign == "-" else "") + body
        else:
            s += f" {sign} {body}"
    return s


def format_state(s: PureState) -> str:
    """Canonical text: ascending kets, exact coefficients when exact.

    Indices are printed in decimal unless the largest one needs fewer than
    ``n`` bits, in which case all kets are written as n-bit strings so the
    qubit count survives a round trip.
    """
    support = s.support()
    bits = s.n >= 2 and max(support).bit_length() < s.n
    pieces = []
    for i in support:
        label = "|" + _ket_label(i, s.n, bits) + ">"
        terms = _coeff_terms(s.amps[i]) if s.exact else _float_terms(s.amps[i])
        for sign, body in terms:
            pieces.append((sign, body + label))
    body = _join(pieces)
    if s.exact and s.root != 1:
        return f"({body})/sqrt({s.root})"
    return body
