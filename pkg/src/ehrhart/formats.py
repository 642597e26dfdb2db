"""Text and JSON formats for polytopes, quasi-polynomials and results.

Pretty quasi-polynomial text::

    period 4, degree 2
    t ≡ 0 (mod 4): 9/32 t^2 + 3/8 t
    t ≡ 1 (mod 4): 9/32 t^2 - 3/16 t - 3/32
    ...

The parser also accepts ``=`` for ``≡``, and a bare polynomial such as
``t + 1`` as a period-1 quasi-polynomial.

Polytope files are line oriented: ``#`` starts a comment, the first line is
``dim N`` (or just ``N``), then one vertex per line as whitespace- or
comma-separated exact rationals ``p`` or ``p/q``.  A file whose first
non-blank character is ``{`` is read as JSON
``{"ambient_dim": N, "vertices": [["p/q", ...], ...]}``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Optional

from .quasipoly import QuasiPolynomial

FORMAT_VERSION = 1


class ParseError(ValueError):
    pass


_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(token: str, where: str = "") -> Fraction:
    token = token.strip()
    if not _RATIONAL.match(token):
        raise ParseError(f"{where}invalid rational {token!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"{where}zero denominator in {token!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(r) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


# ---------------------------------------------------------------------------
# quasi-polynomials
# ---------------------------------------------------------------------------

def render_poly(row) -> str:
    parts = []
    for i in range(len(row) - 1, -1, -1):
        c = Fraction(row[i])
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if i == 0:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)} {mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def render_qp(f: QuasiPolynomial) -> str:
    lines = [f"period {f.period}, degree {f.degree}"]
    for j, row in enumerate(f.coeffs):
        lines.append(f"t ≡ {j} (mod {f.period}): {render_poly(row)}")
    return "\n".join(lines)


_TERM = re.compile(
    r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*(\*)?\s*(t(?:\s*\^\s*(\d+))?)?\s*"
)


def parse_poly(text: str, where: str = "") -> list[Fraction]:
    """Ascending coefficients of a polynomial in ``t`` written like
    ``1/2 t^2 - 3 t + 1``."""
    coeffs: dict[int, Fraction] = {}
    pos = 0
    text = text.rstrip()
    first = True
    if not text.strip():
        raise ParseError(f"{where}empty polynomial")
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, num, star, mono, power = m.groups()
        if m.end() == pos or (num is None and mono is None) or (sign is None and not first):
            raise ParseError(f"{where}unexpected input at column {pos + 1}: {text[pos:pos + 12]!r}")
        if star and (num is None or mono is None):
            raise ParseError(f"{where}dangling '*' at column {pos + 1}")
        if num and "/" in num and int(num.split("/")[1]) == 0:
            raise ParseError(f"{where}zero denominator at column {pos + 1}")
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        k = 0 if mono is None else (int(power) if power else 1)
        coeffs[k] = coeffs.get(k, Fraction(0)) + c
        pos = m.end()
        first = False
    return [coeffs.get(k, Fraction(0)) for k in range(max(coeffs) + 1)]


_RESIDUE = re.compile(r"^\s*t\s*(?:≡|=|==)\s*(\d+)\s*\(\s*mod\s+(\d+)\s*\)\s*:(.*)$")
_HEADER = re.compile(r"^\s*period\s+(\d+)\s*(?:,\s*degree\s+(\d+))?\s*$")


def parse_qp(text: str) -> QuasiPolynomial:
    """Inverse of :func:`render_qp`; also accepts a single bare polynomial."""
    lines = []
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if line.strip():
            lines.append((k, line))
    if not lines:
        raise ParseError("no quasi-polynomial found")
    period: Optional[int] = None
    rows: dict[int, list] = {}
    for k, line in lines:
        where = f"line {k}: "
        h = _HEADER.match(line)
        if h:
            period = int(h.group(1))
            if period < 1:
                raise ParseError(f"{where}period must be positive")
            continue
        r = _RESIDUE.match(line)
        if r:
            j, p = int(r.group(1)), int(r.group(2))
            if period is None:
                period = p
            if p != period or not 0 <= j < p:
                raise ParseError(f"{where}residue {j} mod {p} does not fit period {period}")
            if j in rows:
                raise ParseError(f"{where}residue {j} given twice")
            rows[j] = parse_poly(r.group(3), where)
            continue
        if len(lines) == 1:
            return QuasiPolynomial([parse_poly(line, where)])
        raise ParseError(f"{where}cannot parse {line.strip()!r}")
    if period is None or sorted(rows) != list(range(period)):
        raise ParseError(f"expected one row for each residue 0..{(period or 1) - 1}")
    return QuasiPolynomial([rows[j] for j in range(period)])


def qp_to_dict(f: QuasiPolynomial) -> dict:
    return {
        "period": f.period,
        "degree": f.degree,
        "coefficients": [[format_rational(c) for c in row] for row in f.coeffs],
    }


def qp_from_dict(data: dict) -> QuasiPolynomial:
    rows = data["coefficients"]
    if len(rows) != data["period"]:
        raise ParseError("coefficient table does not match period")
    return QuasiPolynomial([[parse_rational(c) for c in row] for row in rows])


# ---------------------------------------------------------------------------
# polytope files
# ---------------------------------------------------------------------------

def parse_polytope_text(text: str):
    """Parse a polytope file body into a :class:`Polytope`."""
    from .polytope import Polytope, PolytopeError

    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None
        n = data.get("ambient_dim")
        raw = data.get("vertices")
        if not isinstance(n, int) or not isinstance(raw, list):
            raise ParseError("JSON polytope needs integer 'ambient_dim' and list 'vertices'")
        rows = [(k + 1, [str(c) for c in row]) for k, row in enumerate(raw)]
        label = "vertex"
    else:
        n = None
        rows = []
        label = "line"
        for k, raw_line in enumerate(text.splitlines(), 1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue
            if n is None:
                m = re.match(r"^(?:dim\s+)?(\d+)$", line)
                if not m:
                    raise ParseError(f"line {k}: expected 'dim N', got {line!r}")
                n = int(m.group(1))
                continue
            rows.append((k, line.replace(",", " ").split()))
        if n is None:
            raise ParseError("empty polytope file")
    vertices = []
    for k, tokens in rows:
        where = f"{label} {k}: "
        if len(tokens) != n:
            raise ParseError(f"{where}expected {n} coordinates, got {len(tokens)}")
        vertices.append([parse_rational(tok, where) for tok in tokens])
    if not vertices:
        raise ParseError("polytope has no vertices")
    try:
        return Polytope(vertices, n)
    except PolytopeError as exc:
        raise ParseError(str(exc)) from None


def read_polytope(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_polytope_text(fh.read())


def polytope_to_text(P) -> str:
    lines = [f"dim {P.ambient_dim}"]
    lines += [" ".join(format_rational(x) for x in v) for v in P.vertices]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------

def result_to_dict(res) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "dim": res.dim,
        "ambient_dim": res.ambient_dim,
        "i_indices": list(res.i_indices),
        "volume": None if res.volume is None else format_rational(res.volume),
        "ehrhart": qp_to_dict(res.qp),
        "interior": qp_to_dict(res.interior_qp),
    }


def result_from_dict(data: dict):
    from .engine import EhrhartResult

    vol = data.get("volume")
    return EhrhartResult(
        qp=qp_from_dict(data["ehrhart"]),
        dim=data["dim"],
        ambient_dim=data["ambient_dim"],
        i_indices=tuple(data["i_indices"]),
        interior_qp=qp_from_dict(data["interior"]),
        volume=None if vol is None else parse_rational(vol),
    )


def dumps_result(res) -> str:
    return json.dumps(result_to_dict(res), indent=2, ensure_ascii=False)
