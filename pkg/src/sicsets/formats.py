"""Configuration JSON and the small CSV/JSON tables written by the CLI."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from .projective import Configuration, ProjectivePoint


class FormatError(ValueError):
    pass


def _num(x: float) -> str:
    s = format(float(x), ".17g")
    if s in ("nan", "inf", "-inf"):
        raise FormatError("non-finite coordinate")
    return s


def dumps_configuration(c: Configuration) -> str:
    """Canonical representatives, 17 significant digits per real."""
    rows = []
    for p in c:
        pairs = ", ".join(f"[{_num(z.real)}, {_num(z.imag)}]" for z in p.rep)
        rows.append(f"    [{pairs}]")
    body = ",\n".join(rows)
    return f'{{\n  "n": {c.n},\n  "points": [\n{body}\n  ]\n}}\n'


def loads_configuration(text: str) -> Configuration:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict) or "n" not in data or "points" not in data:
        raise FormatError('expected an object with keys "n" and "points"')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise FormatError('"n" must be an integer')
    pts = []
    for k, raw in enumerate(data["points"]):
        if not isinstance(raw, list) or len(raw) != n:
            raise FormatError(f"point {k}: expected {n} complex pairs")
        coords = []
        for pair in raw:
            if (not isinstance(pair, list) or len(pair) != 2
                    or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)):
                raise FormatError(f"point {k}: coordinates must be [re, im] pairs")
            coords.append(complex(pair[0], pair[1]))
        try:
            pts.append(ProjectivePoint(coords))
        except ValueError as exc:
            raise FormatError(f"point {k}: {exc}") from exc
    if not pts:
        raise FormatError("configuration has no points")
    return Configuration(pts)


def write_configuration(c: Configuration, path: str | Path) -> None:
    Path(path).write_text(dumps_configuration(c))


def read_configuration(path: str | Path) -> Configuration:
    return loads_configuration(Path(path).read_text())


def _g12(x: float) -> str:
    return format(float(x), ".12g")


def curve_csv(samples: Iterable[tuple[float, float, int]]) -> str:
    lines = ["sigma,phi,component"]
    lines += [f"{_g12(s)},{_g12(f)},{c}" for s, f, c in samples]
    return "\n".join(lines) + "\n"


def table_csv(rows: Sequence[tuple[float, int]]) -> str:
    lines = ["t,count"]
    lines += [f"{_g12(t)},{n}" for t, n in rows]
    return "\n".join(lines) + "\n"


def solutions_json(solutions) -> str:
    out = [{"t": s.t, "x": s.triple[0], "y": s.triple[1], "z": s.triple[2],
            "residual": s.residual} for s in solutions]
    return json.dumps(out, indent=2) + "\n"
