"""Point and island file formats plus deterministic JSON output.

Point files: UTF-8 text, one point per line as two base-10 integers
separated by whitespace; '#' lines and blank lines are ignored;
duplicates are rejected at load.  Island files: one island per line,
comma-separated ascending input-order indices.
"""

import json

from .errors import PointFileError
from .geometry import Point, PointSet


def parse_points(text: str) -> PointSet:
    pts: list[Point] = []
    seen = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PointFileError(line_no, f"expected two integers, got {raw!r}")
        try:
            p = Point(int(parts[0]), int(parts[1]))
        except ValueError:
            raise PointFileError(line_no, f"bad integer in {raw!r}") from None
        if p in seen:
            raise PointFileError(line_no, f"duplicate point {p} (first at line {seen[p]})")
        seen[p] = line_no
        pts.append(p)
    if not pts:
        raise PointFileError(0, "no points in file")
    return PointSet(pts)


def load_points(path) -> PointSet:
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def format_points(ps: PointSet, header: dict | None = None) -> str:
    lines = []
    for key, value in (header or {}).items():
        lines.append(f"# {key}: {value}")
    for p in ps.points:
        lines.append(f"{p.x} {p.y}")
    return "\n".join(lines) + "\n"


def save_points(path, ps: PointSet, header: dict | None = None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_points(ps, header))


def format_islands(islands) -> str:
    return "\n".join(",".join(str(i) for i in isl) for isl in islands) + "\n"


def parse_islands(text: str) -> list[tuple[int, ...]]:
    out = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            members = tuple(int(v) for v in line.split(","))
        except ValueError:
            raise PointFileError(line_no, f"bad index list {raw!r}") from None
        if list(members) != sorted(set(members)):
            raise PointFileError(line_no, f"indices must be strictly ascending: {raw!r}")
        out.append(members)
    return out


def load_islands(path) -> list[tuple[int, ...]]:
    with open(path, encoding="utf-8") as fh:
        return parse_islands(fh.read())


def dump_json(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, newline-terminated."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
