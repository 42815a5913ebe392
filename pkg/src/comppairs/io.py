"""Text family files and JSON/CSV report records.

Family file layout::

    n=4
    -
    1
    1,2,3

The header gives the universe size; each further line is one set as
comma-separated 1-indexed elements, ``-`` for the empty set.  Lines are
sorted ascending by mask (element i is bit i-1) and duplicates are rejected.
"""

from __future__ import annotations

import csv
import io
import json

from .errors import ComparablesError
from .lattice import SetFamily, check_universe, elements, mask_of


class FamilyFormatError(ComparablesError):
    def __init__(self, path, line, msg):
        super().__init__(f"{path}:{line}: {msg}")
        self.path = path
        self.line = line


def format_set(mask: int) -> str:
    return ",".join(map(str, elements(mask))) if mask else "-"


def render_family(f: SetFamily) -> str:
    lines = [f"n={f.n}"]
    lines.extend(format_set(x) for x in f.members)
    return "\n".join(lines) + "\n"


def parse_family(text: str, path: str = "<string>") -> SetFamily:
    rows = text.splitlines()
    if not rows or not rows[0].strip().startswith("n="):
        raise FamilyFormatError(path, 1, "expected header 'n=<integer>'")
    try:
        n = check_universe(int(rows[0].strip()[2:]))
    except ValueError as exc:
        raise FamilyFormatError(path, 1, str(exc)) from None
    masks = []
    seen = {}
    for lineno, raw in enumerate(rows[1:], start=2):
        line = raw.strip()
        if not line:
            continue
        if line == "-":
            mask = 0
        else:
            try:
                elems = [int(tok) for tok in line.split(",")]
            except ValueError:
                raise FamilyFormatError(path, lineno, f"bad set {line!r}") from None
            if any(e < 1 or e > n for e in elems):
                raise FamilyFormatError(path, lineno, f"element outside 1..{n} in {line!r}")
            if len(set(elems)) != len(elems):
                raise FamilyFormatError(path, lineno, f"repeated element in {line!r}")
            mask = mask_of(elems)
        if mask in seen:
            raise FamilyFormatError(path, lineno, f"duplicate of line {seen[mask]}")
        if masks and mask < masks[-1]:
            raise FamilyFormatError(path, lineno, "lines must be sorted ascending by mask")
        seen[mask] = lineno
        masks.append(mask)
    return SetFamily(n, tuple(masks))


def read_family(path: str) -> SetFamily:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise FamilyFormatError(path, 0, exc.strerror or str(exc)) from None
    return parse_family(text, path)


def write_family(f: SetFamily, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(render_family(f))


CSV_FIELDS = ["name", "inputs", "bound", "observed", "margin", "holds"]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def dumps(record: dict) -> str:
    return json.dumps(record, sort_keys=True)
