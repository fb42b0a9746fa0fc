"""Text formats: JSON band files, dense CSV matrices and RHS vectors.

A band file looks like::

    {
      "format": "hepta-band-v1",
      "kind": "cyclic",
      "n": 10,
      "entries": {
        "d": ["1", "1", "-1", ...],
        ...
      }
    }

Values are strings ("p" or "p/q") so they stay exact.  For ``kind: "anti"``
the arrays describe the cyclic core ``H`` of ``M = H P``.
"""

import csv
import io
import json
from dataclasses import dataclass

from .core import FAMILIES, AntiCyclicHeptaMatrix, from_bands
from .errors import ParseError
from .scalars import format_rational, parse_rational

FORMAT_TAG = "hepta-band-v1"
KINDS = ("cyclic", "anti")


@dataclass(frozen=True)
class BandFile:
    kind: str
    n: int
    entries: dict

    @classmethod
    def from_matrix(cls, H):
        kind = "cyclic"
        if isinstance(H, AntiCyclicHeptaMatrix):
            kind, H = "anti", H.core
        entries = {f: [format_rational(x) for x in H.band(f)] for f in FAMILIES}
        return cls(kind=kind, n=H.n, entries=entries)

    def to_matrix(self):
        H = from_bands(self.n, *(
            [parse_rational(x) for x in self.entries[f]] for f in FAMILIES
        ))
        return AntiCyclicHeptaMatrix(H) if self.kind == "anti" else H

    def dumps(self):
        lines = [
            "{",
            f'  "format": "{FORMAT_TAG}",',
            f'  "kind": "{self.kind}",',
            f'  "n": {self.n},',
            '  "entries": {',
        ]
        for idx, f in enumerate(FAMILIES):
            sep = "," if idx < len(FAMILIES) - 1 else ""
            lines.append(f'    "{f}": {json.dumps(self.entries[f])}{sep}')
        lines += ["  }", "}", ""]
        return "\n".join(lines)

    @classmethod
    def loads(cls, text, source="<string>"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from None
        if not isinstance(doc, dict):
            raise ParseError(f"{source}: top level must be an object")
        if doc.get("format") != FORMAT_TAG:
            raise ParseError(
                f"{source}: field 'format' must be {FORMAT_TAG!r}, got {doc.get('format')!r}"
            )
        kind = doc.get("kind", "cyclic")
        if kind not in KINDS:
            raise ParseError(f"{source}: field 'kind' must be one of {KINDS}, got {kind!r}")
        n = doc.get("n")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError(f"{source}: field 'n' must be an integer, got {n!r}")
        raw = doc.get("entries")
        if not isinstance(raw, dict):
            raise ParseError(f"{source}: field 'entries' must be an object")
        entries = {}
        for f in FAMILIES:
            arr = raw.get(f)
            if not isinstance(arr, list):
                raise ParseError(f"{source}: entries.{f} must be an array of strings")
            vals = []
            for i, x in enumerate(arr, start=1):
                if isinstance(x, int) and not isinstance(x, bool):
                    x = str(x)
                if not isinstance(x, str):
                    raise ParseError(f"{source}: entries.{f}[{i}] must be a string, got {x!r}")
                try:
                    vals.append(format_rational(parse_rational(x)))
                except ParseError:
                    raise ParseError(
                        f"{source}: entries.{f}[{i}] = {x!r} is not an exact rational"
                    ) from None
            entries[f] = vals
        unknown = set(raw) - set(FAMILIES)
        if unknown:
            raise ParseError(f"{source}: unknown entries {sorted(unknown)}")
        return cls(kind=kind, n=n, entries=entries)


def load_band_file(path):
    with open(path, encoding="utf-8") as fh:
        return BandFile.loads(fh.read(), source=str(path)).to_matrix()


def save_band_file(H, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(BandFile.from_matrix(H).dumps())


def dense_to_csv(M):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in M:
        writer.writerow(format_rational(x) for x in row)
    return buf.getvalue()


def dense_from_csv(text, source="<string>"):
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row:
            continue
        try:
            rows.append([parse_rational(x) for x in row])
        except ParseError as exc:
            raise ParseError(f"{source}: line {lineno}: {exc}") from None
    if not rows:
        raise ParseError(f"{source}: no rows")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError(f"{source}: rows have differing lengths")
    return rows


def load_dense_csv(path):
    with open(path, encoding="utf-8") as fh:
        return dense_from_csv(fh.read(), source=str(path))


def load_rhs(path):
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                values.append(parse_rational(line))
            except ParseError as exc:
                raise ParseError(f"{path}: line {lineno}: {exc}") from None
    return values
