"""Signal and profile inputs: one sample per line.

Complex samples are "re,im" CSV lines, integer samples one integer per
line, profile columns five whitespace/tab-separated frequencies (counts
are accepted and normalized to frequencies).
"""

from __future__ import annotations

from ..core.alphabet import SymbolKind
from ..errors import EmptyFile, MalformedSample


def parse_signal_text(text: str, kind: SymbolKind):
    samples = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if kind is SymbolKind.COMPLEX_SAMPLE:
            parts = line.split(",")
            if len(parts) != 2:
                raise MalformedSample(line_no, "expected 're,im'")
            try:
                samples.append(complex(float(parts[0]), float(parts[1])))
            except ValueError:
                raise MalformedSample(line_no, "non-numeric component") from None
        elif kind is SymbolKind.INT_SAMPLE:
            try:
                samples.append(int(line))
            except ValueError:
                raise MalformedSample(line_no, "expected an integer") from None
        elif kind is SymbolKind.PROFILE_COLUMN:
            parts = line.replace(",", "\t").split()
            if len(parts) != 5:
                raise MalformedSample(line_no, f"expected 5 columns, got {len(parts)}")
            try:
                col = [float(p) for p in parts]
            except ValueError:
                raise MalformedSample(line_no, "non-numeric frequency") from None
            if any(v < 0 for v in col):
                raise MalformedSample(line_no, "negative frequency")
            total = sum(col)
            if total <= 0:
                raise MalformedSample(line_no, "zero total frequency")
            samples.append(tuple(v / total for v in col))
        else:
            raise ValueError(f"{kind} is not a signal kind")
    if not samples:
        raise EmptyFile("no samples")
    return samples


def parse_signal(path, kind: SymbolKind):
    with open(path, "r", encoding="ascii") as fh:
        return parse_signal_text(fh.read(), kind)


def format_signal(samples, kind: SymbolKind) -> str:
    lines = []
    for s in samples:
        if kind is SymbolKind.COMPLEX_SAMPLE:
            lines.append(f"{s.real:g},{s.imag:g}")
        elif kind is SymbolKind.INT_SAMPLE:
            lines.append(str(s))
        else:
            lines.append("\t".join(f"{v:g}" for v in s))
    return "\n".join(lines) + "\n"
