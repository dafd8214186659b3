"""Minimal FASTA reading/writing."""

from __future__ import annotations

from ..errors import EmptyFile, MalformedFasta


def parse_fasta_text(text: str):
    """Parse FASTA content into an ordered list of (id, sequence).

    Record ids are the first whitespace-delimited token of the header;
    sequence lines are concatenated with all whitespace stripped.
    """
    if not text.strip():
        raise EmptyFile("no FASTA records")
    records = []
    current = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith(">"):
            header = stripped[1:].strip()
            if not header:
                raise MalformedFasta(line_no, "empty header")
            current = (header.split()[0], [])
            records.append(current)
        else:
            if current is None:
                raise MalformedFasta(line_no, "sequence data before first '>'")
            current[1].append("".join(stripped.split()))
    return [(rid, "".join(parts)) for rid, parts in records]


def parse_fasta(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_fasta_text(fh.read())


def format_fasta(records, width: int = 60) -> str:
    out = []
    for rid, seq in records:
        out.append(f">{rid}")
        for k in range(0, len(seq), width):
            out.append(seq[k : k + width])
    return "\n".join(out) + "\n"
