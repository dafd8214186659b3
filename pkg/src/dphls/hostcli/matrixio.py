"""Substitution-matrix files: whitespace-separated, labelled rows/columns.

The first non-comment line lists residue letters; each following line is
a residue label plus one value per column.  The parsed matrix is
re-indexed to the package's residue ordering (ACGT / ACGT+gap /
alphabetical amino acids) regardless of file ordering, so lookups by code
always agree with encode_sequence.  Extended amino-acid columns (B, Z, X,
J, U, O, *) are accepted and ignored.
"""

from __future__ import annotations

from ..core.alphabet import AMINO_ACIDS, NUCLEOTIDES
from ..core.scoring import freeze_matrix
from ..errors import MatrixShapeMismatch, UnknownResidue

_EXTENDED_AA = set("BZXJUO*")
_GAP_LABELS = {"N", "-", "*"}


def parse_matrix_text(text: str):
    """Parse matrix content; returns (matrix as tuple-of-tuples, k)."""
    lines = [
        ln for ln in (raw.strip() for raw in text.splitlines())
        if ln and not ln.startswith("#")
    ]
    if not lines:
        raise MatrixShapeMismatch("empty matrix file")
    header = lines[0].split()
    n_cols = len(header)
    values = {}
    row_labels = []
    for ln in lines[1:]:
        tokens = ln.split()
        label = tokens[0]
        if len(tokens) - 1 != n_cols:
            raise MatrixShapeMismatch(
                f"row {label!r} has {len(tokens) - 1} values, expected {n_cols}"
            )
        row_labels.append(label)
        for col_label, tok in zip(header, tokens[1:]):
            values[(label, col_label)] = _number(tok)
    if len(row_labels) != n_cols or set(row_labels) != set(header):
        raise MatrixShapeMismatch(
            f"{len(row_labels)} rows against {n_cols} columns"
        )

    order = _residue_order(set(header))
    matrix = [
        [values[(a, b)] for b in order]
        for a in order
    ]
    return freeze_matrix(matrix), len(order)


def parse_matrix(path):
    with open(path, "r", encoding="ascii") as fh:
        return parse_matrix_text(fh.read())


def format_matrix(matrix, labels) -> str:
    lines = ["  " + " ".join(labels)]
    for label, row in zip(labels, matrix):
        lines.append(label + " " + " ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def _number(token: str):
    try:
        return int(token)
    except ValueError:
        try:
            return float(token)
        except ValueError:
            raise MatrixShapeMismatch(f"non-numeric entry {token!r}") from None


def _residue_order(labels: set) -> list:
    nucs = set(NUCLEOTIDES)
    aas = set(AMINO_ACIDS)
    if labels == nucs:
        return list(NUCLEOTIDES)
    gap = labels & _GAP_LABELS
    if labels - gap == nucs and len(gap) == 1 and len(labels) == 5:
        return list(NUCLEOTIDES) + sorted(gap)
    if labels >= aas:
        extra = labels - aas - _EXTENDED_AA
        if extra:
            raise UnknownResidue(sorted(extra)[0])
        return list(AMINO_ACIDS)
    # Neither a DNA nor a protein alphabet: name the first bad label,
    # or report the shape when the labels are merely incomplete.
    bad = sorted(labels - nucs - aas - _GAP_LABELS)
    if bad:
        raise UnknownResidue(bad[0])
    raise MatrixShapeMismatch(f"unsupported alphabet of size {len(labels)}")


def parse_plain_matrix_text(text: str, k: int):
    """Unlabelled k x k numeric matrix (one row per line)."""
    rows = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        row = [_number(tok) for tok in ln.replace(",", " ").split()]
        if len(row) != k:
            raise MatrixShapeMismatch(f"expected {k} values per row, got {len(row)}")
        rows.append(row)
    if len(rows) != k:
        raise MatrixShapeMismatch(f"expected {k} rows, got {len(rows)}")
    return freeze_matrix(rows)


def parse_plain_matrix(path, k: int):
    with open(path, "r", encoding="ascii") as fh:
        return parse_plain_matrix_text(fh.read(), k)
