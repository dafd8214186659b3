"""Sequence alphabets and symbol encoding.

Coded alphabets (DNA, DNA+N, protein) map to small integers; profile
columns are 5-tuples of frequencies; signal kernels take complex or
integer samples directly.  Amino acids are numbered in alphabetical
one-letter order so substitution-matrix files and encodings agree.
"""

from __future__ import annotations

from enum import Enum

from ..errors import EmptySequence, InvalidCharacter, ProfileLengthMismatch


class SymbolKind(Enum):
    NUCLEOTIDE = "nucleotide"
    AMBIGUOUS_NUCLEOTIDE = "ambiguous_nucleotide"
    AMINO_ACID = "amino_acid"
    PROFILE_COLUMN = "profile_column"
    COMPLEX_SAMPLE = "complex_sample"
    INT_SAMPLE = "int_sample"


NUCLEOTIDES = "ACGT"
AMINO_ACIDS = "ACDEFGHIKLMNPQRSTVWY"  # alphabetical one-letter codes

#: Index of the gap/ambiguity slot in 5-letter alphabets and profile columns.
GAP_INDEX = 4

_NUC_CODES = {c: i for i, c in enumerate(NUCLEOTIDES)}
_NUC_CODES["U"] = _NUC_CODES["T"]  # RNA folds onto DNA
_AA_CODES = {c: i for i, c in enumerate(AMINO_ACIDS)}


def encode_sequence(text: str | bytes, kind: SymbolKind) -> list[int]:
    """Encode a DNA/RNA/protein string into integer codes.

    Case-insensitive.  ``N`` and ``-`` are accepted (as code 4) only for
    AMBIGUOUS_NUCLEOTIDE.  Raises InvalidCharacter with the offending
    position otherwise, and EmptySequence for empty input.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    if not text:
        raise EmptySequence("cannot encode an empty sequence")
    if kind is SymbolKind.AMINO_ACID:
        table = _AA_CODES
        extra = {}
    elif kind is SymbolKind.NUCLEOTIDE:
        table = _NUC_CODES
        extra = {}
    elif kind is SymbolKind.AMBIGUOUS_NUCLEOTIDE:
        table = _NUC_CODES
        extra = {"N": GAP_INDEX, "-": GAP_INDEX}
    else:
        raise ValueError(f"{kind} sequences are not text-encoded")
    out = []
    for pos, ch in enumerate(text):
        u = ch.upper()
        code = table.get(u)
        if code is None:
            code = extra.get(u)
        if code is None:
            raise InvalidCharacter(pos, ch)
        out.append(code)
    return out


def check_profile(columns, position_offset: int = 0) -> list[tuple]:
    """Validate profile columns: 5 non-negative entries each.

    Returns the columns as tuples; raises ProfileLengthMismatch on a
    column of the wrong width.
    """
    out = []
    for pos, col in enumerate(columns):
        col = tuple(float(x) for x in col)
        if len(col) != 5:
            raise ProfileLengthMismatch(position_offset + pos, len(col))
        if any(x < 0 for x in col):
            raise ValueError(f"profile column {pos} has a negative frequency")
        out.append(col)
    return out


def normalize_profile(columns) -> list[tuple]:
    """Rescale each validated column so its entries sum to 1."""
    out = []
    for col in check_profile(columns):
        total = sum(col)
        if total <= 0:
            raise ValueError("profile column has zero total frequency")
        out.append(tuple(x / total for x in col))
    return out
