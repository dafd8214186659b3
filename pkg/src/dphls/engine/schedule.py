"""Row-chunk schedule: how query rows map onto processing lanes."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ChunkSchedule:
    """Query rows split into chunks of n_pe consecutive rows.

    Within a chunk, lane p owns row (chunk_start + p) and wavefront w
    computes the anti-diagonal of cells (row, w - p).  A chunk of
    ``rows`` rows over ``r_len`` columns spans ``r_len + rows - 1``
    wavefronts; traceback addresses are coalesced so consecutive
    wavefronts of a chunk land at consecutive addresses.
    """

    q_len: int
    r_len: int
    n_pe: int

    @property
    def chunk_count(self) -> int:
        return -(-self.q_len // self.n_pe)

    def chunk_rows(self, chunk: int) -> tuple[int, int]:
        start = chunk * self.n_pe
        return start, min(start + self.n_pe, self.q_len)

    def wavefronts(self, chunk: int) -> int:
        start, stop = self.chunk_rows(chunk)
        return self.r_len + (stop - start) - 1

    def chunks(self):
        for c in range(self.chunk_count):
            start, stop = self.chunk_rows(c)
            yield c, start, stop

    def address_bases(self) -> list[int]:
        """Per-chunk base addresses in the coalesced traceback memory."""
        bases = []
        base = 0
        for c in range(self.chunk_count):
            bases.append(base)
            base += self.wavefronts(c)
        return bases

    @property
    def total_addresses(self) -> int:
        return sum(self.wavefronts(c) for c in range(self.chunk_count))
