"""Banked traceback pointer memory with coalesced addressing.

One bank per lane (bank index = row mod n_pe); all lanes of a wavefront
write the same address in their own banks, and consecutive wavefronts of
a chunk write consecutive addresses.  That layout makes same-cycle writes
conflict-free by construction; ``instrument=True`` records every write so
tests can assert it.
"""

from __future__ import annotations

from ..errors import TracebackOutOfBounds
from .schedule import ChunkSchedule


class TbMemory:
    def __init__(self, schedule: ChunkSchedule, instrument: bool = False):
        self.n_pe = schedule.n_pe
        self.bases = schedule.address_bases()
        total = schedule.total_addresses
        self.banks = [[None] * total for _ in range(self.n_pe)]
        self.write_log = [] if instrument else None

    def write(self, lane: int, addr: int, ptr: int) -> None:
        self.banks[lane][addr] = ptr

    def log_wavefront(self, chunk: int, wavefront: int, writes) -> None:
        if self.write_log is not None:
            self.write_log.append((chunk, wavefront, tuple(writes)))

    def read(self, i: int, j: int) -> int:
        """Pointer stored for interior cell (i, j)."""
        chunk, lane = divmod(i, self.n_pe)
        addr = self.bases[chunk] + j + lane
        ptr = self.banks[lane][addr]
        if ptr is None:
            raise TracebackOutOfBounds((i, j))
        return ptr
