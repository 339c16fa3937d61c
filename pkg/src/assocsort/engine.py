"""In-place sorting engine for lists of distinct unsigned integers.

The engine sorts by turning list words themselves into a temporary index
structure.  Each pass over a region covers the value interval
``[delta, delta + (w-1)*n - 1]``: every in-range value is *practiced* by
mapping it to a node index ``j`` and a bit position ``k``; the word at index
``j`` becomes a node (its most significant bit, the tag, is set) whose low
``w-1`` bits record which of the ``w-1`` possible values are present.
Records are then compacted to the front of the region (*storing*), the
redundant idle words are clustered next to them, and finally the nodes are
decoded right to left, expanding the sorted values back over the region
(*retrieval*).  Values beyond the interval are deferred to the next pass.

Everything runs inside the caller's list plus a constant number of local
variables, so auxiliary memory is O(1) regardless of input size.

Words are ``w``-bit: the tag occupies bit ``w-1``, so a region handed to
:func:`sort_region` must contain values below ``2**(w-1)``.  Values up to
``2**w - 1`` are handled by :func:`sort`, which splits the list around
``2**(w-1)`` and sorts the halves separately.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

HOST_BITS = 64

__all__ = [
    "HOST_BITS",
    "WordSpec",
    "Region",
    "PassTally",
    "SortReport",
    "PhaseEvent",
    "WorkCounter",
    "EmptyRegion",
    "DuplicateDetected",
    "CorruptState",
    "ValueExceedsUniverse",
    "compute_hash",
    "node_base",
    "find_min",
    "practice_pass",
    "store_records",
    "partition_idles",
    "retrieve_sorted",
    "sort_region",
    "sort",
]


class EmptyRegion(ValueError):
    """An operation that needs at least one word was given an empty region."""


class DuplicateDetected(ValueError):
    """Two equal values mapped to the same node bit; the input is not distinct.

    The region is left in an unspecified (but in-bounds) state.
    """


class CorruptState(RuntimeError):
    """Tag/record correspondence broke down during retrieval.

    Signals a duplicate that escaped detection or an internal bug.
    """


class ValueExceedsUniverse(ValueError):
    """A value does not fit the configured word width."""


@dataclass(frozen=True)
class WordSpec:
    """Bit layout of the simulated w-bit word.

    The tag occupies bit ``w-1`` and marks a word as a node; the remaining
    low ``w-1`` bits hold either a plain value or a node's record.
    """

    w: int
    tag_mask: int = field(init=False)
    value_mask: int = field(init=False)

    def __post_init__(self) -> None:
        if not 2 <= self.w <= HOST_BITS:
            raise ValueError(f"word width must be in [2, {HOST_BITS}], got {self.w}")
        object.__setattr__(self, "tag_mask", 1 << (self.w - 1))
        object.__setattr__(self, "value_mask", (1 << (self.w - 1)) - 1)

    @property
    def universe(self) -> int:
        """Exclusive upper bound of representable values, ``2**w``."""
        return 1 << self.w


HOST_SPEC = WordSpec(HOST_BITS)


@dataclass(frozen=True)
class Region:
    """A window ``[offset, offset+length)`` of the backing list.

    ``delta`` is the reference minimum for this pass.  The driver always uses
    the true minimum of the window; phase functions accept any ``delta`` not
    exceeding every value in the window.
    """

    offset: int
    length: int
    delta: int

    def __post_init__(self) -> None:
        if self.offset < 0 or self.length < 0:
            raise ValueError("region offset and length must be non-negative")


@dataclass(frozen=True)
class PassTally:
    """Counters produced by one practice pass.

    ``n_d`` nodes were created, ``n_c`` idle words were absorbed into node
    records, and ``n_d_prime`` values fell beyond the practiced interval and
    wait for a later pass.  ``delta_prime`` is the minimum of those deferred
    values (None when there are none).
    """

    n_d: int
    n_c: int
    n_d_prime: int
    delta_prime: int | None = None

    @property
    def sorted_count(self) -> int:
        """Words appended to the sorted prefix by this pass."""
        return self.n_d + self.n_c


@dataclass
class SortReport:
    """Per-pass tallies plus work counters and wall time for one sort call.

    ``words_scanned`` counts words examined to classify or route values: the
    initial validation/minimum sweep, the universe partition sweep when the
    full-range path runs, and every cursor step of each pass's practice
    sweep.  ``words_written`` counts every word mutation in any phase.
    """

    passes: list[PassTally] = field(default_factory=list)
    words_scanned: int = 0
    words_written: int = 0
    elapsed_ns: int = 0

    @property
    def pass_count(self) -> int:
        return len(self.passes)

    @property
    def total_sorted(self) -> int:
        return sum(t.sorted_count for t in self.passes)


@dataclass(frozen=True)
class PhaseEvent:
    """Snapshot handed to the tracing hook at each phase boundary.

    ``phase`` is one of ``practice``, ``store``, ``partition``, ``retrieve``
    or ``singleton``.  ``data`` is the live backing list; hooks must treat it
    as read-only.
    """

    phase: str
    pass_index: int
    region: Region
    tally: PassTally
    data: list[int]


PhaseHook = Callable[[PhaseEvent], None]


class WorkCounter:
    """Mutable scanned/written tallies shared across phase calls."""

    __slots__ = ("scanned", "written")

    def __init__(self) -> None:
        self.scanned = 0
        self.written = 0


def compute_hash(value: int, delta: int, n: int, spec: WordSpec) -> tuple[int, int] | None:
    """Map ``value`` to its (node index, bit index) pair for this pass.

    Returns None when the value lies beyond the practiced interval
    ``[delta, delta + (w-1)*n - 1]``; that is a normal outcome, not an error.  The
    range check divides instead of forming ``(w-1)*n``, which may not fit in
    w bits.
    """
    off = value - delta
    q = off // (spec.w - 1)
    if q >= n:
        return None
    return q, off - q * (spec.w - 1)


def node_base(position: int, delta: int, spec: WordSpec) -> int:
    """Smallest value represented by the node at ``position`` (inverse hash)."""
    return position * (spec.w - 1) + delta


def find_min(data: list[int], offset: int = 0, length: int | None = None) -> int:
    """Minimum of ``data[offset:offset+length]`` by one left-to-right scan."""
    if length is None:
        length = len(data) - offset
    if length <= 0:
        raise EmptyRegion("cannot take the minimum of an empty region")
    lo = data[offset]
    for i in range(offset + 1, offset + length):
        v = data[i]
        if v < lo:
            lo = v
    return lo


def practice_pass(
    data: list[int],
    region: Region,
    spec: WordSpec,
    work: WorkCounter | None = None,
) -> PassTally:
    """Practice every in-range value of the region into node records.

    After the call, a value ``v`` with hash ``(j, k)`` is encoded as bit ``k``
    of the node word at region index ``j``; exactly ``n_d`` words carry the
    tag.  Out-of-range values are counted and their minimum kept for the next
    pass.  When a value collides with a node, its word is re-homed at the
    cursor; if it came from beyond the cursor it is re-examined in place.

    Raises DuplicateDetected when a node bit is already set for an incoming
    value.  The region is then in an unspecified in-bounds state.
    """
    wm1 = spec.w - 1
    tag = spec.tag_mask
    delta = region.delta
    n = region.length
    base = region.offset
    end = base + n

    n_d = 0
    n_c = 0
    n_out = 0
    delta_next: int | None = None
    scanned = 0
    written = 0

    i = base
    while i < end:
        scanned += 1
        s = data[i]
        if s & tag:
            i += 1
            continue
        assert s >= delta, "value below the pass minimum leaked into the region"
        off = s - delta
        q = off // wm1
        if q >= n:
            n_out += 1
            if delta_next is None or s < delta_next:
                delta_next = s
            i += 1
            continue
        j = base + q
        node = data[j]
        bit = 1 << (off - q * wm1)
        if node & tag:
            if node & bit:
                raise DuplicateDetected(
                    f"value {s} occurs more than once (node {q}, bit {bit.bit_length() - 1})"
                )
            data[j] = node | bit
            written += 1
            n_c += 1
            i += 1
        else:
            # First value for this node: re-home the displaced word at the
            # cursor, then claim index j.  A word displaced from j <= i was
            # already classified, so the cursor moves on; from j > i it has
            # not been seen yet and is re-examined at i.
            data[i] = node
            data[j] = tag | bit
            written += 2
            n_d += 1
            if j <= i:
                i += 1

    if work is not None:
        work.scanned += scanned
        work.written += written
    return PassTally(n_d, n_c, n_out, delta_next)


def store_records(
    data: list[int],
    region: Region,
    n_d: int,
    spec: WordSpec,
    work: WorkCounter | None = None,
) -> None:
    """Compact the ``n_d`` node records into the first ``n_d`` low-bit slots.

    Only low bits move; every tag stays at its original index, so the r-th
    record from the left still belongs to the r-th tagged word from the left.
    Terminates after exactly ``n_d`` swaps.  Contributes mutations to the
    work counter; cursor steps of the shuffling phases are not scan work.
    """
    tag = spec.tag_mask
    vmask = spec.value_mask
    i = region.offset
    j = region.offset
    k = n_d
    written = 0
    while k:
        si = data[i]
        if si & tag:
            sj = data[j]
            data[j] = (sj & tag) | (si & vmask)
            data[i] = (si & tag) | (sj & vmask)
            written += 2
            j += 1
            k -= 1
        i += 1
    if work is not None:
        work.written += written


def partition_idles(
    data: list[int],
    region: Region,
    tally: PassTally,
    spec: WordSpec,
    work: WorkCounter | None = None,
) -> None:
    """Cluster the idle payloads directly behind the stored records.

    Within region indices ``[n_d, length)`` the low bits are permuted so the
    ``n_c`` in-range values come first and the deferred values last.  Tags
    stay put; a payload is deferred iff its hash quotient reaches the region
    length.  Terminates after exactly ``n_c`` placements.
    """
    wm1 = spec.w - 1
    tag = spec.tag_mask
    vmask = spec.value_mask
    delta = region.delta
    n = region.length

    i = region.offset + tally.n_d
    j = i
    k = tally.n_c
    written = 0
    while k:
        si = data[i]
        s = si & vmask
        if (s - delta) // wm1 >= n:
            i += 1
            continue
        sj = data[j]
        data[j] = (sj & tag) | s
        data[i] = (si & tag) | (sj & vmask)
        written += 2
        i += 1
        j += 1
        k -= 1
    if work is not None:
        work.written += written


def retrieve_sorted(
    data: list[int],
    region: Region,
    tally: PassTally,
    spec: WordSpec,
    work: WorkCounter | None = None,
) -> None:
    """Decode the nodes right to left and expand the sorted values in place.

    Scans for tags from the region end; the record cursor walks the stored
    records backwards in step with the tags found.  Each record is copied to
    a scratch register before emitting, because its own slot may be one of
    the write targets.  Expansion writes replace only the low bits and keep
    the destination tag: a write may land on a not-yet-scanned node, whose
    tag must survive until the scan consumes it (clearing the tag then
    reveals the already-written output value).

    Raises CorruptState when tags and records fall out of step, which means
    a duplicate escaped detection or the pre-phase state was inconsistent.
    """
    wm1 = spec.w - 1
    tag = spec.tag_mask
    vmask = spec.value_mask
    base = region.offset
    delta = region.delta

    p = base + tally.n_d + tally.n_c
    r = base + tally.n_d - 1
    i = base + region.length - 1
    written = 0

    while p > base:
        if i < base:
            raise CorruptState(
                f"scan exhausted with {p - base} output slots unfilled"
            )
        s = data[i]
        if not s & tag:
            i -= 1
            continue
        if r < base:
            raise CorruptState("tagged word found after all records were consumed")
        rec = data[r] & vmask
        vbase = (i - base) * wm1 + delta
        while rec:
            k = rec.bit_length() - 1
            rec ^= 1 << k
            p -= 1
            t = data[p]
            data[p] = (t & tag) | (vbase + k)
            written += 1
        data[i] &= vmask
        written += 1
        r -= 1
        i -= 1

    if r != base - 1:
        raise CorruptState(f"{r - base + 1} records left after all slots were written")
    if work is not None:
        work.written += written


def _scan_validate_min(
    data: list[int], offset: int, length: int, spec: WordSpec
) -> int:
    """One sweep that checks the region fits below the tag bit and finds its min."""
    bound = spec.tag_mask
    lo = None
    for idx in range(offset, offset + length):
        v = data[idx]
        if v < 0 or v >= bound:
            raise ValueExceedsUniverse(
                f"value {v} at index {idx} does not fit below the tag bit "
                f"(< 2^{spec.w - 1}); use sort() for full-universe input"
            )
        if lo is None or v < lo:
            lo = v
    assert lo is not None
    return lo


def _drive(
    data: list[int],
    spec: WordSpec,
    offset: int,
    length: int,
    hook: PhaseHook | None,
    report: SortReport,
    first_delta: int,
) -> None:
    """Run passes over ``data[offset:offset+length]`` until it is sorted.

    ``first_delta`` is the window minimum (already known from validation);
    later passes reuse the deferred minimum tracked during practicing, so no
    further min scans are needed.  Values must already be validated.
    """
    work = WorkCounter()
    pos = offset
    remaining = length
    delta = first_delta
    while remaining > 0:
        index = len(report.passes)
        if remaining == 1:
            tally = PassTally(1, 0, 0, None)
            report.passes.append(tally)
            if hook is not None:
                hook(
                    PhaseEvent(
                        "singleton", index, Region(pos, 1, data[pos]), tally, data
                    )
                )
            break
        region = Region(pos, remaining, delta)
        tally = practice_pass(data, region, spec, work)
        if hook is not None:
            hook(PhaseEvent("practice", index, region, tally, data))
        store_records(data, region, tally.n_d, spec, work)
        if hook is not None:
            hook(PhaseEvent("store", index, region, tally, data))
        partition_idles(data, region, tally, spec, work)
        if hook is not None:
            hook(PhaseEvent("partition", index, region, tally, data))
        retrieve_sorted(data, region, tally, spec, work)
        if hook is not None:
            hook(PhaseEvent("retrieve", index, region, tally, data))
        report.passes.append(tally)
        pos += tally.sorted_count
        remaining -= tally.sorted_count
        assert tally.delta_prime is not None or remaining == 0
        delta = tally.delta_prime if tally.delta_prime is not None else 0
    report.words_scanned += work.scanned
    report.words_written += work.written


def sort_region(
    data: list[int],
    spec: WordSpec,
    offset: int = 0,
    length: int | None = None,
    hook: PhaseHook | None = None,
) -> SortReport:
    """Sort ``data[offset:offset+length]`` ascending in place.

    Values must be pairwise distinct and fit below the tag bit
    (``< 2**(w-1)``).  Runs as many passes as the value spread requires; each
    pass appends its interval to the sorted prefix, so after pass t the first
    ``sum(sorted_count)`` words are final.
    """
    started = time.perf_counter_ns()
    if length is None:
        length = len(data) - offset
    if offset < 0 or length < 0 or offset + length > len(data):
        raise ValueError("region out of bounds")
    report = SortReport()
    if length > 0:
        delta = _scan_validate_min(data, offset, length, spec)
        report.words_scanned += length
        _drive(data, spec, offset, length, hook, report, delta)
    report.elapsed_ns = time.perf_counter_ns() - started
    return report


def sort(
    data: list[int],
    spec: WordSpec = HOST_SPEC,
    hook: PhaseHook | None = None,
) -> SortReport:
    """Sort a list of distinct values drawn from the full ``[0, 2**w)`` universe.

    Values at or above ``2**(w-1)`` would collide with the tag bit, so when
    any are present the list is first split in place around ``2**(w-1)``
    (order inside the halves is irrelevant for distinct values), the high
    half is shifted down by ``2**(w-1)``, both halves are sorted as regions,
    and the shift is undone.  The report covers both halves.
    """
    started = time.perf_counter_ns()
    report = SortReport()
    n = len(data)
    if n == 0:
        report.elapsed_ns = time.perf_counter_ns() - started
        return report

    half = spec.tag_mask
    limit = 1 << spec.w
    any_high = False
    low_min: int | None = None
    high_min: int | None = None
    for idx in range(n):
        v = data[idx]
        if v < 0 or v >= limit:
            raise ValueExceedsUniverse(
                f"value {v} at index {idx} does not fit in {spec.w} bits"
            )
        if v >= half:
            any_high = True
            if high_min is None or v < high_min:
                high_min = v
        elif low_min is None or v < low_min:
            low_min = v
    report.words_scanned += n

    if not any_high:
        assert low_min is not None
        _drive(data, spec, 0, n, hook, report, low_min)
        report.elapsed_ns = time.perf_counter_ns() - started
        return report

    # Unstable two-pointer split around the tag boundary.
    i, j = 0, n - 1
    swaps = 0
    while True:
        while i <= j and data[i] < half:
            i += 1
        while i <= j and data[j] >= half:
            j -= 1
        if i > j:
            break
        data[i], data[j] = data[j], data[i]
        swaps += 1
        i += 1
        j -= 1
    k = i
    report.words_scanned += n
    report.words_written += 2 * swaps

    for idx in range(k, n):
        data[idx] -= half
    report.words_written += n - k

    if k > 0:
        assert low_min is not None
        _drive(data, spec, 0, k, hook, report, low_min)
    assert high_min is not None
    _drive(data, spec, k, n - k, hook, report, high_min - half)

    for idx in range(k, n):
        data[idx] += half
    report.words_written += n - k

    report.elapsed_ns = time.perf_counter_ns() - started
    return report
