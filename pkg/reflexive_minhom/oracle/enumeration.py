"""
Reflexive digraphs on n <= 5 vertices, one canonical representative per isomorphism class.

A reflexive digraph on n vertices is encoded by its n(n-1) off-diagonal adjacency bits in row-major order, the first
slot being the most significant bit. The canonical code of a digraph is the smallest code over all relabelings, and
a code is a class representative exactly when it is its own canonical code.
"""
import logging
import multiprocessing
from itertools import permutations
import numpy as np
from reflexive_minhom.graphs.digraph import Digraph
from reflexive_minhom.utils.common_exceptions import NonReflexiveInputException

logger = logging.getLogger(__name__)

MAX_ENUMERATION_SIZE = 5
VERTEX_NAMES = "abcde"
BLOCK_SIZE = 1 << 16


class EnumerationSizeException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def _slots(size):
    return [(tail, head) for tail in range(size) for head in range(size) if tail != head]


def _permuted_slot_indices(size):
    """
    One row per vertex permutation: row[k] is the slot whose bit the relabeled digraph shows in slot k.
    """
    slots = _slots(size)
    slot_index = {slot: index for index, slot in enumerate(slots)}
    return np.array([[slot_index[(permutation[tail], permutation[head])] for tail, head in slots]
                     for permutation in permutations(range(size))], dtype=np.int64).reshape(-1, len(slots))


def _slot_weights(size):
    slot_count = size * (size - 1)
    return np.array([1 << (slot_count - 1 - index) for index in range(slot_count)], dtype=np.int64)


def _canonical_codes(size, codes):
    """
    Canonical code of every code in the array, vectorised over the codes.
    """
    slot_count = size * (size - 1)
    if slot_count == 0:
        return codes.copy()

    weights = _slot_weights(size)
    shifts = np.arange(slot_count - 1, -1, -1, dtype=np.int64)
    bits = (codes[:, None] >> shifts[None, :]) & 1
    canonical = None

    for slot_indices in _permuted_slot_indices(size):
        relabeled = bits[:, slot_indices] @ weights
        canonical = relabeled if canonical is None else np.minimum(canonical, relabeled)

    return canonical


def _representatives_in_block(arguments):
    size, start, stop = arguments
    codes = np.arange(start, stop, dtype=np.int64)
    return [int(code) for code in codes[_canonical_codes(size, codes) == codes]]


def _check_size(size):
    if size < 1 or size > MAX_ENUMERATION_SIZE:
        raise EnumerationSizeException(f"Enumeration supports 1 to {MAX_ENUMERATION_SIZE} vertices, got {size}")


def encode(digraph):
    if not digraph.is_reflexive():
        raise NonReflexiveInputException(f"Only reflexive digraphs are encoded, {digraph.name} is not")

    code = 0
    for tail, head in _slots(len(digraph)):
        code = (code << 1) | int(digraph.has_arc_at(tail, head))
    return code


def decode(size, code, name=None):
    """
    The reflexive digraph with the given code, on vertices a, b, c, ...
    """
    arcs = [(index, index) for index in range(size)]
    slots = _slots(size)

    for index, slot in enumerate(slots):
        if code >> (len(slots) - 1 - index) & 1:
            arcs.append(slot)

    return Digraph.from_index_arcs(VERTEX_NAMES[:size], sorted(arcs), name=name or f"n{size}_{code}")


def canonical_form(digraph):
    """
    (vertex count, canonical code) of a reflexive digraph; isomorphic digraphs, and only those, share it.
    """
    _check_size(len(digraph))
    size = len(digraph)
    return size, int(_canonical_codes(size, np.array([encode(digraph)], dtype=np.int64))[0])


class IsoClassIterator(object):
    """
    Canonical representatives of the isomorphism classes of reflexive digraphs on size vertices, in increasing code
    order. The code space is split into blocks that are canonicalised by a process pool when processes > 1; the
    merged list is sorted, so the result does not depend on the schedule.
    """

    def __init__(self, size, processes=1):
        _check_size(size)
        self.size = size
        self._processes = processes
        self._codes = None

    @property
    def codes(self):
        if self._codes is None:
            slot_count = self.size * (self.size - 1)
            blocks = [(self.size, start, min(start + BLOCK_SIZE, 1 << slot_count))
                      for start in range(0, 1 << slot_count, BLOCK_SIZE)]

            if self._processes > 1 and len(blocks) > 1:
                with multiprocessing.get_context("spawn").Pool(processes=self._processes) as pool:
                    results = pool.map(_representatives_in_block, blocks)
            else:
                results = [_representatives_in_block(block) for block in blocks]

            self._codes = sorted(code for block_codes in results for code in block_codes)
            logger.debug(f"{len(self._codes)} isomorphism classes of reflexive digraphs on {self.size} vertices")

        return self._codes

    def __len__(self):
        return len(self.codes)

    def __iter__(self):
        for code in self.codes:
            yield decode(self.size, code)


def enumerate_reflexive_digraphs(size, processes=1):
    return IsoClassIterator(size, processes)
