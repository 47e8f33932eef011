from reflexive_minhom.utils.common_exceptions import NonReflexiveInputException


class BandViolation(Exception):
    """
    Raised when the arc relation, read along the ordering, is not a monotone band. witness names the offending row
    (and the previous row for monotonicity failures).
    """

    def __init__(self, error_msg, witness):
        super().__init__(error_msg)
        self.witness = witness


class BandProfile(object):
    """
    Row a (1-based position in the ordering) of the arc relation is the interval [lo(a), hi(a)] of positions, with
    lo and hi nondecreasing. psi(b) is the first row whose interval reaches b, i.e. min{a : hi(a) >= b}.
    """

    def __init__(self, ordering, lo, hi):
        self.ordering = ordering
        self.lo = tuple(lo)
        self.hi = tuple(hi)
        size = len(self.lo)
        self.psi = tuple(min(a for a in range(1, size + 1) if self.hi[a - 1] >= b) for b in range(1, size + 1))

    @property
    def size(self):
        return len(self.lo)

    def lo_of(self, position):
        return self.lo[position - 1]

    def hi_of(self, position):
        return self.hi[position - 1]

    def psi_of(self, position):
        return self.psi[position - 1]

    def related(self, first, second):
        """
        Whether positions first -> second are an arc.
        """
        return self.lo_of(first) <= second <= self.hi_of(first)

    def __repr__(self):
        return f"BandProfile(lo={self.lo}, hi={self.hi})"


def band_profile(digraph, ordering):
    if not digraph.is_reflexive():
        raise NonReflexiveInputException(f"Band profiles are only defined for reflexive templates, "
                                         f"{digraph.name} is not")

    matrix = ordering.ordered_matrix(digraph)
    lo, hi = [], []

    for row_index, row in enumerate(matrix):
        positions = [column + 1 for column, present in enumerate(row) if present]
        first, last = positions[0], positions[-1]
        vertex = ordering.sequence[row_index]

        if len(positions) != last - first + 1:
            gap = next(position for position in range(first, last + 1) if position not in positions)
            raise BandViolation(f"Row of {vertex} is not an interval: missing {ordering.sequence[gap - 1]}",
                                witness=(vertex, ordering.sequence[gap - 1]))

        if row_index > 0 and (first < lo[-1] or last < hi[-1]):
            previous = ordering.sequence[row_index - 1]
            raise BandViolation(f"Rows of {previous} and {vertex} are not monotone: "
                                f"[{lo[-1]}, {hi[-1]}] then [{first}, {last}]", witness=(previous, vertex))

        lo.append(first)
        hi.append(last)

    return BandProfile(ordering, lo, hi)
