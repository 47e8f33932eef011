"""
Turns a bipartite Min-Max ordering of B(H) into a Min-Max ordering of a reflexive H by exchanging improper pairs,
or reports the pair it got stuck on together with the vertices that block both exchanges.
"""
import logging
from math import comb
from reflexive_minhom.graphs.constructions import bipartite_double, white_name, black_name
from reflexive_minhom.orderings.ordering import Ordering, BipartiteOrdering, is_bipartite_min_max, is_min_max
from reflexive_minhom.utils.common_exceptions import NonReflexiveInputException

logger = logging.getLogger(__name__)

CASE_1 = "Case 1"
CASE_2 = "Case 2"
CASE_1_MIRROR = "Case 1 mirror"
CASE_2_MIRROR = "Case 2 mirror"

S_BLACK = "s_black"    # s'v'' in E, s'u'' not in E: blocks swapping u'' and v''
S_MIRROR = "s_mirror"  # s'u'' in E, s'v'' not in E
T_WHITE = "t_white"    # u't'' in E, v't'' not in E: blocks swapping u' and v'
T_MIRROR = "t_mirror"  # v't'' in E, u't'' not in E

_CASES = {(S_BLACK, T_MIRROR): CASE_1,
          (S_BLACK, T_WHITE): CASE_2,
          (S_MIRROR, T_WHITE): CASE_1_MIRROR,
          (S_MIRROR, T_MIRROR): CASE_2_MIRROR}


class ExchangePreconditionException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class ExchangeInvariantError(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class StuckReport(object):
    """
    An improper pair (v' < u' but u'' < v'') neither of whose exchanges keeps the ordering bipartite Min-Max,
    with a witness s on the black side and t on the white side.
    """

    def __init__(self, u, v, s, t, s_kind, t_kind, bipartite_ordering, swaps):
        self.u = u
        self.v = v
        self.s = s
        self.t = t
        self.s_kind = s_kind
        self.t_kind = t_kind
        self.bipartite_ordering = bipartite_ordering
        self.swaps = swaps

    @property
    def case(self):
        return _CASES[(self.s_kind, self.t_kind)]

    def witnesses_hold(self, digraph):
        """
        Re-checks the edge and non-edge pattern the case tag claims, on B(H) read through H's arcs.
        """
        arc = digraph.has_arc
        s_conditions = {S_BLACK: arc(self.s, self.v) and not arc(self.s, self.u),
                        S_MIRROR: arc(self.s, self.u) and not arc(self.s, self.v)}
        t_conditions = {T_WHITE: arc(self.u, self.t) and not arc(self.v, self.t),
                        T_MIRROR: arc(self.v, self.t) and not arc(self.u, self.t)}
        return s_conditions[self.s_kind] and t_conditions[self.t_kind]

    def describe(self):
        return f"stuck on improper pair ({self.u}, {self.v}): {self.case}, s = {self.s}, t = {self.t}"

    def __repr__(self):
        return f"StuckReport({self.describe()})"


class ExchangeTrace(object):
    def __init__(self, result, swaps):
        self.result = result
        self.swaps = swaps

    @property
    def succeeded(self):
        return isinstance(self.result, Ordering)


def _split_bipartite_ordering(digraph, bipartite_ordering):
    white_lookup = {white_name(vertex): index for index, vertex in enumerate(digraph.vertices)}
    black_lookup = {black_name(vertex): index for index, vertex in enumerate(digraph.vertices)}
    return [white_lookup[vertex] for vertex in bipartite_ordering.white], \
        [black_lookup[vertex] for vertex in bipartite_ordering.black]


def _to_bipartite_ordering(digraph, white_order, black_order):
    return BipartiteOrdering([white_name(digraph.vertices[index]) for index in white_order],
                             [black_name(digraph.vertices[index]) for index in black_order])


def _improper_pairs(white_order, black_order):
    """
    (u, v) index pairs with v' < u' and u'' < v'', scanned by (position of v', position of u').
    """
    black_positions = {vertex: position for position, vertex in enumerate(black_order)}

    for v_position, v in enumerate(white_order):
        for u in white_order[v_position + 1:]:
            if black_positions[u] < black_positions[v]:
                yield u, v


def _first_witness(digraph, preferences):
    for kind, condition in preferences:
        for index in range(len(digraph)):
            if condition(index):
                return kind, index
    return None, None


def _transposed(order, first, second):
    swapped = list(order)
    first_position, second_position = swapped.index(first), swapped.index(second)
    swapped[first_position], swapped[second_position] = swapped[second_position], swapped[first_position]
    return swapped


def _stuck_report(digraph, u, v, white_order, black_order, swaps):
    arc = digraph.has_arc_at
    s_kind, s = _first_witness(digraph, [(S_BLACK, lambda s: arc(s, v) and not arc(s, u)),
                                         (S_MIRROR, lambda s: arc(s, u) and not arc(s, v))])
    t_kind, t = _first_witness(digraph, [(T_MIRROR, lambda t: arc(v, t) and not arc(u, t)),
                                         (T_WHITE, lambda t: arc(u, t) and not arc(v, t))])

    if s is None or t is None:
        # Twin rows or columns can always be exchanged, so a stuck pair has witnesses on both sides
        raise ExchangeInvariantError(f"Stuck on ({digraph.vertices[u]}, {digraph.vertices[v]}) without witnesses")

    names = digraph.vertices
    return StuckReport(names[u], names[v], names[s], names[t], s_kind, t_kind,
                       _to_bipartite_ordering(digraph, white_order, black_order), swaps)


def run_exchange(digraph, bipartite_ordering):
    """
    Exchanges improper pairs until none remain. For each improper pair, in scan order, the black transposition is
    tried when no s' with s'v'' in E and s'u'' not in E exists, then the white transposition when no t'' with
    u't'' in E and v't'' not in E exists. A transposition is only kept if the ordering stays bipartite Min-Max.
    Returns an ExchangeTrace whose result is an Ordering of H or a StuckReport.
    """
    if not digraph.is_reflexive():
        raise NonReflexiveInputException(f"Exchange requires a reflexive digraph, {digraph.name} is not")

    double = bipartite_double(digraph)
    bipartite_ordering.check_covers(double)

    if not is_bipartite_min_max(double, bipartite_ordering):
        raise ExchangePreconditionException(f"{bipartite_ordering} is not a bipartite Min-Max ordering of {double.name}")

    arc = digraph.has_arc_at
    white_order, black_order = _split_bipartite_ordering(digraph, bipartite_ordering)
    swap_limit = comb(len(digraph), 2)
    swaps = 0

    while True:
        improper = list(_improper_pairs(white_order, black_order))

        if len(improper) == 0:
            break

        moved = False
        for u, v in improper:
            candidates = []

            if not any(arc(s, v) and not arc(s, u) for s in range(len(digraph))):
                candidates.append(("black", white_order, _transposed(black_order, u, v)))
            if not any(arc(u, t) and not arc(v, t) for t in range(len(digraph))):
                candidates.append(("white", _transposed(white_order, u, v), black_order))

            for side, new_white, new_black in candidates:
                if is_bipartite_min_max(double, _to_bipartite_ordering(digraph, new_white, new_black)):
                    white_order, black_order = new_white, new_black
                    swaps += 1
                    moved = True
                    logger.debug(f"Exchanged {digraph.vertices[u]}, {digraph.vertices[v]} on the {side} side")
                    break

                logger.debug(f"Rejected {side} exchange of {digraph.vertices[u]}, {digraph.vertices[v]}: "
                             f"not bipartite Min-Max afterwards")

            if moved:
                break

        if not moved:
            u, v = improper[0]
            report = _stuck_report(digraph, u, v, white_order, black_order, swaps)
            logger.debug(f"{digraph.name}: {report.describe()}")
            return ExchangeTrace(report, swaps)

        if swaps > swap_limit:
            raise ExchangeInvariantError(f"{swaps} exchanges on {len(digraph)} vertices exceeds {swap_limit}")

    if white_order != black_order:
        raise ExchangeInvariantError("No improper pair left but the white and black orders differ")

    ordering = Ordering(digraph.vertices[index] for index in white_order)
    if not is_min_max(digraph, ordering):
        raise ExchangeInvariantError(f"Exchange produced {ordering}, which is not Min-Max for {digraph.name}")

    return ExchangeTrace(ordering, swaps)


def exchange_construct(digraph, bipartite_ordering):
    """
    A Min-Max ordering of the reflexive digraph built from a bipartite Min-Max ordering of B(H), or a StuckReport.
    """
    return run_exchange(digraph, bipartite_ordering).result
