"""
Exact backtracking searches for Min-Max orderings of digraphs and bipartite Min-Max orderings of bipartite graphs.
Both grow the ordering one element at a time and only check the quadruples whose largest element was just placed,
so every prefix kept is itself Min-Max.
"""
from reflexive_minhom.orderings.ordering import Ordering, BipartiteOrdering
from reflexive_minhom.utils.common_exceptions import TemplateSizeLimitExceeded

DEFAULT_TEMPLATE_SIZE_LIMIT = 10


def _check_size(size, limit, description):
    if limit is not None and size > limit:
        raise TemplateSizeLimitExceeded(f"{description} has {size} vertices, above the limit of {limit}. "
                                        f"Raise --limit-template-size to search anyway.")


def _appended_vertex_consistent(digraph, prefix, new_vertex):
    """
    prefix is a Min-Max prefix of vertex indices; checks the quadruples in which new_vertex (appended last) is j or r.
    """
    arc = digraph.has_arc_at
    placed = prefix + [new_vertex]
    count = len(placed)

    # new_vertex as j: any i before it, any s < r among everything placed
    for i in prefix:
        for s_position in range(count):
            s = placed[s_position]
            if not arc(new_vertex, s):
                continue
            for r in placed[s_position + 1:]:
                if arc(i, r) and not (arc(i, s) and arc(new_vertex, r)):
                    return False

    # new_vertex as r, j strictly before it
    for j_position in range(1, len(prefix)):
        j = prefix[j_position]
        for i in prefix[:j_position]:
            if not arc(i, new_vertex):
                continue
            for s in prefix:
                if arc(j, s) and not (arc(i, s) and arc(j, new_vertex)):
                    return False

    return True


def iter_min_max(digraph):
    """
    Yields every Min-Max ordering of the digraph, in lexicographic order of vertex indices.
    """
    size = len(digraph)
    prefix = []
    used = [False] * size

    def extend():
        if len(prefix) == size:
            yield Ordering(digraph.vertices[index] for index in prefix)
            return

        for candidate in range(size):
            if not used[candidate] and _appended_vertex_consistent(digraph, prefix, candidate):
                prefix.append(candidate)
                used[candidate] = True
                yield from extend()
                prefix.pop()
                used[candidate] = False

    yield from extend()


def find_min_max_bruteforce(digraph, limit_template_size=DEFAULT_TEMPLATE_SIZE_LIMIT):
    """
    The first Min-Max ordering in lexicographic order, or None when the digraph has none.
    Pass limit_template_size=None to lift the size limit.
    """
    _check_size(len(digraph), limit_template_size, f"Template {digraph.name}")
    return next(iter_min_max(digraph), None)


def _white_appended_consistent(graph, white_prefix, black_prefix, new_white):
    # new_white is j; i ranges over earlier whites, s < r over placed blacks
    edge = graph.has_edge_at
    for i in white_prefix:
        for s_position, s in enumerate(black_prefix):
            if not edge(new_white, s):
                continue
            for r in black_prefix[s_position + 1:]:
                if edge(i, r) and not (edge(i, s) and edge(new_white, r)):
                    return False
    return True


def _black_appended_consistent(graph, white_prefix, black_prefix, new_black):
    # new_black is r; i < j over placed whites, s over earlier blacks
    edge = graph.has_edge_at
    for j_position in range(1, len(white_prefix)):
        j = white_prefix[j_position]
        for i in white_prefix[:j_position]:
            if not edge(i, new_black):
                continue
            for s in black_prefix:
                if edge(j, s) and not (edge(i, s) and edge(j, new_black)):
                    return False
    return True


def iter_bipartite_min_max(bipartite_graph):
    """
    Yields every bipartite Min-Max ordering. Placement alternates white and black (continuing with whichever class
    remains once the other is exhausted), so each quadruple is checked when its last element is placed.
    """
    white_count = len(bipartite_graph.white)
    black_count = len(bipartite_graph.black)
    white_prefix = []
    black_prefix = []
    white_used = [False] * white_count
    black_used = [False] * black_count

    def next_is_white():
        if len(white_prefix) == white_count:
            return False
        if len(black_prefix) == black_count:
            return True
        return len(white_prefix) <= len(black_prefix)

    def extend():
        if len(white_prefix) == white_count and len(black_prefix) == black_count:
            yield BipartiteOrdering([bipartite_graph.white[index] for index in white_prefix],
                                    [bipartite_graph.black[index] for index in black_prefix])
            return

        if next_is_white():
            for candidate in range(white_count):
                if not white_used[candidate] and \
                        _white_appended_consistent(bipartite_graph, white_prefix, black_prefix, candidate):
                    white_prefix.append(candidate)
                    white_used[candidate] = True
                    yield from extend()
                    white_prefix.pop()
                    white_used[candidate] = False
        else:
            for candidate in range(black_count):
                if not black_used[candidate] and \
                        _black_appended_consistent(bipartite_graph, white_prefix, black_prefix, candidate):
                    black_prefix.append(candidate)
                    black_used[candidate] = True
                    yield from extend()
                    black_prefix.pop()
                    black_used[candidate] = False

    yield from extend()


def find_bipartite_min_max(bipartite_graph, limit_template_size=DEFAULT_TEMPLATE_SIZE_LIMIT):
    """
    The first bipartite Min-Max ordering found, or None. The limit applies to each colour class separately.
    """
    size = max(len(bipartite_graph.white), len(bipartite_graph.black))
    _check_size(size, limit_template_size, f"Bipartite graph {bipartite_graph.name} (largest colour class)")
    return next(iter_bipartite_min_max(bipartite_graph), None)
