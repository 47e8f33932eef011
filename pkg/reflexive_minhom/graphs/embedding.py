from reflexive_minhom.graphs.digraph import Digraph, UndirectedGraph, BipartiteGraph, Embedding


class _AdjacencyView(object):
    """
    A uniform view of the three graph kinds for the backtracking search: vertices are 0..n-1, each with a
    colour, an out-mask, an in-mask and a loop flag. Undirected and bipartite graphs have out == in.
    Bipartite graphs put white vertices first, then black ones, with colours 0 and 1.
    """

    def __init__(self, names, colors, out_masks, in_masks):
        self.names = names
        self.colors = colors
        self.out_masks = out_masks
        self.in_masks = in_masks
        self.loops = [bool(out_masks[index] >> index & 1) for index in range(len(names))]
        self.out_degrees = [bin(mask & ~(1 << index)).count("1") for index, mask in enumerate(out_masks)]
        self.in_degrees = [bin(mask & ~(1 << index)).count("1") for index, mask in enumerate(in_masks)]

    def __len__(self):
        return len(self.names)

    def arc(self, tail, head):
        return bool(self.out_masks[tail] >> head & 1)

    @classmethod
    def of(cls, graph):
        if isinstance(graph, Digraph):
            size = len(graph)
            return cls(list(graph.vertices), [0] * size,
                       [graph.successor_mask(index) for index in range(size)],
                       [graph.predecessor_mask(index) for index in range(size)])

        if isinstance(graph, UndirectedGraph):
            masks = [graph.neighbor_mask(index) for index in range(len(graph))]
            return cls(list(graph.vertices), [0] * len(graph), masks, masks)

        if isinstance(graph, BipartiteGraph):
            white_count = len(graph.white)
            masks = [graph.white_mask(index) << white_count for index in range(white_count)]
            masks += [graph.black_mask(index) for index in range(len(graph.black))]
            colors = [0] * white_count + [1] * len(graph.black)
            return cls(list(graph.white) + list(graph.black), colors, masks, masks)

        raise TypeError(f"Unsupported graph type {type(graph).__name__}")


def _graph_kind(graph):
    for kind in (Digraph, UndirectedGraph, BipartiteGraph):
        if isinstance(graph, kind):
            return kind
    raise TypeError(f"Unsupported graph type {type(graph).__name__}")


def _is_reflexive(graph):
    # Bipartite graphs carry no loops at all
    return isinstance(graph, BipartiteGraph) or graph.is_reflexive()


def find_induced(pattern, host):
    """
    Finds an induced copy of pattern inside host and returns the Embedding, or None.
    Both graphs must be of the same kind. Bipartite embeddings map white to white and black to black.
    The search assigns pattern vertices in their declared order, trying host vertices in their declared order,
    so the embedding returned is the lexicographically first one.
    """
    if _graph_kind(pattern) is not _graph_kind(host):
        raise TypeError(f"Cannot embed a {type(pattern).__name__} into a {type(host).__name__}")

    pattern_view = _AdjacencyView.of(pattern)
    host_view = _AdjacencyView.of(host)

    if len(pattern_view) > len(host_view):
        return None

    compare_loops = not (_is_reflexive(pattern) and _is_reflexive(host))
    assignment = []
    used = [False] * len(host_view)

    def compatible(pattern_vertex, host_vertex):
        if used[host_vertex] or pattern_view.colors[pattern_vertex] != host_view.colors[host_vertex]:
            return False

        if compare_loops and pattern_view.loops[pattern_vertex] != host_view.loops[host_vertex]:
            return False

        if pattern_view.out_degrees[pattern_vertex] > host_view.out_degrees[host_vertex] or \
                pattern_view.in_degrees[pattern_vertex] > host_view.in_degrees[host_vertex]:
            return False

        for earlier_pattern, earlier_host in enumerate(assignment):
            if pattern_view.arc(pattern_vertex, earlier_pattern) != host_view.arc(host_vertex, earlier_host):
                return False
            if pattern_view.arc(earlier_pattern, pattern_vertex) != host_view.arc(earlier_host, host_vertex):
                return False

        return True

    def extend(pattern_vertex):
        if pattern_vertex == len(pattern_view):
            return True

        for host_vertex in range(len(host_view)):
            if compatible(pattern_vertex, host_vertex):
                assignment.append(host_vertex)
                used[host_vertex] = True

                if extend(pattern_vertex + 1):
                    return True

                assignment.pop()
                used[host_vertex] = False

        return False

    if not extend(0):
        return None

    return Embedding((pattern_view.names[index], host_view.names[image]) for index, image in enumerate(assignment))


def is_induced_embedding(pattern, host, embedding):
    """
    Independent check that an embedding is injective, colour-respecting and induced.
    """
    pattern_view = _AdjacencyView.of(pattern)
    host_view = _AdjacencyView.of(host)
    pattern_index = {name: index for index, name in enumerate(pattern_view.names)}
    host_index = {name: index for index, name in enumerate(host_view.names)}
    mapping = embedding.as_dict()

    if set(mapping) != set(pattern_index) or len(set(mapping.values())) != len(mapping):
        return False

    if any(image not in host_index for image in mapping.values()):
        return False

    compare_loops = not (_is_reflexive(pattern) and _is_reflexive(host))
    images = {pattern_index[name]: host_index[image] for name, image in mapping.items()}

    for first, first_image in images.items():
        if pattern_view.colors[first] != host_view.colors[first_image]:
            return False

        for second, second_image in images.items():
            if first == second and not compare_loops:
                continue
            if pattern_view.arc(first, second) != host_view.arc(first_image, second_image):
                return False

    return True
