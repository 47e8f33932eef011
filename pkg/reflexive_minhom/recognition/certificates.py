class Certificate(object):
    """
    An induced copy of a named pattern inside a graph derived from (or equal to) the template.
    """
    host_label = None

    def __init__(self, kind, pattern, embedding):
        self.kind = kind
        self.pattern = pattern
        self.embedding = embedding

    def describe(self):
        return f"induced {self.kind} in {self.host_label}"

    def vertex_listing(self):
        return " ".join(f"{pattern}={host}" for pattern, host in self.embedding.pairs)

    def __eq__(self, other):
        return type(self) is type(other) and self.kind == other.kind and self.embedding == other.embedding

    def __hash__(self):
        return hash((type(self).__name__, self.kind, self.embedding))

    def __repr__(self):
        return f"{type(self).__name__}({self.describe()}: {self.vertex_listing()})"


class SCertificate(Certificate):
    """
    A cycle of length at least four, claw, net or tent induced in S(H). Kind "unclassified" marks a minimal
    non proper interval subgraph that matched none of those patterns.
    """
    host_label = "S(H)"


class BCertificate(Certificate):
    """
    An even cycle of length at least six, biclaw, binet or bitent induced in B(H).
    """
    host_label = "B(H)"


class HCertificate(Certificate):
    host_label = "H"

    def __init__(self, kind, pattern, embedding, catalog_index):
        super().__init__(kind, pattern, embedding)
        self.catalog_index = catalog_index


class RecognitionVerdict(object):
    """
    Outcome of a proper interval (bi)graph test: either an ordering or a certificate.
    """

    def __init__(self, ordering=None, certificate=None):
        assert (ordering is None) != (certificate is None), "Exactly one of ordering and certificate is expected"
        self.ordering = ordering
        self.certificate = certificate

    @property
    def accepted(self):
        return self.ordering is not None


class DichotomyVerdict(object):
    polynomial = None

    @property
    def label(self):
        return "polynomial" if self.polynomial else "NP-complete"


class Polynomial(DichotomyVerdict):
    """
    source says how the ordering was obtained: "exchange" or "search".
    """
    polynomial = True

    def __init__(self, ordering, source):
        self.ordering = ordering
        self.source = source

    def __repr__(self):
        return f"Polynomial({self.ordering}, via {self.source})"


class NPComplete(DichotomyVerdict):
    polynomial = False

    def __init__(self, certificate):
        self.certificate = certificate

    def __repr__(self):
        return f"NPComplete({self.certificate})"
