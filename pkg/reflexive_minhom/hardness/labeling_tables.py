"""
Arc constraints that pin down the obstructions H1..H6, kept as data so each entry can be audited on its own.

An arc "ab" means a -> b in H (equivalently the edge a'b'' of B(H)). Loops are implied, every obstruction being
reflexive. Pairs in neither list are unconstrained.

Structural tables come from the case analysis of a stuck exchange: the improper pair (u, v), the blocking vertex s
and the blocking vertex t, with the arcs the analysis proves present or absent.

Gadget tables come from the reductions from independent set on three-coloured graphs: every image pair that the
forward map can put across a gadget arc must be an arc, and every pair that would let two vertices of the
independent set (or an intermediate on its penalised labels) pass must be a non-arc.
"""


class InconsistentArcTableException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class ArcTable(object):
    def __init__(self, labels, required, forbidden, notes):
        self.labels = tuple(labels)
        self.required = tuple(self._split(arc) for arc in required)
        self.forbidden = tuple(self._split(arc) for arc in forbidden)
        self.notes = dict(notes)

        overlap = set(self.required) & set(self.forbidden)
        if len(overlap) > 0:
            raise InconsistentArcTableException(f"Arcs {sorted(overlap)} are both required and forbidden")

    def _split(self, arc):
        # "x1x2" -> ("x1", "x2"); "uv" -> ("u", "v")
        for label in self.labels:
            if arc.startswith(label) and arc[len(label):] in self.labels:
                return label, arc[len(label):]
        raise ValueError(f"Arc {arc} does not join two of the labels {self.labels}")

    def holds(self, digraph, labeling):
        """
        labeling maps every label to a distinct vertex of the digraph.
        """
        return all(digraph.has_arc(labeling[tail], labeling[head]) for tail, head in self.required) and \
            not any(digraph.has_arc(labeling[tail], labeling[head]) for tail, head in self.forbidden)


PROOF_LABELS_3 = ("u", "v", "s")
PROOF_LABELS_4 = ("u", "v", "s", "t")
GADGET_LABELS = ("x1", "x2", "x3", "x4")


STRUCTURAL_TABLES = {
    1: ArcTable(PROOF_LABELS_3,
                required=["uv", "vu", "sv", "us"],
                forbidden=["su", "vs"],
                notes={"uv": "an improper pair of a bipartite Min-Max ordering is a digon",
                       "sv": "s blocks the black exchange: s'v'' present",
                       "su": "s blocks the black exchange: s'u'' absent",
                       "us": "u's'' present closes the copy on s, v, u",
                       "vs": "v's'' absent in the branch without v's'' and t'v''"}),
    2: ArcTable(PROOF_LABELS_4,
                required=["uv", "vu", "sv", "vt"],
                forbidden=["su", "ut", "st", "vs", "tv", "us", "tu", "ts"],
                notes={"vt": "first case: v't'' present",
                       "ut": "first case: u't'' absent",
                       "st": "forced absent by the bipartite Min-Max ordering",
                       "us": "else s, v, u induce H1",
                       "tu": "else t, v, u induce H1",
                       "ts": "else s', s'', t', t'', v', v'' induce C6 in B(H)"}),
    3: ArcTable(PROOF_LABELS_4,
                required=["uv", "vu", "sv", "vs", "vt", "us"],
                forbidden=["su", "ut", "st", "tv", "tu", "ts"],
                notes={"vs": "first case, branch with v's'' present and t'v'' absent",
                       "tu": "else t, v, u induce H1",
                       "ts": "else t, v, s induce H1",
                       "us": "else u', u'', v', t'', t', s'', s' induce a biclaw in B(H)"}),
    4: ArcTable(PROOF_LABELS_4,
                required=["uv", "vu", "sv", "ut", "ts", "st"],
                forbidden=["su", "vt", "us", "tv"],
                notes={"ut": "second case: u't'' present",
                       "vt": "second case: v't'' absent",
                       "us": "branch with u's'' and t'v'' both absent",
                       "ts": "s' < t' and t'' < s'' force t's'' and s't''"}),
    # H5 and H6 share the branch with u's'' present and t'v'' absent; t'u'' and t's'' decide between them, which
    # the gadget tables settle.
    5: ArcTable(PROOF_LABELS_4,
                required=["uv", "vu", "sv", "vs", "ut", "us", "st"],
                forbidden=["su", "vt", "tv"],
                notes={"us": "branch with u's'' present",
                       "vs": "forced by the same argument as in the first case",
                       "st": "forced by the same argument as in the first case"}),
    6: ArcTable(PROOF_LABELS_4,
                required=["uv", "vu", "sv", "vs", "ut", "us", "st"],
                forbidden=["su", "vt", "tv"],
                notes={"us": "branch with u's'' present",
                       "vs": "forced by the same argument as in the first case",
                       "st": "forced by the same argument as in the first case"}),
}


_TWO_LABEL_GADGET = ArcTable(
    GADGET_LABELS,
    required=["x1x2", "x2x4", "x2x3", "x3x2"],
    forbidden=["x1x4", "x1x3", "x3x4"],
    notes={"x1x2": "U-V edge as arc uv, u in I (x1), v outside (x2); also U-W edge as arc uw",
           "x2x4": "U-V edge as arc uv, u outside (x2), v in I (x4); also V-W edge as arc wv with w outside",
           "x2x3": "U-W edge as arc uw, u outside (x2), w in I (x3)",
           "x3x2": "V-W edge as arc wv, w in I (x3), v outside (x2)",
           "x1x4": "u and v both in I across a U-V arc",
           "x1x3": "u and w both in I across a U-W arc",
           "x3x4": "w and v both in I across the W-V arc"})

GADGET_TABLES = {
    2: _TWO_LABEL_GADGET,
    # The same reduction is used for H3
    3: _TWO_LABEL_GADGET,
    4: ArcTable(GADGET_LABELS,
                required=["x1x2", "x2x1", "x3x1", "x2x4", "x3x4"],
                forbidden=["x2x3", "x1x4", "x3x2"],
                notes={"x2x1": "U-V edge as arc vu, v in I (x2), u outside (x1)",
                       "x3x1": "U-V edge as arc vu, v outside (x3), u outside (x1); path u m w with u in I",
                       "x1x2": "path u m_uw w, u outside (x1) sends m_uw to x2",
                       "x2x4": "path u m_uw w, m_uw at x2 reaches w in I (x4)",
                       "x3x4": "path v m_vw w with w in I: v outside (x3), m_vw at x3",
                       "x2x3": "v in I (x2) and u in I (x3) across arc vu; or m_vw off its penalised labels",
                       "x1x4": "u and w both in I: m_uw would have to sit on a penalised label",
                       "x3x2": "u and w both in I: m_uw would have to sit on a penalised label"}),
    5: ArcTable(GADGET_LABELS,
                required=["x1x2", "x1x4", "x2x3", "x3x2", "x3x4"],
                forbidden=["x2x4", "x1x3"],
                notes={"x1x4": "U-V edge as arc uv, u outside (x1), v in I (x4); arcs u m_uw, w m_uw with m_uw at x4",
                       "x1x2": "U-V edge as arc uv, u outside (x1), v outside (x2); path w m_wv v with w in I",
                       "x2x3": "u in I (x2) sends m_uw to x3",
                       "x3x2": "path w m_wv v, w outside (x3), m_wv at x3, v outside (x2)",
                       "x3x4": "w outside (x3) next to m_uw at x4; m_wv at x3 next to v in I (x4)",
                       "x2x4": "u and v both in I across arc uv",
                       "x1x3": "u and w both in I: m_uw would have to sit on a penalised label"}),
    6: ArcTable(GADGET_LABELS,
                required=["x1x2", "x2x1", "x2x3", "x3x4", "x3x1", "x4x1"],
                forbidden=["x1x3", "x2x4", "x4x3"],
                notes={"x2x1": "U-V edge as arc uv, u outside (x2), v outside (x1)",
                       "x2x3": "U-V edge as arc uv, u outside (x2), v in I (x3); path u m_uw w through x2 x3",
                       "x1x2": "path u m_uw w, u in I (x1) sends m_uw to x2",
                       "x3x4": "path u m_uw w, m_uw at x3 reaches w in I (x4)",
                       "x3x1": "V-W edge as arc wv, w outside (x3), v outside (x1)",
                       "x4x1": "V-W edge as arc wv, w in I (x4), v outside (x1)",
                       "x1x3": "u and v both in I across arc uv",
                       "x2x4": "u and w both in I: m_uw would have to sit on a penalised label",
                       "x4x3": "w and v both in I across arc wv"}),
}

# How the gadget labels of each obstruction sit on the vertices of the case analysis
WITNESS_LABELINGS = {
    2: {"x1": "s", "x2": "v", "x3": "u", "x4": "t"},
    3: {"x1": "s", "x2": "v", "x3": "u", "x4": "t"},
    4: {"x1": "v", "x2": "u", "x3": "s", "x4": "t"},
    5: {"x1": "s", "x2": "v", "x3": "u", "x4": "t"},
    6: {"x1": "s", "x2": "v", "x3": "u", "x4": "t"},
}
