"""
Text format for digraphs:

    # comments run to the end of the line
    digraph h
    vertices: a b c
    arcs: a->b b->c
    arcs: c->a
    reflexive

The header comes first. "arcs:" may repeat. The "reflexive" line adds a loop at every vertex that has none.
"""
import re
from reflexive_minhom.graphs.digraph import Digraph

IDENTIFIER = re.compile(r"^[A-Za-z0-9_]+$")
ARC = re.compile(r"^([A-Za-z0-9_]+)->([A-Za-z0-9_]+)$")


class DigraphSyntaxError(Exception):
    def __init__(self, error_msg, line, column):
        super().__init__(f"line {line}, column {column}: {error_msg}")
        self.line = line
        self.column = column


def tokenize(text):
    """
    Yields (line number, stripped content, [(column, token), ...]) for every line that is not blank or a comment.
    Columns are 1-based.
    """
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        content = raw_line.split("#", 1)[0]
        if content.strip() == "":
            continue

        tokens = [(match.start() + 1, match.group()) for match in re.finditer(r"\S+", content)]
        yield line_number, content.strip(), tokens


def split_keyword(tokens, keyword):
    """
    For a line starting with "keyword:", the tokens after the colon. None when the line has another keyword.
    """
    column, first = tokens[0]
    if first == f"{keyword}:":
        return tokens[1:]
    if first.startswith(f"{keyword}:"):
        return [(column + len(keyword) + 1, first[len(keyword) + 1:])] + tokens[1:]
    return None


def parse_header(lines, kind):
    """
    Consumes the "<kind> <name>" header line and returns its name.
    """
    try:
        line_number, _, tokens = next(lines)
    except StopIteration:
        raise DigraphSyntaxError(f"Expected a '{kind} <name>' header, found an empty document", 1, 1)

    if tokens[0][1] != kind or len(tokens) != 2:
        raise DigraphSyntaxError(f"Expected a '{kind} <name>' header", line_number, tokens[0][0])

    column, name = tokens[1]
    if not IDENTIFIER.match(name):
        raise DigraphSyntaxError(f"Invalid {kind} name {name}", line_number, column)

    return name


def parse_vertices(tokens, line_number, vertices):
    for column, token in tokens:
        if not IDENTIFIER.match(token):
            raise DigraphSyntaxError(f"Invalid vertex id {token}", line_number, column)
        if token in vertices:
            raise DigraphSyntaxError(f"Duplicate vertex id {token}", line_number, column)
        vertices.append(token)


def parse_digraph(text):
    lines = tokenize(text)
    name = parse_header(lines, "digraph")
    vertices = None
    arcs = []
    arc_set = set()
    reflexive = False

    for line_number, content, tokens in lines:
        vertex_tokens = split_keyword(tokens, "vertices")
        arc_tokens = split_keyword(tokens, "arcs")

        if vertex_tokens is not None:
            if vertices is not None:
                raise DigraphSyntaxError("Vertices declared twice", line_number, tokens[0][0])
            vertices = []
            parse_vertices(vertex_tokens, line_number, vertices)

        elif arc_tokens is not None:
            if vertices is None:
                raise DigraphSyntaxError("Arcs listed before the vertices line", line_number, tokens[0][0])

            for column, token in arc_tokens:
                match = ARC.match(token)
                if match is None:
                    raise DigraphSyntaxError(f"Malformed arc {token}, expected tail->head", line_number, column)

                for endpoint in match.groups():
                    if endpoint not in vertices:
                        raise DigraphSyntaxError(f"Arc {token} uses unknown vertex {endpoint}", line_number, column)

                if match.groups() in arc_set:
                    raise DigraphSyntaxError(f"Duplicate arc {token}", line_number, column)

                arc_set.add(match.groups())
                arcs.append(match.groups())

        elif content == "reflexive":
            reflexive = True

        else:
            raise DigraphSyntaxError(f"Unexpected line '{content}'", line_number, tokens[0][0])

    if vertices is None:
        raise DigraphSyntaxError("Missing vertices line", 1, 1)

    if reflexive:
        arcs += [(vertex, vertex) for vertex in vertices if (vertex, vertex) not in arc_set]

    return Digraph(vertices, arcs, name=name)


def serialize_digraph(digraph):
    """
    Loops are written out explicitly, so parsing the result gives back an equal digraph.
    """
    arcs = " ".join(f"{tail}->{head}" for tail, head in digraph.arcs)
    lines = [f"digraph {digraph.name}",
             f"vertices: {' '.join(digraph.vertices)}".rstrip(),
             f"arcs: {arcs}".rstrip()]
    return "\n".join(lines) + "\n"


def load_digraph(file_path):
    with open(file_path, "r") as digraph_file:
        return parse_digraph(digraph_file.read())


def save_digraph(digraph, file_path):
    with open(file_path, "w") as digraph_file:
        digraph_file.write(serialize_digraph(digraph))
