"""
Cost tables as comma-separated text. The header row names the template vertices (its first cell is a free label),
every following row starts with an instance vertex, and each cell is an integer, a fraction p/q or a decimal.
"""
import csv
import io
import re
from fractions import Fraction
from reflexive_minhom.solver.costs import CostMatrix

RATIONAL = re.compile(r"^[+-]?(\d+(/\d+)?|\d+\.\d*|\.\d+)$")


class CostFormatException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class CostDimensionException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def parse_rational(text):
    """
    Exact value of "7", "-1/3" or "0.25". Decimals are read digit by digit, never through a float.
    """
    cleaned = text.strip()
    if not RATIONAL.match(cleaned):
        raise CostFormatException(f"Malformed rational '{text}'")

    try:
        return Fraction(cleaned)
    except ZeroDivisionError:
        raise CostFormatException(f"Zero denominator in '{text}'")


def parse_costs(text, instance, template):
    rows = [[cell.strip() for cell in row] for row in csv.reader(io.StringIO(text)) if any(cell.strip() for cell in row)]

    if len(rows) == 0:
        raise CostFormatException("Empty cost table")

    header = rows[0][1:]
    if sorted(header) != sorted(template.vertices) or len(set(header)) != len(header):
        raise CostDimensionException(f"Cost columns {header} do not match the template vertices "
                                     f"{list(template.vertices)}")

    entries = {}
    seen_rows = []

    for row_number, row in enumerate(rows[1:], start=2):
        instance_vertex = row[0]

        if not instance.has_vertex(instance_vertex):
            raise CostDimensionException(f"Row {row_number} names unknown instance vertex {instance_vertex}")
        if instance_vertex in seen_rows:
            raise CostDimensionException(f"Row {row_number} repeats instance vertex {instance_vertex}")
        if len(row) - 1 != len(header):
            raise CostFormatException(f"Row {row_number} ({instance_vertex}) has {len(row) - 1} cells, "
                                      f"expected {len(header)}")

        seen_rows.append(instance_vertex)
        for template_vertex, cell in zip(header, row[1:]):
            if cell == "":
                raise CostFormatException(f"Missing cost for {instance_vertex} and {template_vertex}")
            entries[(instance_vertex, template_vertex)] = parse_rational(cell)

    missing = [vertex for vertex in instance.vertices if vertex not in seen_rows]
    if len(missing) > 0:
        raise CostDimensionException(f"No cost rows for instance vertices {missing}")

    return CostMatrix(instance.vertices, template.vertices, entries)


def serialize_costs(costs):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["vertex"] + list(costs.template_vertices))

    for instance_vertex in costs.instance_vertices:
        writer.writerow([instance_vertex] + [str(value) for value in costs.row(instance_vertex)])

    return buffer.getvalue()


def load_costs(file_path, instance, template):
    with open(file_path, "r") as cost_file:
        return parse_costs(cost_file.read(), instance, template)
