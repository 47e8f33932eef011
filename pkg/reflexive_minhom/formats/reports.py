"""
Line-oriented "key: value" reports. Keys repeat when a report lists several items.
"""


class ReportFormatException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


def format_report(pairs):
    lines = []
    for key, value in pairs:
        if ":" in key or "\n" in str(value):
            raise ReportFormatException(f"Cannot write {key!r}: {value!r} as a single report line")
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + ("\n" if len(lines) > 0 else "")


def parse_report(text):
    pairs = []
    for line in text.splitlines():
        if line.strip() == "":
            continue
        if ": " not in line and not line.endswith(":"):
            raise ReportFormatException(f"Report line without a key: {line!r}")
        key, _, value = line.partition(":")
        pairs.append((key.strip(), value.strip()))
    return pairs


def format_ordering(ordering):
    return " < ".join(ordering.sequence)


def format_assignment(assignment):
    return " ".join(f"{vertex}->{image}" for vertex, image in assignment.items())
