"""Plain-text structure files: sectioned key/value format with
whitespace-separated operation tables and {a,b} subset literals for
multivalued addition. Parsing reports line-numbered diagnostics and
serialization of a parsed file is canonical."""

from .errors import StructureError
from .hyper import SemiHyperring, SemiHypergroup
from .pairs import SemiringPair
from .semirings import FiniteSemiring

SECTIONS = ("semiring", "pair", "hyper")


class ParseError(StructureError):
    def __init__(self, message, line):
        super().__init__("line %d: %s" % (line, message))
        self.line = line


def _split_sections(text):
    sections = []
    current = None
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.lstrip().startswith("[") and line.strip().endswith("]"):
            name = line.strip()[1:-1].strip()
            if name not in SECTIONS:
                raise ParseError("unknown section %r" % name, idx)
            current = {"name": name, "line": idx, "entries": []}
            sections.append(current)
            continue
        if current is None:
            raise ParseError("content before any [section] header", idx)
        current["entries"].append((idx, line))
    return sections


def _section_fields(entries):
    """key = value lines; a key with an empty value collects the following
    indented lines as table rows."""
    fields = {}
    i = 0
    while i < len(entries):
        lineno, line = entries[i]
        if "=" not in line:
            raise ParseError("expected 'key = value', got %r" % line.strip(), lineno)
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key in fields:
            raise ParseError("duplicate key %r" % key, lineno)
        i += 1
        if value:
            fields[key] = (lineno, value)
            continue
        rows = []
        while i < len(entries) and entries[i][1][:1] in (" ", "\t"):
            rows.append(entries[i])
            i += 1
        if not rows:
            raise ParseError("key %r has no value and no table rows" % key, lineno)
        fields[key] = (lineno, rows)
    return fields


def _require(fields, key, section_line):
    if key not in fields:
        raise ParseError("missing required key %r" % key, section_line)
    return fields[key]


def _parse_table(rows, labels, key):
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    if len(rows) != n:
        raise ParseError("%s table has %d rows, expected %d" % (key, len(rows), n),
                         rows[0][0] if rows else 0)
    table = []
    for lineno, line in rows:
        cells = line.split()
        if len(cells) != n:
            raise ParseError("%s table row has %d entries, expected %d"
                             % (key, len(cells), n), lineno)
        row = []
        for cell in cells:
            if cell not in index:
                raise ParseError("unknown element label %r in %s table"
                                 % (cell, key), lineno)
            row.append(index[cell])
        table.append(row)
    return table


def _parse_subset_table(rows, labels, key):
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    if len(rows) != n:
        raise ParseError("%s table has %d rows, expected %d" % (key, len(rows), n),
                         rows[0][0] if rows else 0)
    table = []
    for lineno, line in rows:
        cells = line.split()
        if len(cells) != n:
            raise ParseError("%s table row has %d entries, expected %d"
                             % (key, len(cells), n), lineno)
        row = []
        for cell in cells:
            if not (cell.startswith("{") and cell.endswith("}")):
                raise ParseError("expected subset literal {a,b}, got %r" % cell,
                                 lineno)
            parts = [s for s in cell[1:-1].split(",") if s]
            if not parts:
                raise ParseError("empty subset literal in %s table" % key, lineno)
            members = set()
            for lab in parts:
                if lab not in index:
                    raise ParseError("unknown element label %r in %s table"
                                     % (lab, key), lineno)
                members.add(index[lab])
            row.append(frozenset(members))
        table.append(row)
    return table


def _scalar(fields, key, section_line):
    lineno, value = _require(fields, key, section_line)
    if isinstance(value, list):
        raise ParseError("key %r expects a single value, not a table" % key, lineno)
    return lineno, value


def _label_list(fields, key, labels, section_line, allow_missing=False):
    if allow_missing and key not in fields:
        return []
    lineno, value = _scalar(fields, key, section_line)
    index = {lab: i for i, lab in enumerate(labels)}
    out = []
    for lab in value.split():
        if lab not in index:
            raise ParseError("unknown element label %r in %r" % (lab, key), lineno)
        out.append(index[lab])
    return out


def parse_structures(text):
    """Returns a dict with any of 'semiring', 'pair', 'hyper'. A pair section
    needs a preceding semiring section."""
    out = {}
    for section in _split_sections(text):
        fields = _section_fields(section["entries"])
        sline = section["line"]
        if section["name"] == "semiring":
            _, labels_value = _scalar(fields, "elements", sline)
            labels = labels_value.split()
            _, name = fields.get("name", (sline, "semiring"))
            zline, zero = _scalar(fields, "zero", sline)
            oline, one = _scalar(fields, "one", sline)
            if zero not in labels:
                raise ParseError("zero label %r not among elements" % zero, zline)
            if one not in labels:
                raise ParseError("one label %r not among elements" % one, oline)
            add_rows = _require(fields, "add", sline)[1]
            mul_rows = _require(fields, "mul", sline)[1]
            if not isinstance(add_rows, list) or not isinstance(mul_rows, list):
                raise ParseError("add/mul must be tables", sline)
            out["semiring"] = FiniteSemiring(
                labels,
                _parse_table(add_rows, labels, "add"),
                _parse_table(mul_rows, labels, "mul"),
                labels.index(zero), labels.index(one), name=name)
        elif section["name"] == "pair":
            if "semiring" not in out:
                raise ParseError("[pair] requires a preceding [semiring]", sline)
            s = out["semiring"]
            a0 = _label_list(fields, "a0", s.labels, sline)
            tang = _label_list(fields, "tangibles", s.labels, sline)
            out["pair"] = SemiringPair(s, a0=sorted(a0), tangibles=sorted(tang),
                                       name=s.name)
        elif section["name"] == "hyper":
            _, labels_value = _scalar(fields, "elements", sline)
            labels = labels_value.split()
            _, name = fields.get("name", (sline, "semihyperring"))
            zline, zero = _scalar(fields, "zero", sline)
            if zero not in labels:
                raise ParseError("zero label %r not among elements" % zero, zline)
            add_rows = _require(fields, "add", sline)[1]
            hyperadd = _parse_subset_table(add_rows, labels, "add")
            if "mul" in fields:
                oline, one = _scalar(fields, "one", sline)
                if one not in labels:
                    raise ParseError("one label %r not among elements" % one, oline)
                mul = _parse_table(fields["mul"][1], labels, "mul")
                out["hyper"] = SemiHyperring(labels, hyperadd, mul,
                                             labels.index(zero),
                                             labels.index(one), name=name)
            else:
                out["hyper"] = SemiHypergroup(labels, hyperadd,
                                              labels.index(zero), name=name)
    if not out:
        raise StructureError("no sections found")
    return out


def load_structures(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_structures(fh.read())


def _table_lines(table, labels):
    return ["  " + " ".join(labels[v] for v in row) for row in table]


def _subset_table_lines(table, labels):
    lines = []
    for row in table:
        cells = ["{%s}" % ",".join(labels[v] for v in sorted(cell))
                 for cell in row]
        lines.append("  " + " ".join(cells))
    return lines


def serialize_structures(structs):
    """Canonical text form; parse(serialize(x)) reproduces x and
    serialize(parse(text)) is a fixpoint on canonical files."""
    chunks = []
    if "semiring" in structs:
        s = structs["semiring"]
        lines = ["[semiring]",
                 "name = %s" % s.name,
                 "elements = %s" % " ".join(s.labels),
                 "zero = %s" % s.labels[s.zero],
                 "one = %s" % s.labels[s.one],
                 "add ="]
        lines += _table_lines(s.add_table, s.labels)
        lines.append("mul =")
        lines += _table_lines(s.mul_table, s.labels)
        chunks.append("\n".join(lines))
    if "pair" in structs:
        p = structs["pair"]
        s = p.carrier
        lines = ["[pair]",
                 "a0 = %s" % " ".join(s.labels[i] for i in p.a0_elements()),
                 "tangibles = %s" % " ".join(s.labels[i]
                                             for i in p.tangible_elements())]
        chunks.append("\n".join(lines))
    if "hyper" in structs:
        h = structs["hyper"]
        lines = ["[hyper]",
                 "name = %s" % h.name,
                 "elements = %s" % " ".join(h.labels),
                 "zero = %s" % h.labels[h.zero],
                 "add ="]
        lines += _subset_table_lines(h.hyperadd, h.labels)
        if isinstance(h, SemiHyperring):
            lines.insert(4, "one = %s" % h.labels[h.one])
            lines.append("mul =")
            lines += _table_lines(h.mul_table, h.labels)
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + "\n"
