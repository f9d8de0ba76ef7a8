"""Plain-text workspace files describing germs, subspaces and maps.

Grammar (one construct per block, blank lines and # comments ignored):

    germ <name>
    vars <v1> <v2> ...
    ideal
    <polynomial>
    ...
    end

    subspace <name> in <germ>
    ideal
    <polynomial>
    ...
    end

    map <name> <source> -> <target>
    <var> -> <polynomial>
    ...
    end

Printing produces a canonical form that re-parses to identical objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import PolynomialParseError
from .germs import AnalyticGerm, GermSurjection, Subspace, make_germ
from .poly import format_polynomial, parse_polynomial


@dataclass
class Workspace:
    germs: dict = field(default_factory=dict)
    subspaces: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)

    def germ(self, name):
        if name not in self.germs:
            raise PolynomialParseError(f"unknown germ {name!r}")
        return self.germs[name]

    def subspace(self, name):
        if name not in self.subspaces:
            raise PolynomialParseError(f"unknown subspace {name!r}")
        return self.subspaces[name]

    def map(self, name):
        if name not in self.maps:
            raise PolynomialParseError(f"unknown map {name!r}")
        return self.maps[name]

    def add_germ(self, germ):
        if germ.name in self.germs:
            raise PolynomialParseError(f"duplicate germ name {germ.name!r}")
        self.germs[germ.name] = germ

    def merge_text(self, text):
        parse_workspace(text, into=self)
        return self


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_workspace(text, into=None):
    ws = into if into is not None else Workspace()
    lines = list(_content_lines(text))
    pos = 0

    def fail(lineno, message):
        raise PolynomialParseError(f"line {lineno}: {message}")

    while pos < len(lines):
        lineno, line = lines[pos]
        head = line.split()
        if head[0] == "germ":
            if len(head) != 2:
                fail(lineno, "expected: germ <name>")
            gname = head[1]
            pos += 1
            if pos >= len(lines) or lines[pos][1].split()[0] != "vars":
                fail(lineno, f"germ {gname!r} must declare vars next")
            var_names = lines[pos][1].split()[1:]
            pos += 1
            polys, pos = _parse_ideal_block(lines, pos, var_names, fail)
            if gname in ws.germs:
                fail(lineno, f"duplicate germ name {gname!r}")
            ws.germs[gname] = make_germ(gname, var_names, polys)
        elif head[0] == "subspace":
            if len(head) != 4 or head[2] != "in":
                fail(lineno, "expected: subspace <name> in <germ>")
            sname, gname = head[1], head[3]
            if gname not in ws.germs:
                fail(lineno, f"subspace {sname!r} references unknown germ {gname!r}")
            ambient = ws.germs[gname]
            pos += 1
            polys, pos = _parse_ideal_block(lines, pos, ambient.var_names, fail)
            if sname in ws.subspaces:
                fail(lineno, f"duplicate subspace name {sname!r}")
            ws.subspaces[sname] = Subspace(ambient, polys, name=sname)
        elif head[0] == "map":
            if len(head) != 5 or head[3] != "->":
                fail(lineno, "expected: map <name> <source> -> <target>")
            mname, sname, tname = head[1], head[2], head[4]
            for n in (sname, tname):
                if n not in ws.germs:
                    fail(lineno, f"map {mname!r} references unknown germ {n!r}")
            source, target = ws.germs[sname], ws.germs[tname]
            images = {}
            pos += 1
            while pos < len(lines) and lines[pos][1] != "end":
                mlineno, mline = lines[pos]
                if "->" not in mline:
                    fail(mlineno, "expected: <var> -> <polynomial>")
                var, expr = (part.strip() for part in mline.split("->", 1))
                if var not in source.var_names:
                    fail(mlineno, f"{var!r} is not a variable of {sname!r}")
                if var in images:
                    fail(mlineno, f"duplicate image for {var!r}")
                images[var] = parse_polynomial(expr, target.var_names)
            if pos >= len(lines):
                fail(lineno, f"map {mname!r} is missing its end line")
            pos += 1
            missing = [v for v in source.var_names if v not in images]
            if missing:
                fail(lineno, f"map {mname!r} lacks images for {missing}")
            if mname in ws.maps:
                fail(lineno, f"duplicate map name {mname!r}")
            ws.maps[mname] = GermSurjection(
                source, target, [images[v] for v in source.var_names],
                name=mname)
        else:
            fail(lineno, f"unknown directive {head[0]!r}")
    return ws


def _parse_ideal_block(lines, pos, var_names, fail):
    if pos >= len(lines) or lines[pos][1] != "ideal":
        fail(lines[min(pos, len(lines) - 1)][0], "expected an ideal block")
    pos += 1
    polys = []
    while pos < len(lines) and lines[pos][1] != "end":
        lineno, line = lines[pos]
        polys.append(parse_polynomial(line, var_names))
        pos += 1
    if pos >= len(lines):
        fail(lines[-1][0], "ideal block is missing its end line")
    return polys, pos + 1


# ---------------------------------------------------------------------------
# Canonical printing.
# ---------------------------------------------------------------------------

def format_germ(germ):
    out = [f"germ {germ.name}", "vars " + " ".join(germ.var_names), "ideal"]
    for g in germ.relations.generators:
        out.append(format_polynomial(g, germ.var_names, germ.order))
    out.append("end")
    return "\n".join(out) + "\n"


def format_subspace(sub):
    germ = sub.ambient
    out = [f"subspace {sub.name} in {germ.name}", "ideal"]
    for g in sub.extra_generators:
        out.append(format_polynomial(g, germ.var_names, germ.order))
    out.append("end")
    return "\n".join(out) + "\n"


def format_map(m):
    out = [f"map {m.name} {m.source.name} -> {m.target.name}"]
    for var, img in zip(m.source.var_names, m.images):
        out.append(f"{var} -> "
                   + format_polynomial(img, m.target.var_names, m.target.order))
    out.append("end")
    return "\n".join(out) + "\n"


def format_workspace(ws):
    blocks = [format_germ(g) for g in ws.germs.values()]
    blocks += [format_subspace(s) for s in ws.subspaces.values()]
    blocks += [format_map(m) for m in ws.maps.values()]
    return "\n".join(blocks)


def load_workspace(paths):
    ws = Workspace()
    for path in paths:
        with open(path, "r", encoding="utf-8") as fh:
            ws.merge_text(fh.read())
    return ws
