"""Line-oriented germ definition files.

    germ Q2 {
      n=3 p=4;
      vars x y z;
      params s=0;
      components: x*z + y*z^2, z^3 + y^2*z;
      perturbation: x*z + y*z^2, z^3 + y^2*z - s*z;
    }

Clauses end with ';', '#' starts a comment, expressions follow the shared
polynomial grammar.  `components` lists only the p-n+1 nonlinear entries of
(x_1, .., x_{n-1}, g_1, .., g_{p-n+1}); `params` carries default rational
values; `perturbation` is optional and may use the parameters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .germs import GermCorank1
from .parse import parse_polynomial, to_string
from .poly import PolyRing


class GermFileError(ValueError):
    pass


@dataclass
class GermFile:
    name: str
    n: int
    p: int
    varnames: tuple[str, ...]
    params: dict[str, Fraction]
    components: tuple[str, ...]
    perturbation: tuple[str, ...] | None = None

    def ring(self) -> PolyRing:
        return PolyRing(self.varnames, tuple(self.params))

    def symbolic_germ(self, perturbed: bool = False) -> GermCorank1:
        exprs = self.perturbation if perturbed else self.components
        if exprs is None:
            raise GermFileError(f"germ {self.name!r} declares no perturbation")
        ring = self.ring()
        comps = tuple(parse_polynomial(e, ring) for e in exprs)
        return GermCorank1(self.n, self.p, ring, comps, self.name)

    def base_germ(self, overrides: dict[str, Fraction] | None = None) -> GermCorank1:
        values = dict(self.params)
        if overrides:
            unknown = set(overrides) - set(values)
            if unknown:
                raise GermFileError(f"unknown parameters {sorted(unknown)}")
            values.update(overrides)
        return self.symbolic_germ().at_params(values)


_HEADER = re.compile(r"^\s*germ\s+([A-Za-z_][\w.^-]*)\s*\{(.*)\}\s*$", re.S)
_NP = re.compile(r"^n\s*=\s*(\d+)\s+p\s*=\s*(\d+)$")
_RAT = re.compile(r"^([A-Za-z_]\w*)\s*=\s*(-?\d+(?:/\d+)?)$")


def parse_germ_file(text: str) -> GermFile:
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    m = _HEADER.match(body)
    if not m:
        raise GermFileError("expected: germ <name> { ... }")
    name, inner = m.group(1), m.group(2)
    clauses = [c.strip() for c in inner.split(";") if c.strip()]
    n = p = None
    varnames: tuple[str, ...] | None = None
    params: dict[str, Fraction] = {}
    components = perturbation = None
    for clause in clauses:
        if _NP.match(clause):
            g = _NP.match(clause)
            n, p = int(g.group(1)), int(g.group(2))
        elif clause.startswith("vars"):
            varnames = tuple(clause[4:].split())
        elif clause.startswith("params"):
            for item in clause[6:].split():
                g = _RAT.match(item)
                if not g:
                    raise GermFileError(f"bad parameter declaration {item!r}")
                params[g.group(1)] = Fraction(g.group(2))
        elif clause.startswith("components:"):
            components = tuple(s.strip() for s in clause[len("components:"):].split(",") if s.strip())
        elif clause.startswith("perturbation:"):
            perturbation = tuple(s.strip() for s in clause[len("perturbation:"):].split(",") if s.strip())
        else:
            raise GermFileError(f"unrecognized clause {clause!r}")
    if n is None or varnames is None or components is None:
        raise GermFileError("germ file needs 'n=.. p=..', 'vars' and 'components'")
    gf = GermFile(name, n, p, varnames, params, components, perturbation)
    gf.symbolic_germ()  # validate now: dimensions, vanishing, grammar
    if perturbation is not None:
        gf.symbolic_germ(perturbed=True)
    return gf


def load_germ_file(path: str) -> GermFile:
    with open(path) as fh:
        return parse_germ_file(fh.read())


def format_germ_file(gf: GermFile) -> str:
    ring = gf.ring()
    out = [f"germ {gf.name} {{", f"  n={gf.n} p={gf.p};", "  vars " + " ".join(gf.varnames) + ";"]
    if gf.params:
        out.append("  params " + " ".join(f"{k}={v}" for k, v in gf.params.items()) + ";")
    comps = ", ".join(to_string(parse_polynomial(e, ring)) for e in gf.components)
    out.append(f"  components: {comps};")
    if gf.perturbation is not None:
        pert = ", ".join(to_string(parse_polynomial(e, ring)) for e in gf.perturbation)
        out.append(f"  perturbation: {pert};")
    out.append("}")
    return "\n".join(out) + "\n"
