"""The classification catalog for source dimension 3, target dimension 4.

Each entry packages a representative germ together with the published
invariants (mu of the double and triple point spaces, Ae-codimension and
image Milnor number where recorded; for several families codimension and
image Milnor number coincide and are stored in both columns).  Family
guards are enforced: out-of-range indices are refused, not clamped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .germs import GermCorank1
from .parse import parse_polynomial
from .poly import PolyRing


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    germ: GermCorank1
    mu_d2: int | None        # None renders as the empty-space dash
    mu_d3: int | None
    ae_codim: Fraction | None
    mu_I: Fraction | None
    condition: str
    table: str               # "simple" | "nonsimple"


_RING = PolyRing(("x", "y", "z"))


def _germ(label: str, g1: str, g2: str) -> GermCorank1:
    comps = (parse_polynomial(g1, _RING), parse_polynomial(g2, _RING))
    return GermCorank1(3, 4, _RING, comps, label)


def simple_entry(family: str, k: int | None = None, j: int | None = None) -> CatalogEntry:
    f = family.upper()
    if f == "A":
        if k is None or k < 1:
            raise CatalogError("A_k needs k >= 1")
        return CatalogEntry(f"A{k}", _germ(f"A{k}", "z^2", f"z*(z^2 + x^2 + y^{k + 1})"),
                            k, None, Fraction(k), Fraction(k), "k>=1", "simple")
    if f == "D":
        if k is None or k < 4:
            raise CatalogError("D_k needs k >= 4")
        return CatalogEntry(f"D{k}", _germ(f"D{k}", "z^2", f"z*(z^2 + x^2*y + y^{k - 1})"),
                            k, None, Fraction(k), Fraction(k), "k>=4", "simple")
    if f == "E":
        if k not in (6, 7, 8):
            raise CatalogError("E_k exists for k in {6, 7, 8}")
        tail = {6: "x^3 + y^4", 7: "x^3 + x*y^3", 8: "x^3 + y^5"}[k]
        return CatalogEntry(f"E{k}", _germ(f"E{k}", "z^2", f"z*(z^2 + {tail})"),
                            k, None, Fraction(k), Fraction(k), "", "simple")
    if f == "B":
        if k is None or k < 2:
            raise CatalogError("B_k needs k >= 2")
        return CatalogEntry(f"B{k}", _germ(f"B{k}", "z^2", f"z*(x^2 + y^2 + z^{2 * k})"),
                            2 * k - 1, None, Fraction(k), Fraction(k), "k>=2", "simple")
    if f == "C":
        if k is None or k < 3:
            raise CatalogError("C_k needs k >= 3")
        return CatalogEntry(f"C{k}", _germ(f"C{k}", "z^2", f"z*(x^2 + y*z^2 + y^{k})"),
                            k + 1, None, Fraction(k), Fraction(k), "k>=3", "simple")
    if f == "F":
        if k not in (None, 4):
            raise CatalogError("only F_4 exists")
        return CatalogEntry("F4", _germ("F4", "z^2", "z*(x^2 + y^3 + z^4)"),
                            6, None, Fraction(4), Fraction(4), "", "simple")
    if f == "P3":
        if k is None or k < 2:
            raise CatalogError("P_3^k needs k >= 2")
        return CatalogEntry(f"P3^{k}", _germ(f"P3^{k}", f"y*z + z^6 + z^{3 * k + 2}", "x*z + z^3"),
                            0, 6 * k + 1, Fraction(k + 1), Fraction(k + 2), "k>=2", "simple")
    if f == "P41":
        return CatalogEntry("P4^1", _germ("P4^1", "y*z + z^7 + z^8", "x*z + z^3"),
                            0, 16, Fraction(4), Fraction(5), "", "simple")
    if f == "P":
        if k is None or k < 1 or k % 3 == 0:
            raise CatalogError("P_k needs k >= 1 with k not divisible by 3")
        merged = Fraction((k + 1) * (k + 2), 6)
        return CatalogEntry(f"P{k}", _germ(f"P{k}", f"y*z + z^{k + 3}", "x*z + z^3"),
                            0, k * k, merged, merged, "k>=1, 3 does not divide k", "simple")
    if f == "Q":
        if k is None or k < 2:
            raise CatalogError("Q_k needs k >= 2")
        return CatalogEntry(f"Q{k}", _germ(f"Q{k}", "x*z + y*z^2", f"z^3 + y^{k}*z"),
                            k - 1, 1, Fraction(k), Fraction(k), "k>=2", "simple")
    if f == "R":
        if k is None or k < 3:
            raise CatalogError("R_k needs k >= 3")
        return CatalogEntry(f"R{k}", _germ(f"R{k}", "x*z + z^3", f"y*z^2 + z^4 + z^{2 * k - 1}"),
                            2 * k - 3, 4, Fraction(k), Fraction(k + 1), "k>=3", "simple")
    if f == "S":
        if j is None or k is None or j < 1 or k < 2:
            raise CatalogError("S_{j,k} needs j >= 1 and k >= 2")
        return CatalogEntry(f"S{j},{k}",
                            _germ(f"S{j},{k}", f"x*z + y^2*z^2 + z^{3 * j + 2}", f"z^3 + y^{k}*z"),
                            k - 1, 6 * j + 1, Fraction(k + j), Fraction(k + j + 1),
                            "j>=1, k>=2", "simple")
    raise CatalogError(f"unknown simple family {family!r}")


_NONSIMPLE = {
    # label: (f1 template, f2 template, mu_d2, mu_d3, codim, mu_I, condition, guard)
    "I": ("y*z + x*z^3 + z^5 + a*z^7", "x*z + z^4 + b*z^6", 0, 13, 5, 6,
          "a != b", lambda q: q["a"] != q["b"]),
    "II": ("y*z + x*z^3 + a*z^6 + z^7 + b*z^8 + c*z^9", "x*z + z^4", 0, 25, 7, 9,
           "generic (sample values only)", lambda q: True),
    "III": ("y*z + z^5 + z^6 + a*z^7", "x*z + z^4", 0, 13, 5, 6,
            "a != 1", lambda q: q["a"] != 1),
    "IV": ("y*z + z^5 + a*z^7", "x*z + z^4 + z^6", 0, 13, 5, 6,
           "a != 1", lambda q: q["a"] != 1),
    "V": ("x*z + z^5 + a*y^3*z^2 + y^4*z^2", "z^3 + y^2*z", 1, 13, 5, 6,
          "any a", lambda q: True),
    "VI": ("x*z + z^3", "y*z^2 + z^5 + z^6 + a*z^7", 3, 13, 4, 6,
           "a != 1", lambda q: q["a"] != 1),
    "VII": ("x*z + z^3", "y^2*z + x*z^2 + a*z^4 + z^5", 4, 7, 5, 6,
            "a not in {1, -1, 0, 5/4, 1/2, 3/2}",
            lambda q: q["a"] not in (1, -1, 0, Fraction(5, 4), Fraction(1, 2), Fraction(3, 2))),
    "VIII": ("x*z + z^4 + a*z^5 + b*z^7", "y*z^2 + z^4 + z^5", 3, 13, 6, 8,
             "a - a^2 != b", lambda q: q["a"] - q["a"] ** 2 != q["b"]),
}

NONSIMPLE_DEFAULTS = {
    "I": {"a": Fraction(0), "b": Fraction(1)},
    # row II's genericity is resolved by computation: this sample attains both
    # the listed mu(D^3) = 25 and the minimal quadruple-point count (one)
    "II": {"a": Fraction(2), "b": Fraction(1), "c": Fraction(2)},
    "III": {"a": Fraction(0)},
    "IV": {"a": Fraction(0)},
    "V": {"a": Fraction(0)},
    "VI": {"a": Fraction(0)},
    "VII": {"a": Fraction(2)},
    "VIII": {"a": Fraction(0), "b": Fraction(1)},
}


def nonsimple_entry(label: str, values: dict[str, Fraction] | None = None) -> CatalogEntry:
    key = label.upper()
    if key not in _NONSIMPLE:
        raise CatalogError(f"unknown nonsimple row {label!r}; use I..VIII")
    f1, f2, m2, m3, codim, mu_I, condition, guard = _NONSIMPLE[key]
    params = dict(NONSIMPLE_DEFAULTS[key])
    if values:
        unknown = set(values) - set(params)
        if unknown:
            raise CatalogError(f"row {key} has no parameters {sorted(unknown)}")
        params.update(values)
    if not guard(params):
        raise CatalogError(f"row {key} requires {condition}; got {params}")
    ring = PolyRing(("x", "y", "z"), tuple(sorted(params)))
    comps = (parse_polynomial(f1, ring), parse_polynomial(f2, ring))
    shown = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
    germ = GermCorank1(3, 4, ring, comps, f"{key}[{shown}]").at_params(params)
    return CatalogEntry(f"{key}[{shown}]", germ, m2, m3, Fraction(codim), Fraction(mu_I),
                        condition, "nonsimple")


DEFAULT_SIMPLE = (
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("D", 4), ("D", 5),
    ("E", 6), ("E", 7), ("E", 8),
    ("B", 2), ("B", 3),
    ("C", 3), ("C", 4),
    ("F", 4),
    ("P", 1), ("P", 2), ("P3", 2), ("P41", None),
    ("Q", 2), ("Q", 3),
    ("R", 3),
    ("S", (1, 2)),
)

DEFAULT_NONSIMPLE = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII")


def default_simple_entries() -> list[CatalogEntry]:
    out = []
    for family, arg in DEFAULT_SIMPLE:
        if family == "S":
            j, k = arg
            out.append(simple_entry("S", k=k, j=j))
        else:
            out.append(simple_entry(family, k=arg))
    return out


def default_nonsimple_entries() -> list[CatalogEntry]:
    return [nonsimple_entry(label) for label in DEFAULT_NONSIMPLE]
