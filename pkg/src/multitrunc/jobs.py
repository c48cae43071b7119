"""JSON job files and the built-in demo modules.

A job file looks like::

    {
      "ring": {"n": [1, 1], "p": 32003},
      "module": {
        "target_twists": [[1, 0], [0, 1], [0, 1]],
        "source_twists": [[1, 1], [1, 1]],
        "entries": [["x(1,0)", "x(1,1)"], ["-x(0,0)", "0"], ["0", "-x(0,1)"]]
      },
      "box": {"lo": [0, 0], "hi": [2, 2]},
      "degree": [1, 1]
    }

``box`` and ``degree`` are optional.  Entries use the polynomial grammar of
:func:`multitrunc.ring.parse_polynomial`; entry (k, l) must be homogeneous of
degree source_twists[l] - target_twists[k].
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .groebner import FreeModule, GradedHom, InhomogeneousError
from .regions import DegreeBox
from .ring import PolynomialSyntaxError, Ring, deg_sub, format_polynomial, irrelevant_ideal, make_ring, parse_polynomial
from .truncation import PresentedModule


class JobParseError(ValueError):
    """Malformed input text (exit code 2)."""


class JobValidationError(ValueError):
    """Well-formed but inconsistent input (exit code 3)."""


@dataclass(frozen=True)
class Job:
    ring: Ring
    module: PresentedModule
    box: DegreeBox | None = None
    degree: tuple | None = None

    def to_dict(self) -> dict:
        phi = self.module.presentation
        rows = phi.matrix()
        out = {
            "ring": {"n": list(self.ring.n), "p": self.ring.p},
            "module": {
                "target_twists": [list(t) for t in phi.target.twists],
                "source_twists": [list(t) for t in phi.source.twists],
                "entries": [[format_polynomial(self.ring, f.coeffs) for f in row] for row in rows],
            },
        }
        if self.box is not None:
            out["box"] = {"lo": list(self.box.lo), "hi": list(self.box.hi)}
        if self.degree is not None:
            out["degree"] = list(self.degree)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def __eq__(self, other):
        return isinstance(other, Job) and self.to_dict() == other.to_dict()


def _int_list(value, what):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise JobValidationError("%s must be a list of integers" % what)
    return tuple(value)


def job_from_dict(data) -> Job:
    if not isinstance(data, dict):
        raise JobValidationError("job must be a JSON object")
    try:
        ring_data = data["ring"]
        mod = data["module"]
    except (KeyError, TypeError) as exc:
        raise JobValidationError("missing field %s" % exc) from None
    if not isinstance(ring_data, dict) or not isinstance(mod, dict):
        raise JobValidationError("ring and module must be JSON objects")
    n = _int_list(ring_data.get("n"), "ring.n")
    p = ring_data.get("p", 32003)
    try:
        ring = make_ring(n, p)
    except ValueError as exc:
        raise JobValidationError(str(exc)) from None
    r = ring.r
    tt = [_int_list(t, "target twist") for t in mod.get("target_twists", [])]
    st = [_int_list(t, "source twist") for t in mod.get("source_twists", [])]
    for t in tt + st:
        if len(t) != r:
            raise JobValidationError("twist %r does not have length r=%d" % (list(t), r))
    entries = mod.get("entries", [])
    if not isinstance(entries, list) or len(entries) != len(tt) or any(
            not isinstance(row, list) or len(row) != len(st) for row in entries):
        raise JobValidationError("entries must be a %dx%d matrix" % (len(tt), len(st)))
    rows = []
    for k, row in enumerate(entries):
        parsed = []
        for l, text in enumerate(row):
            if not isinstance(text, str):
                raise JobValidationError("entry (%d,%d) must be a string" % (k, l))
            try:
                f = parse_polynomial(ring, text)
            except PolynomialSyntaxError as exc:
                raise JobParseError("entry (%d,%d) %s" % (k, l, exc)) from None
            want = deg_sub(st[l], tt[k])
            if f and (not f.is_homogeneous() or f.multidegree() != want):
                raise JobValidationError(
                    "entry (%d,%d) is not homogeneous of degree %s" % (k, l, list(want)))
            parsed.append(f)
        rows.append(parsed)
    try:
        phi = GradedHom.from_matrix(FreeModule(ring, tuple(tt)), FreeModule(ring, tuple(st)), rows)
    except InhomogeneousError as exc:
        raise JobValidationError(str(exc)) from None
    box = None
    if data.get("box") is not None:
        b = data["box"]
        try:
            box = DegreeBox(_int_list(b["lo"], "box.lo"), _int_list(b["hi"], "box.hi"))
        except (KeyError, TypeError, ValueError) as exc:
            raise JobValidationError("bad box: %s" % exc) from None
        if box.r != r:
            raise JobValidationError("box has wrong length")
    degree = None
    if data.get("degree") is not None:
        degree = _int_list(data["degree"], "degree")
        if len(degree) != r:
            raise JobValidationError("degree has wrong length")
    return Job(ring, PresentedModule(phi), box, degree)


def loads(text: str) -> Job:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobParseError("line %d column %d: %s" % (exc.lineno, exc.colno, exc.msg)) from None
    return job_from_dict(data)


# --- demos ------------------------------------------------------------------

def irrelevant_ideal_module(n=(1, 2), p: int = 32003) -> PresentedModule:
    """S/B for the irrelevant ideal B of the product of projective spaces."""
    ring = make_ring(n, p)
    gens = irrelevant_ideal(ring)
    twist = tuple(1 for _ in ring.n)
    return PresentedModule.from_matrix(ring, [ring.zero_degree()], [twist] * len(gens), [gens])


def mixed_module(p: int = 32003) -> PresentedModule:
    """coker of the 3x2 matrix over P^1 x P^1 with Betti table a+2b | 2ab."""
    ring = make_ring([1, 1], p)
    x = ring.variable
    z = ring.zero()
    rows = [[x(1, 0), x(1, 1)], [-x(0, 0), z], [z, -x(0, 1)]]
    return PresentedModule.from_matrix(ring, [(1, 0), (0, 1), (0, 1)], [(1, 1), (1, 1)], rows)


def family_module(d: int, p: int = 32003) -> PresentedModule:
    """coker of phi_d: S(-d,-d)^6 -> S(0,-d)^2 + S(-d,0)^4 over P^2 x P^3."""
    ring = make_ring([2, 3], p)

    def x(i, j):
        return ring.variable(i, j) ** d

    z = ring.zero()
    rows = [
        [x(0, 0), x(0, 1), x(0, 2), z, z, z],
        [z, z, z, x(0, 1), x(0, 0), x(0, 2)],
        [x(1, 0), z, z, x(1, 0), z, z],
        [z, x(1, 1), z, z, x(1, 1), z],
        [z, z, x(1, 2), z, z, x(1, 2)],
        [z, z, z, x(1, 3), z, z],
    ]
    return PresentedModule.from_matrix(ring, [(0, d)] * 2 + [(d, 0)] * 4, [(d, d)] * 6, rows)


DEMOS = {
    "irrelevant-ideal": lambda: Job(*_ring_and(irrelevant_ideal_module())),
    "section3-module": lambda: Job(*_ring_and(mixed_module())),
    "example21-d2": lambda: Job(*_ring_and(family_module(2)), box=DegreeBox((0, 0), (7, 4))),
    "example21-d3": lambda: Job(*_ring_and(family_module(3)), box=DegreeBox((0, 0), (10, 5))),
}


def _ring_and(M: PresentedModule):
    return M.ring, M


def demo(name: str) -> Job:
    try:
        return DEMOS[name]()
    except KeyError:
        raise JobValidationError("unknown demo %r (choose from %s)" % (name, ", ".join(sorted(DEMOS)))) from None
