"""Interchange formats: algebra spec files and builder spec files.

All indices are 1-based in files (0-based internally) and all rationals are
serialized as strings, so a dump/load round trip is exact.  Loading does
not validate the Jacobi identity; the `check` command does that and the
builders insist on it.
"""

import json
from fractions import Fraction
from pathlib import Path

from .core import AlgebraError, BilinearForm, LieAlgebra
from .extension import Representation
from .linalg import Q0


class SpecFormatError(Exception):
    def __init__(self, message, where=None):
        self.where = where
        super().__init__(message if where is None else f"{where}: {message}")


def parse_rational(value, where=""):
    if isinstance(value, bool) or isinstance(value, float):
        raise SpecFormatError(f"rational must be an integer or 'p/q' string, got {value!r}", where)
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SpecFormatError(f"bad rational {value!r}: {exc}", where)


def rational_str(x):
    return str(Fraction(x))


def load_algebra_dict(doc, where="algebra"):
    """(LieAlgebra, BilinearForm | None) from a spec dictionary."""
    if not isinstance(doc, dict):
        raise SpecFormatError("algebra spec must be an object", where)
    if "dim" not in doc or not isinstance(doc["dim"], int) or doc["dim"] < 1:
        raise SpecFormatError("'dim' must be a positive integer", where)
    dim = doc["dim"]
    names = doc.get("names")
    if names is not None:
        if (not isinstance(names, list) or len(names) != dim
                or not all(isinstance(s, str) for s in names)):
            raise SpecFormatError(f"'names' must be {dim} strings", where)
    table = {}
    for pos, item in enumerate(doc.get("brackets", [])):
        loc = f"{where}.brackets[{pos}]"
        if not (isinstance(item, list) and len(item) == 4):
            raise SpecFormatError("bracket entry must be [i, j, k, value]", loc)
        i, j, k, value = item
        for label, idx in (("i", i), ("j", j), ("k", k)):
            if not isinstance(idx, int) or not 1 <= idx <= dim:
                raise SpecFormatError(f"index {label}={idx!r} out of 1..{dim}", loc)
        if not i < j:
            raise SpecFormatError(f"bracket indices must satisfy i < j, got ({i},{j})", loc)
        c = parse_rational(value, loc)
        if c != 0:
            table.setdefault((i - 1, j - 1), {})
            table[(i - 1, j - 1)][k - 1] = table[(i - 1, j - 1)].get(k - 1, Q0) + c
    try:
        alg = LieAlgebra(dim, tuple(names) if names else
                         tuple(f"e{i+1}" for i in range(dim)), table)
    except AlgebraError as exc:
        raise SpecFormatError(str(exc), where)
    form = None
    if "metric" in doc:
        m = [[Q0] * dim for _ in range(dim)]
        for pos, item in enumerate(doc["metric"]):
            loc = f"{where}.metric[{pos}]"
            if not (isinstance(item, list) and len(item) == 3):
                raise SpecFormatError("metric entry must be [i, j, value]", loc)
            i, j, value = item
            for label, idx in (("i", i), ("j", j)):
                if not isinstance(idx, int) or not 1 <= idx <= dim:
                    raise SpecFormatError(f"index {label}={idx!r} out of 1..{dim}", loc)
            if not i <= j:
                raise SpecFormatError(f"metric indices must satisfy i <= j, got ({i},{j})", loc)
            c = parse_rational(value, loc)
            m[i - 1][j - 1] = c
            m[j - 1][i - 1] = c
        form = BilinearForm(tuple(tuple(row) for row in m))
    return alg, form


def dump_algebra_dict(alg, form=None):
    doc = {"dim": alg.dim, "names": list(alg.names)}
    brackets = []
    for (i, j) in sorted(alg.table):
        for k in sorted(alg.table[(i, j)]):
            brackets.append([i + 1, j + 1, k + 1, rational_str(alg.table[(i, j)][k])])
    doc["brackets"] = brackets
    if form is not None:
        metric = []
        for i in range(alg.dim):
            for j in range(i, alg.dim):
                if form.matrix[i][j] != 0:
                    metric.append([i + 1, j + 1, rational_str(form.matrix[i][j])])
        doc["metric"] = metric
    return doc


def load_algebra_file(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecFormatError(str(exc), str(path))
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"invalid JSON: {exc}", str(path))
    return load_algebra_dict(doc, where=str(path))


def _load_part(spec, key, base_dir):
    part = spec.get(key)
    if part is None:
        raise SpecFormatError(f"builder spec is missing '{key}'")
    if isinstance(part, str):
        return load_algebra_file(Path(base_dir) / part)
    return load_algebra_dict(part, where=key)


def load_builder_dict(spec, base_dir="."):
    """Representation from {"d": ..., "h": ..., "pi": [matrix, ...]}.

    'd' and 'h' are algebra specs (inline objects or file paths relative to
    the spec file) and must carry metrics; 'pi' is one d-matrix per h basis
    vector.
    """
    if not isinstance(spec, dict):
        raise SpecFormatError("builder spec must be an object")
    d_alg, d_form = _load_part(spec, "d", base_dir)
    h_alg, h_form = _load_part(spec, "h", base_dir)
    if d_form is None:
        raise SpecFormatError("'d' needs a metric")
    if h_form is None:
        raise SpecFormatError("'h' needs a metric")
    pi = spec.get("pi")
    if not isinstance(pi, list) or len(pi) != h_alg.dim:
        raise SpecFormatError(f"'pi' must list {h_alg.dim} matrices")
    mats = []
    for pos, mat in enumerate(pi):
        loc = f"pi[{pos}]"
        if (not isinstance(mat, list) or len(mat) != d_alg.dim
                or any(not isinstance(r, list) or len(r) != d_alg.dim for r in mat)):
            raise SpecFormatError(f"matrix must be {d_alg.dim}x{d_alg.dim}", loc)
        mats.append(tuple(tuple(parse_rational(x, loc) for x in row) for row in mat))
    return Representation(h_alg, h_form, d_alg, d_form, tuple(mats))


def load_builder_file(path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecFormatError(str(exc), str(path))
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"invalid JSON: {exc}", str(path))
    return load_builder_dict(doc, base_dir=Path(path).parent)


def dump_builder_dict(rep):
    return {
        "d": dump_algebra_dict(rep.d, rep.d_form),
        "h": dump_algebra_dict(rep.h, rep.h_form),
        "pi": [[[rational_str(x) for x in row] for row in m] for m in rep.mats],
    }
