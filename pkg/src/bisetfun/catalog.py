"""Builtin group catalog and the JSON catalog loader.

Catalog file format: a JSON list of entries
``{"name": str, "order": n, "table": n x n array of 0-based indices}``
with index 0 the identity.  Entries merge over (and may shadow) the
builtin catalog.
"""

from __future__ import annotations

import itertools
import json

import numpy as np

from .groups import FiniteGroup, GroupError, build_group


class CatalogError(ValueError):
    """Malformed catalog file or unknown group name."""


def _cyclic_table(n):
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n


def cyclic_group(n, name=None):
    return build_group(name or f"C{n}", _cyclic_table(n), validate=False)


def _klein_table():
    # bitwise xor on {0,1,2,3}
    idx = np.arange(4)
    return idx[:, None] ^ idx[None, :]


def _s3_table():
    perms = list(itertools.permutations(range(3)))  # identity (0,1,2) first
    index = {p: i for i, p in enumerate(perms)}
    t = np.zeros((6, 6), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            comp = tuple(p[q[k]] for k in range(3))  # apply q, then p
            t[i, j] = index[comp]
    return t


def _dihedral8_table():
    # elements r^i s^j with index 2*i + j; (r^i s^j)(r^k s^l) =
    # r^(i + (-1)^j k) s^(j+l)
    def idx(i, j):
        return 2 * (i % 4) + (j % 2)

    t = np.zeros((8, 8), dtype=np.int64)
    for i in range(4):
        for j in range(2):
            for k in range(4):
                for l in range(2):
                    rot = i + (k if j == 0 else -k)
                    t[idx(i, j), idx(k, l)] = idx(rot, j + l)
    return t


def _quaternion_table():
    # 1,-1,i,-i,j,-j,k,-k encoded as (axis, sign): index 2*axis + (sign<0)
    units = ["1", "i", "j", "k"]

    def mul(a, b):
        # multiplication in the quaternion group on (axis, sign)
        ax_a, ax_b = a[0], b[0]
        sign = a[1] * b[1]
        if ax_a == 0:
            return (ax_b, sign)
        if ax_b == 0:
            return (ax_a, sign)
        if ax_a == ax_b:
            return (0, -sign)
        # i*j=k, j*k=i, k*i=j and anticommute
        cyc = {(1, 2): (3, 1), (2, 3): (1, 1), (3, 1): (2, 1),
               (2, 1): (3, -1), (3, 2): (1, -1), (1, 3): (2, -1)}
        ax, s = cyc[(ax_a, ax_b)]
        return (ax, s * sign)

    elems = [(ax, s) for ax in range(4) for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    t = np.zeros((8, 8), dtype=np.int64)
    for a in elems:
        for b in elems:
            t[index[a], index[b]] = index[mul(a, b)]
    names = [("-" if s < 0 else "") + units[ax] for ax, s in elems]
    return t, names


def _build_builtin():
    groups = {}

    def add(g):
        groups[g.name] = g

    add(build_group("1", [[0]], validate=False))
    for n in (2, 3, 4, 6, 8):
        add(cyclic_group(n))
    add(build_group("V4", _klein_table(), validate=False))
    add(build_group("S3", _s3_table(), validate=False))
    add(build_group("D8", _dihedral8_table(), validate=False))
    t, names = _quaternion_table()
    add(build_group("Q8", t, element_names=names, validate=False))
    return groups


BUILTIN = _build_builtin()
TRIVIAL = BUILTIN["1"]

#: Default verification window (small groups quantified over by the suites).
DEFAULT_WINDOW = ("1", "C2", "C3", "C4", "V4", "S3")


def load_catalog(path=None):
    """Builtin catalog, merged with the JSON file at ``path`` if given."""
    groups = dict(BUILTIN)
    if path is None:
        return groups
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from None
    if not isinstance(data, list):
        raise CatalogError(f"catalog {path}: expected a JSON list of entries")
    for i, entry in enumerate(data):
        if not isinstance(entry, dict) or \
                not {"name", "order", "table"} <= set(entry):
            raise CatalogError(f"catalog {path}: entry {i} needs "
                               "name/order/table")
        name = entry["name"]
        try:
            g = build_group(name, entry["table"], validate=True)
        except (GroupError, ValueError) as exc:
            raise CatalogError(f"catalog {path}: entry {name!r}: {exc}") \
                from None
        if g.order != entry["order"]:
            raise CatalogError(f"catalog {path}: entry {name!r}: declared "
                               f"order {entry['order']} != table size "
                               f"{g.order}")
        groups[name] = g
    return groups


def resolve_window(groups, names):
    """Window groups by name, in the given order."""
    out = []
    for name in names:
        if name not in groups:
            raise CatalogError(f"unknown group {name!r} (catalog has: "
                               f"{', '.join(sorted(groups))})")
        out.append(groups[name])
    return out
