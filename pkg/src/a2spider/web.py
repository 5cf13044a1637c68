"""Planar directed trivalent webs in a disk with signed boundary.

A web is stored as a combinatorial map.  Each trivalent vertex ``v`` owns
three *ends* ``3v, 3v+1, 3v+2`` listed counterclockwise.  After those come
one end per domain point (bottom, left to right) and one per codomain point
(top, left to right).  ``partner`` pairs the two ends of every edge.  Free
circles carry no ends and are only counted.

Edge directions are implied: every end of a source vertex points out of it,
every end of a sink points in.  A domain point with sign ``+`` emits its edge
upward into the disk and a codomain point with sign ``+`` receives one.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

SIGNS = "+-"


class WebError(ValueError):
    """Raised for malformed diagrams."""


class CompositionError(WebError):
    """Raised when boundaries do not match in a composition."""


def normalize_signs(signs: str) -> str:
    signs = signs.replace("−", "-")
    if any(c not in SIGNS for c in signs):
        raise WebError(f"invalid sign sequence {signs!r}")
    return signs


def dual(signs: str) -> str:
    """Swap + and - in a sign sequence."""
    return signs.translate(str.maketrans("+-", "-+"))


@dataclass(frozen=True)
class WebDiagram:
    dom: str
    cod: str
    src: tuple[bool, ...]
    partner: tuple[int, ...]
    loops: int = 0

    @property
    def nv(self) -> int:
        return len(self.src)

    @property
    def base(self) -> int:
        """Index of the first boundary end."""
        return 3 * len(self.src)

    def is_out(self, e: int) -> bool:
        """Whether the edge at end ``e`` points away from that end's vertex."""
        base = 3 * len(self.src)
        if e < base:
            return self.src[e // 3]
        i = e - base
        nd = len(self.dom)
        if i < nd:
            return self.dom[i] == "+"
        return self.cod[i - nd] == "-"

    def num_edges(self) -> int:
        return len(self.partner) // 2 + self.loops

    def __repr__(self) -> str:
        return f"WebDiagram({self.dom!r}->{self.cod!r}, nv={self.nv}, loops={self.loops})"


def _rot(e: int) -> int:
    return e - e % 3 + (e + 1) % 3


# construction

def from_labels(
    dom: str,
    cod: str,
    vertices: Sequence[tuple[bool, Sequence[object]]],
    dom_labels: Sequence[object],
    cod_labels: Sequence[object],
    loops: int = 0,
    check: bool = True,
) -> WebDiagram:
    """Build a web from edge labels.

    ``vertices`` lists ``(is_source, (a, b, c))`` with edge labels in
    counterclockwise order; every label must occur exactly twice among the
    vertex slots and boundary points.
    """
    dom, cod = normalize_signs(dom), normalize_signs(cod)
    if len(dom_labels) != len(dom) or len(cod_labels) != len(cod):
        raise WebError("boundary labels do not match sign sequences")
    seen: dict[object, int] = {}
    nv = len(vertices)
    partner = [-1] * (3 * nv + len(dom) + len(cod))

    def attach(label: object, end: int) -> None:
        if label in seen:
            other = seen.pop(label)
            partner[end] = other
            partner[other] = end
        else:
            seen[label] = end

    for v, (_, slots) in enumerate(vertices):
        if len(slots) != 3:
            raise WebError("trivalent vertex needs three slots")
        for s, label in enumerate(slots):
            attach(label, 3 * v + s)
    for i, label in enumerate(dom_labels):
        attach(label, 3 * nv + i)
    for j, label in enumerate(cod_labels):
        attach(label, 3 * nv + len(dom) + j)
    if seen:
        raise WebError(f"unpaired edge labels {sorted(map(str, seen))}")
    w = WebDiagram(dom, cod, tuple(bool(k) for k, _ in vertices), tuple(partner), loops)
    if check:
        validate(w)
    return w


def identity(eps: str) -> WebDiagram:
    eps = normalize_signs(eps)
    n = len(eps)
    return WebDiagram(eps, eps, (), tuple(list(range(n, 2 * n)) + list(range(n))))


EMPTY = identity("")

GENERATOR_NAMES = (
    "t[-;++]", "t[+;--]", "t[++;-]", "t[--;+]",
    "b[-+]", "b[+-]", "d[+-]", "d[-+]",
    "H[+-;-+]", "H[-+;+-]",
)


def _generators() -> dict[str, WebDiagram]:
    g = {}
    g["t[-;++]"] = from_labels("-", "++", [(True, "abc")], "a", "cb")
    g["t[+;--]"] = from_labels("+", "--", [(False, "abc")], "a", "cb")
    g["t[++;-]"] = from_labels("++", "-", [(False, "abc")], "bc", "a")
    g["t[--;+]"] = from_labels("--", "+", [(True, "abc")], "bc", "a")
    g["b[-+]"] = from_labels("", "-+", [], "", "aa")
    g["b[+-]"] = from_labels("", "+-", [], "", "aa")
    g["d[+-]"] = from_labels("+-", "", [], "aa", "")
    g["d[-+]"] = from_labels("-+", "", [], "aa", "")
    # sink on the left joined to the two left points, source on the right
    g["H[+-;-+]"] = from_labels("+-", "-+", [(False, "arc"), (True, "drb")], "ab", "cd")
    g["H[-+;+-]"] = from_labels("-+", "+-", [(True, "arc"), (False, "drb")], "ab", "cd")
    return g


def generator(name: str) -> WebDiagram:
    name = name.replace("−", "-").replace(" ", "")
    try:
        return _GENERATORS[name]
    except KeyError:
        raise WebError(f"unknown generator {name!r}") from None


def gen_t(kind: str) -> WebDiagram:
    if not kind.startswith("t["):
        raise WebError(f"not a vertex generator: {kind!r}")
    return generator(kind)


def gen_cupcap(kind: str) -> WebDiagram:
    if kind[:2] not in ("b[", "d["):
        raise WebError(f"not a cup or cap: {kind!r}")
    return generator(kind)


def gen_H(kind: str) -> WebDiagram:
    if not kind.startswith("H["):
        raise WebError(f"not an H web: {kind!r}")
    return generator(kind)


# gluing

def _splice(
    partner: Sequence[int],
    join: dict[int, int],
    newid: dict[int, int] | Sequence[int],
    survivors: Iterable[int],
    size: int,
) -> tuple[list[int], int]:
    """Fuse edges through the pass-through ends in ``join``.

    ``partner`` is an involution on old ends, ``join`` pairs ends that are
    glued together and disappear, and ``newid`` renumbers the surviving ends.
    Returns the new partner list and the number of closed loops created.
    """
    out = [-1] * size
    used = set()
    for x in survivors:
        y = partner[x]
        while y in join:
            used.add(y)
            z = join[y]
            used.add(z)
            y = partner[z]
        out[newid[x]] = newid[y]
    loops = 0
    for y in join:
        if y in used:
            continue
        loops += 1
        z = y
        while True:
            used.add(z)
            z2 = join[z]
            used.add(z2)
            z = partner[z2]
            if z == y:
                break
    return out, loops


def glue_compose(f: WebDiagram, g: WebDiagram) -> WebDiagram:
    """Stack ``g`` on top of ``f`` (``f`` then ``g``)."""
    if f.cod != g.dom:
        n = min(len(f.cod), len(g.dom))
        pos = next((i for i in range(n) if f.cod[i] != g.dom[i]), n)
        raise CompositionError(
            f"cannot compose {f.dom}->{f.cod} with {g.dom}->{g.cod}: mismatch at position {pos}"
        )
    nf, ng = f.nv, g.nv
    fb, gb = 3 * nf, 3 * ng
    nd, nm, nc = len(f.dom), len(f.cod), len(g.cod)
    off = len(f.partner)
    partner = list(f.partner) + [off + p for p in g.partner]
    join = {}
    for j in range(nm):
        a, b = fb + nd + j, off + gb + j
        join[a] = b
        join[b] = a
    base = 3 * (nf + ng)
    newid = {}
    for e in range(fb):
        newid[e] = e
    for e in range(gb):
        newid[off + e] = fb + e
    for i in range(nd):
        newid[fb + i] = base + i
    for j in range(nc):
        newid[off + gb + nm + j] = base + nd + j
    out, loops = _splice(partner, join, newid, newid.keys(), base + nd + nc)
    return WebDiagram(f.dom, g.cod, f.src + g.src, tuple(out), f.loops + g.loops + loops)


def glue_tensor(f: WebDiagram, g: WebDiagram) -> WebDiagram:
    """Place ``g`` to the right of ``f``."""
    nf, ng = f.nv, g.nv
    fb, gb = 3 * nf, 3 * ng
    base = fb + gb
    fd, fc, gd, gc = len(f.dom), len(f.cod), len(g.dom), len(g.cod)

    def fmap(e: int) -> int:
        if e < fb:
            return e
        i = e - fb
        return base + i if i < fd else base + fd + gd + (i - fd)

    def gmap(e: int) -> int:
        if e < gb:
            return fb + e
        i = e - gb
        return base + fd + i if i < gd else base + fd + gd + fc + (i - gd)

    out = [0] * (base + fd + gd + fc + gc)
    for e, p in enumerate(f.partner):
        out[fmap(e)] = fmap(p)
    for e, p in enumerate(g.partner):
        out[gmap(e)] = gmap(p)
    return WebDiagram(f.dom + g.dom, f.cod + g.cod, f.src + g.src, tuple(out), f.loops + g.loops)


def close_up(w: WebDiagram) -> WebDiagram:
    """Join each codomain point to the matching domain point around the right side."""
    if w.dom != w.cod:
        raise CompositionError("closure needs equal domain and codomain")
    base = w.base
    n = len(w.dom)
    join = {}
    for i in range(n):
        join[base + i] = base + n + i
        join[base + n + i] = base + i
    out, loops = _splice(w.partner, join, list(range(base)), range(base), base)
    return WebDiagram("", "", w.src, tuple(out), w.loops + loops)


def remove_vertices(w: WebDiagram, removed: Sequence[int], connect: Sequence[tuple[int, int]]) -> WebDiagram:
    """Delete vertices and reconnect: each pair in ``connect`` names two ends of
    deleted vertices whose outer edges are fused into one edge."""
    gone = set(removed)
    keep = [v for v in range(w.nv) if v not in gone]
    base = w.base
    newbase = 3 * len(keep)
    newid = {}
    for k, v in enumerate(keep):
        for s in range(3):
            newid[3 * v + s] = 3 * k + s
    for b in range(base, len(w.partner)):
        newid[b] = newbase + (b - base)
    join = {}
    for a, b in connect:
        join[a] = b
        join[b] = a
    out, loops = _splice(w.partner, join, newid, newid.keys(), newbase + len(w.partner) - base)
    return WebDiagram(w.dom, w.cod, tuple(w.src[v] for v in keep), tuple(out), w.loops + loops)


def star_diagram(w: WebDiagram) -> WebDiagram:
    """Reflect through the horizontal and reverse every edge."""
    base = w.base
    nd, nc = len(w.dom), len(w.cod)

    def m(e: int) -> int:
        if e < base:
            return e - e % 3 + (-(e % 3)) % 3
        i = e - base
        # old domain points become codomain points and vice versa
        return base + nc + i if i < nd else base + (i - nd)

    out = [0] * len(w.partner)
    for e, p in enumerate(w.partner):
        out[m(e)] = m(p)
    return WebDiagram(w.cod, w.dom, tuple(not s for s in w.src), tuple(out), w.loops)


# validation

def _components(w: WebDiagram) -> list[list[int]]:
    """Connected components as lists of ends."""
    n = len(w.partner)
    base = w.base
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            e = stack.pop()
            comp.append(e)
            nbrs = [w.partner[e]]
            if e < base:
                nbrs += [_rot(e), _rot(_rot(e))]
            for x in nbrs:
                if not seen[x]:
                    seen[x] = True
                    stack.append(x)
        comps.append(comp)
    return comps


def validate(w: WebDiagram) -> None:
    """Check the involution, edge directions, and planarity with boundary order."""
    n = len(w.partner)
    base = w.base
    if n != base + len(w.dom) + len(w.cod):
        raise WebError("end count does not match vertices and boundary")
    normalize_signs(w.dom)
    normalize_signs(w.cod)
    if w.loops < 0:
        raise WebError("negative loop count")
    for e, p in enumerate(w.partner):
        if not 0 <= p < n or p == e or w.partner[p] != e:
            raise WebError(f"partner is not a fixed-point-free involution at end {e}")
        if w.is_out(e) == w.is_out(p):
            raise WebError(f"edge at end {e} is not consistently directed")
    # Planarity: add an apex outside the disk joined to every boundary point in
    # disk order; the result must have genus zero.
    nd, nc = len(w.dom), len(w.cod)
    nb = nd + nc
    ring = list(range(base, base + nd)) + list(range(base + nd + nc - 1, base + nd - 1, -1))
    partner = list(w.partner) + [0] * (2 * nb)
    rot = [_rot(e) if e < base else e for e in range(n)] + [0] * (2 * nb)
    apex = [n + nb + k for k in range(nb)]
    for k, b in enumerate(ring):
        x = n + k
        partner[x] = apex[k]
        partner[apex[k]] = x
        rot[b] = x
        rot[x] = b
    for k in range(nb):
        # the apex sees the boundary in the opposite rotational sense
        rot[apex[k]] = apex[(k - 1) % nb]
    total = n + 2 * nb
    vertex = [e // 3 if e < base else -1 for e in range(total)]
    for k, b in enumerate(ring):
        vertex[b] = w.nv + k
        vertex[n + k] = w.nv + k
    for k in range(nb):
        vertex[apex[k]] = w.nv + nb
    # union-find over vertices
    nverts = w.nv + nb + (1 if nb else 0)
    parent = list(range(nverts))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(total):
        a, b = find(vertex[e]), find(vertex[partner[e]])
        if a != b:
            parent[a] = b
    seen = [False] * total
    faces: dict[int, int] = {}
    for e in range(total):
        if seen[e]:
            continue
        c = find(vertex[e])
        faces[c] = faces.get(c, 0) + 1
        x = e
        while not seen[x]:
            seen[x] = True
            x = rot[partner[x]]
    verts: dict[int, int] = {}
    for v in range(nverts):
        c = find(v)
        verts[c] = verts.get(c, 0) + 1
    edges: dict[int, int] = {}
    for e in range(total):
        c = find(vertex[e])
        edges[c] = edges.get(c, 0) + 1
    for c in verts:
        chi = verts[c] - edges.get(c, 0) // 2 + faces.get(c, 0)
        if chi != 2:
            raise WebError("diagram is not planar with the given boundary order")


def is_valid(w: WebDiagram) -> bool:
    try:
        validate(w)
    except WebError:
        return False
    return True


# canonical form

def _relabel(w: WebDiagram, order: Sequence[tuple[int, int]]) -> WebDiagram:
    """Renumber vertices: ``order[k] = (old vertex, rotation offset)``."""
    nv = w.nv
    base = 3 * nv
    newid = [0] * nv
    offset = [0] * nv
    for k, (v, o) in enumerate(order):
        newid[v] = k
        offset[v] = o

    def m(e: int) -> int:
        if e >= base:
            return e
        v = e // 3
        return 3 * newid[v] + (e - 3 * v - offset[v]) % 3

    out = [0] * len(w.partner)
    for e, p in enumerate(w.partner):
        out[m(e)] = m(p)
    return WebDiagram(w.dom, w.cod, tuple(w.src[v] for v, _ in order), tuple(out), w.loops)


def _bfs(w: WebDiagram, seeds: Iterable[int], visited: list[bool]) -> list[tuple[int, int]]:
    """First-visit order of vertices reached from the given entry ends."""
    order = []
    queue: deque[tuple[int, int]] = deque()
    partner = w.partner
    base = w.base

    def visit(e: int) -> None:
        v = e // 3
        if not visited[v]:
            visited[v] = True
            order.append((v, e % 3))
            queue.append((v, e % 3))

    for e in seeds:
        if e < base:
            visit(e)
    while queue:
        v, o = queue.popleft()
        for s in (1, 2):
            p = partner[3 * v + (o + s) % 3]
            if p < base:
                visit(p)
    return order


def _local_code(w: WebDiagram, order: Sequence[tuple[int, int]]) -> tuple:
    pos = {v: (k, o) for k, (v, o) in enumerate(order)}
    code = []
    for v, o in order:
        code.append(w.src[v])
        for s in range(3):
            p = w.partner[3 * v + (o + s) % 3]
            k, o2 = pos[p // 3]
            code.append(3 * k + (p % 3 - o2) % 3)
    return tuple(code)


def canonical(w: WebDiagram) -> WebDiagram:
    """The canonical representative of the isomorphism class of ``w``."""
    nv = w.nv
    base = 3 * nv
    visited = [False] * nv
    order = _bfs(w, (w.partner[b] for b in range(base, len(w.partner))), visited)
    if len(order) < nv:
        closed = []
        for v in range(nv):
            if visited[v]:
                continue
            comp = _bfs(w, [3 * v], list(visited))
            for u, _ in comp:
                visited[u] = True
            mask = _mask(nv, comp)
            best = None
            for u, _ in comp:
                for s in range(3):
                    trial = _bfs(w, [3 * u + s], list(mask))
                    code = _local_code(w, trial)
                    if best is None or code < best[0]:
                        best = (code, trial)
            closed.append(best)
        closed.sort(key=lambda t: t[0])
        for _, trial in closed:
            order.extend(trial)
    return _relabel(w, order)


def _mask(nv: int, comp: Sequence[tuple[int, int]]) -> list[bool]:
    mask = [True] * nv
    for u, _ in comp:
        mask[u] = False
    return mask


def canonical_key(w: WebDiagram) -> bytes:
    """Serialized canonical encoding; equal iff the webs are isomorphic."""
    c = canonical(w)
    parts = [c.dom, c.cod, "".join("s" if s else "t" for s in c.src), ",".join(map(str, c.partner)), str(c.loops)]
    return "|".join(parts).encode()


# faces

def faces(w: WebDiagram) -> list[tuple[int, ...]]:
    """All face walks of the map, boundary points acting as univalent vertices."""
    n = len(w.partner)
    base = w.base
    seen = [False] * n
    out = []
    for e in range(n):
        if seen[e]:
            continue
        walk = []
        x = e
        while not seen[x]:
            seen[x] = True
            walk.append(x)
            p = w.partner[x]
            x = _rot(p) if p < base else p
        out.append(tuple(walk))
    return out


def _closed_vertices(w: WebDiagram) -> list[bool]:
    """Mark vertices lying in components that do not reach the boundary."""
    reached = [False] * w.nv
    _bfs(w, (w.partner[b] for b in range(w.base, len(w.partner))), reached)
    return [not r for r in reached]


def candidate_faces(w: WebDiagram) -> list[tuple[int, ...]]:
    """Face walks that may be reduced: those not touching the boundary.

    For components without boundary every face qualifies, since a closed web
    can be isotoped on the sphere so that any face is bounded.
    """
    base = w.base
    return [f for f in faces(w) if all(e < base for e in f)]


def internal_faces(w: WebDiagram) -> list[int]:
    """Side counts of bounded faces, with a free circle counted as a 0-gon.

    A component without boundary has one face that merges with the region
    around it; its largest face is taken to be that one.
    """
    closed = _closed_vertices(w)
    sizes = []
    by_comp: dict[int, list[int]] = {}
    comp_of = _vertex_components(w)
    for f in candidate_faces(w):
        v = f[0] // 3
        if closed[v]:
            by_comp.setdefault(comp_of[v], []).append(len(f))
        else:
            sizes.append(len(f))
    for sz in by_comp.values():
        sz.sort()
        sizes.extend(sz[:-1])
    sizes.extend([0] * w.loops)
    return sorted(sizes)


def _vertex_components(w: WebDiagram) -> list[int]:
    comp = [-1] * w.nv
    base = w.base
    c = 0
    for v in range(w.nv):
        if comp[v] >= 0:
            continue
        stack = [v]
        comp[v] = c
        while stack:
            u = stack.pop()
            for s in range(3):
                p = w.partner[3 * u + s]
                if p < base and comp[p // 3] < 0:
                    comp[p // 3] = c
                    stack.append(p // 3)
        c += 1
    return comp


def is_basis_web(w: WebDiagram) -> bool:
    """No circles and every reducible face has at least six sides."""
    if w.loops:
        return False
    return all(len(f) >= 6 for f in candidate_faces(w))


def boundary_reducer_scan(w: WebDiagram) -> dict[str, tuple[int, str] | None]:
    """Locate a vertex or arc touching two adjacent top points and two adjacent
    bottom points, reported as ``(position, generator name)``."""
    base = w.base
    nd = len(w.dom)

    def scan(start: int, count: int, signs: str, top: bool) -> tuple[int, str] | None:
        for i in range(count - 1):
            a, b = start + i, start + i + 1
            pa, pb = w.partner[a], w.partner[b]
            pair = signs[i : i + 2]
            if pa == b:
                return (i, f"b[{pair}]" if top else f"d[{pair}]")
            if pa < base and pb < base and pa // 3 == pb // 3:
                one = "-" if pair[0] == "+" else "+"
                return (i, f"t[{one};{pair}]" if top else f"t[{pair};{one}]")
        return None

    return {
        "top": scan(base + nd, len(w.cod), w.cod, True),
        "bottom": scan(base, nd, w.dom, False),
    }


# JSON

def to_json_obj(w: WebDiagram) -> dict:
    """Half-edge form: every end is a half-edge, every vertex lists its ends ccw."""
    base = w.base
    nd = len(w.dom)
    vertices = []
    for v, s in enumerate(w.src):
        vertices.append({"id": v, "kind": "src" if s else "sink", "rot": [3 * v, 3 * v + 1, 3 * v + 2]})
    for i in range(len(w.partner) - base):
        kind, pos = ("dom", i) if i < nd else ("cod", i - nd)
        vertices.append({"id": w.nv + i, "kind": kind, "pos": pos, "rot": [base + i]})
    halfedges = []
    for e, p in enumerate(w.partner):
        vid = e // 3 if e < base else w.nv + (e - base)
        halfedges.append({"id": e, "twin": p, "vertex": vid, "dir": "out" if w.is_out(e) else "in"})
    obj = {"domain": w.dom, "codomain": w.cod, "vertices": vertices, "halfedges": halfedges}
    if w.loops:
        obj["loops"] = w.loops
    return obj


def from_json_obj(obj: dict) -> WebDiagram:
    """Inverse of :func:`to_json_obj`; accepts arbitrary ids and validates."""
    try:
        dom = normalize_signs(obj["domain"])
        cod = normalize_signs(obj["codomain"])
        hes = {h["id"]: h for h in obj["halfedges"]}
        verts = obj["vertices"]
        tri = [v for v in verts if v["kind"] in ("src", "sink")]
        bdry = {("dom", v["pos"]): v for v in verts if v["kind"] == "dom"}
        bdry.update({("cod", v["pos"]): v for v in verts if v["kind"] == "cod"})
    except (KeyError, TypeError) as exc:
        raise WebError(f"malformed web JSON: {exc}") from None
    nv = len(tri)
    base = 3 * nv
    newend: dict[object, int] = {}
    src = []
    for k, v in enumerate(tri):
        if len(v["rot"]) != 3:
            raise WebError(f"vertex {v['id']} is not trivalent")
        src.append(v["kind"] == "src")
        for s, h in enumerate(v["rot"]):
            newend[h] = 3 * k + s
    for i in range(len(dom)):
        v = bdry.get(("dom", i))
        if v is None or len(v["rot"]) != 1:
            raise WebError(f"missing domain point {i}")
        newend[v["rot"][0]] = base + i
    for j in range(len(cod)):
        v = bdry.get(("cod", j))
        if v is None or len(v["rot"]) != 1:
            raise WebError(f"missing codomain point {j}")
        newend[v["rot"][0]] = base + len(dom) + j
    if len(newend) != len(hes) or len(bdry) != len(dom) + len(cod):
        raise WebError("half-edges and vertices do not match")
    partner = [0] * len(newend)
    for h, e in newend.items():
        twin = hes[h]["twin"]
        if twin not in newend:
            raise WebError(f"half-edge {h} has unknown twin {twin}")
        partner[e] = newend[twin]
    w = WebDiagram(dom, cod, tuple(src), tuple(partner), int(obj.get("loops", 0)))
    validate(w)
    for h, e in newend.items():
        if (hes[h]["dir"] == "out") != w.is_out(e):
            raise WebError(f"half-edge {h} direction disagrees with vertex kind or boundary sign")
    return w


def to_json(w: WebDiagram) -> str:
    return json.dumps(to_json_obj(w), sort_keys=True, separators=(",", ":"))


def from_json(text: str) -> WebDiagram:
    return from_json_obj(json.loads(text))


_GENERATORS = _generators()
